#include "c1p/pqtree_io.hpp"

#include <cctype>

#include <json.hpp>

#include "c1p/errors.hpp"

namespace c1p {
namespace {

using ordered_json = nlohmann::ordered_json;

void write_sexpr(const PqNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += node.label().token();
    return;
  }
  out += node.kind() == NodeKind::P ? "(P" : "(Q";
  for (const auto& child : node.children()) {
    out += ' ';
    write_sexpr(child, out);
  }
  out += ')';
}

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  PqNode parse_document() {
    PqNode node = parse_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return node;
  }

 private:
  PqNode parse_node() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') return PqNode::leaf(Symbol(std::string(read_token())));

    ++pos_;
    skip_space();
    auto kind_token = read_token();
    NodeKind kind;
    if (kind_token == "P") {
      kind = NodeKind::P;
    } else if (kind_token == "Q") {
      kind = NodeKind::Q;
    } else {
      fail("expected node kind P or Q, got '" + std::string(kind_token) + "'");
    }
    std::vector<PqNode> children;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) fail("unterminated '('");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      children.push_back(parse_node());
    }
    return PqNode(kind, std::nullopt, std::move(children));
  }

  std::string_view read_token() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    if (pos_ == start) fail("expected a token");
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("s-expression offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ordered_json node_to_json(const PqNode& node) {
  ordered_json j;
  if (node.is_leaf()) {
    j["kind"] = "leaf";
    j["label"] = node.label().token();
    return j;
  }
  j["kind"] = node.kind() == NodeKind::P ? "P" : "Q";
  j["children"] = ordered_json::array();
  for (const auto& child : node.children()) j["children"].push_back(node_to_json(child));
  return j;
}

PqNode node_from_json(const ordered_json& j) {
  if (!j.is_object()) throw ParseError("tree node must be a JSON object");
  auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) throw ParseError("tree node needs a string \"kind\"");
  const auto kind_name = kind_it->get<std::string>();

  std::optional<Symbol> label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw ParseError("\"label\" must be a string");
    label = Symbol(it->get<std::string>());
  }
  std::vector<PqNode> children;
  if (auto it = j.find("children"); it != j.end()) {
    if (!it->is_array()) throw ParseError("\"children\" must be an array");
    for (const auto& c : *it) children.push_back(node_from_json(c));
  }

  NodeKind kind;
  if (kind_name == "leaf") {
    kind = NodeKind::Leaf;
  } else if (kind_name == "P") {
    kind = NodeKind::P;
  } else if (kind_name == "Q") {
    kind = NodeKind::Q;
  } else {
    throw ParseError("unknown node kind '" + kind_name + "'");
  }
  if (kind == NodeKind::Leaf && !label) throw ParseError("leaf node needs a \"label\"");
  if (kind != NodeKind::Leaf && label) throw ParseError(kind_name + " node must not carry a \"label\"");
  return PqNode(kind, std::move(label), std::move(children));
}

}  // namespace

std::string to_sexpr(const PqNode& node) {
  std::string out;
  write_sexpr(node, out);
  return out;
}

std::string to_sexpr(const PqTree& tree) { return to_sexpr(tree.root()); }

PqTree parse_sexpr(std::string_view text) { return PqTree(SexprParser(text).parse_document()); }

std::string to_json(const PqTree& tree) { return node_to_json(tree.root()).dump(); }

PqTree parse_tree_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tree JSON: ") + e.what());
  }
  return PqTree(node_from_json(j));
}

PqTree parse_tree(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_tree_json(text) : parse_sexpr(text);
  }
  throw ParseError("empty tree description");
}

}  // namespace c1p
