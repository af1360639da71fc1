#include "c1p/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "c1p/errors.hpp"

namespace c1p {

Graph::Graph(std::uint32_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), adjacency_(static_cast<std::size_t>(vertex_count) + 1) {
  if (n_ == 0) throw InvalidInstance("graph needs at least one vertex");
  for (auto& [a, b] : edges) {
    if (a < 1 || a > n_ || b < 1 || b > n_) {
      throw InvalidInstance("edge {" + std::to_string(a) + "," + std::to_string(b) +
                            "} uses a vertex outside 1.." + std::to_string(n_));
    }
    if (a == b) throw InvalidInstance("self-loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidInstance("repeated edge {" + std::to_string(dup->first) + "," +
                          std::to_string(dup->second) + "}");
  }
  edges_ = std::move(edges);
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || a > n_ || b < 1 || b > n_) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::is_connected() const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<Vertex> stack{1};
  seen[1] = true;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

std::optional<std::string> ham_instance_violation(const Graph& g, Vertex w, Vertex s) {
  const auto n = g.vertex_count();
  if (w < 1 || w > n) return "source vertex " + std::to_string(w) + " is not in 1.." + std::to_string(n);
  if (s < 1 || s > n) {
    return "destination vertex " + std::to_string(s) + " is not in 1.." + std::to_string(n);
  }
  if (w == s) return "source and destination must differ";
  if (!g.is_connected()) return "connectivity: the graph must be connected";
  if (g.degree(w) < 1) return "degree: source vertex " + std::to_string(w) + " has degree 0";
  if (g.degree(s) < 1) return "degree: destination vertex " + std::to_string(s) + " has degree 0";
  for (Vertex v = 1; v <= n; ++v) {
    if (v != w && v != s && g.degree(v) < 2) {
      return "degree: inner vertex " + std::to_string(v) + " has degree " +
             std::to_string(g.degree(v)) + " (at least 2 required)";
    }
  }
  return std::nullopt;
}

HamInstance::HamInstance(Graph graph, Vertex source, Vertex destination)
    : graph_(std::move(graph)), w_(source), s_(destination) {
  if (auto why = ham_instance_violation(graph_, w_, s_)) throw InvalidInstance(*why);
}

namespace {

std::vector<std::uint32_t> read_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() ||
        (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw ParseError("graph file line " + std::to_string(line_no) +
                       ": expected whitespace-separated nonnegative integers");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

HamInstance parse_graph_file(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    auto numbers = read_numbers(line, line_no);
    if (numbers.empty()) continue;
    if (rows.empty() ? numbers.size() != 4 : numbers.size() != 2) {
      throw ParseError("graph file line " + std::to_string(line_no) +
                       (rows.empty() ? ": header must be `n m w s`" : ": edge line must be `u v`"));
    }
    rows.push_back(std::move(numbers));
  }
  if (rows.empty()) throw ParseError("graph file is empty");
  const auto& header = rows.front();
  const std::uint32_t n = header[0];
  const std::uint32_t m = header[1];
  if (rows.size() - 1 != m) {
    throw ParseError("graph file declares " + std::to_string(m) + " edges but lists " +
                     std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < rows.size(); ++i) edges.emplace_back(rows[i][0], rows[i][1]);
  return HamInstance(Graph(n, std::move(edges)), header[2], header[3]);
}

std::string to_graph_file(const HamInstance& instance) {
  std::ostringstream out;
  const auto& g = instance.graph();
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << instance.source() << ' '
      << instance.destination() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace c1p
