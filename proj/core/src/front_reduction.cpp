#include <algorithm>
#include <charconv>
#include <set>

#include "c1p/errors.hpp"
#include "c1p/reduction.hpp"

namespace c1p {
namespace {

PqNode vertex_leaf(Vertex v) { return PqNode::leaf(reserved::vertex(v)); }

Vertex parse_vertex(const Symbol& s, std::uint32_t n) {
  Vertex v = 0;
  const auto& t = s.token();
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || v < 1 || v > n) {
    throw StructureViolation("expected a vertex symbol, got '" + t + "'");
  }
  return v;
}

}  // namespace

FrontReduction build_front_trees(const HamInstance& instance) {
  const Graph& g = instance.graph();
  const Vertex w = instance.source();
  const Vertex s = instance.destination();

  std::vector<PqNode> edge_children;
  edge_children.reserve(g.edge_count() + 2);
  edge_children.push_back(PqNode::leaf(reserved::dollar()));
  edge_children.push_back(PqNode::leaf(reserved::hash()));
  for (const auto& [a, b] : g.edges()) {
    edge_children.push_back(PqNode::q({vertex_leaf(a), vertex_leaf(b)}));
  }
  PqNode t_e = PqNode::p(std::move(edge_children));

  std::vector<PqNode> inner;
  std::vector<PqNode> padding;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    const std::size_t keep = instance.is_endpoint(v) ? 1 : 2;
    if (!instance.is_endpoint(v)) inner.push_back(PqNode::q({vertex_leaf(v), vertex_leaf(v)}));
    for (std::size_t k = keep; k < g.degree(v); ++k) padding.push_back(vertex_leaf(v));
  }
  PqNode t_c = PqNode::q({vertex_leaf(w), PqNode::p(std::move(inner)), vertex_leaf(s)});
  PqNode t_n = PqNode::p(std::move(padding));
  PqNode t_v = PqNode::q({PqNode::leaf(reserved::dollar()), t_c, PqNode::leaf(reserved::hash()), t_n});
  PqNode t_g = PqNode::q({t_v, t_e});

  return FrontReduction{
      canonicalize(PqTree(std::move(t_g))),
      canonicalize(PqTree(std::move(t_v))),
      canonicalize(PqTree(std::move(t_e))),
      std::move(t_c),
      std::move(t_n),
  };
}

Count sigma_h_size_front(const HamInstance& instance) {
  const auto p = static_cast<unsigned>(instance.surplus());
  return 2 * factorial(p) * pow2(p);
}

FrontierSet intersection_front(const HamInstance& instance, std::optional<std::size_t> limit) {
  FrontReduction trees = build_front_trees(instance);
  FrontierSet v = enumerate_frontiers(trees.t_v, limit);
  FrontierSet e = enumerate_frontiers(trees.t_e, limit);
  if (!v.complete || !e.complete) {
    throw EnumerationBudgetExceeded("Fr(T_V) or Fr(T_E) exceeded the enumeration limit");
  }
  FrontierSet out;
  std::set_intersection(v.strings.begin(), v.strings.end(), e.strings.begin(), e.strings.end(),
                        std::back_inserter(out.strings));
  return out;
}

std::vector<Vertex> decode_front_string(const HamInstance& instance, const SymbolString& alpha) {
  const Graph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  const Symbol dollar = reserved::dollar();
  const Symbol hash = reserved::hash();
  if (alpha.size() != 2 * g.edge_count() + 2) {
    throw StructureViolation("intersection string has length " + std::to_string(alpha.size()) +
                             ", expected 2|E|+2");
  }
  auto hash_at = std::find(alpha.begin(), alpha.end(), hash);
  if (hash_at == alpha.end()) throw StructureViolation("intersection string lacks '#'");

  SymbolString tau;
  SymbolString pi;
  if (alpha.front() == dollar) {
    tau.assign(alpha.begin() + 1, hash_at);
    pi.assign(hash_at + 1, alpha.end());
  } else if (alpha.back() == dollar) {
    pi.assign(alpha.begin(), hash_at);
    tau.assign(hash_at + 1, alpha.end() - 1);
  } else {
    throw StructureViolation("'$' is neither first nor last");
  }
  if (tau.size() != 2 * n - 2) {
    throw StructureViolation("coding part has length " + std::to_string(tau.size()) +
                             ", expected 2|V|-2");
  }

  std::vector<Vertex> path;
  path.push_back(parse_vertex(tau.front(), g.vertex_count()));
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (tau[2 * k - 1] != tau[2 * k]) {
      throw StructureViolation("inner vertex of the coding part is not doubled");
    }
    path.push_back(parse_vertex(tau[2 * k - 1], g.vertex_count()));
  }
  path.push_back(parse_vertex(tau.back(), g.vertex_count()));

  std::set<Vertex> distinct(path.begin(), path.end());
  if (distinct.size() != n) throw StructureViolation("decoded sequence repeats a vertex");
  if (!((path.front() == instance.source() && path.back() == instance.destination()) ||
        (path.front() == instance.destination() && path.back() == instance.source()))) {
    throw StructureViolation("decoded sequence does not run between w and s");
  }

  std::multiset<Edge> untraversed(g.edges().begin(), g.edges().end());
  auto take_edge = [&](Vertex a, Vertex b) {
    auto it = untraversed.find(std::minmax(a, b));
    if (it == untraversed.end()) {
      throw StructureViolation("pair {" + std::to_string(a) + "," + std::to_string(b) +
                               "} is not an unused edge");
    }
    untraversed.erase(it);
  };
  for (std::size_t k = 0; k + 1 < path.size(); ++k) take_edge(path[k], path[k + 1]);
  if (pi.size() % 2 != 0) throw StructureViolation("padding part has odd length");
  for (std::size_t k = 0; k < pi.size(); k += 2) {
    take_edge(parse_vertex(pi[k], g.vertex_count()), parse_vertex(pi[k + 1], g.vertex_count()));
  }
  return path;
}

FrontCount count_ham_via_front(const HamInstance& instance, std::optional<std::size_t> limit) {
  FrontReduction trees = build_front_trees(instance);
  FrontCount out;
  out.fr_tv = count_frontiers_multiset(trees.t_v, limit);
  out.fr_te = count_frontiers_multiset(trees.t_e, limit);
  out.fr_tg = count_frontiers_multiset(trees.t_g, limit);
  out.numerator = 2 * out.fr_tv * out.fr_te - out.fr_tg;
  out.p = instance.surplus();
  out.block_size = sigma_h_size_front(instance);
  out.unsquared_quotient = exact_div(out.numerator, out.block_size);

  auto root = exact_sqrt(out.numerator);
  if (!root) {
    throw NonIntegerResult("2|Fr(T_V)||Fr(T_E)| - |Fr(T_G)| = " + to_decimal(out.numerator) +
                           " is not a perfect square");
  }
  out.intersection = *root;
  auto paths = exact_div(out.intersection, out.block_size);
  if (!paths) {
    throw NonIntegerResult("|Fr(T_V) ∩ Fr(T_E)| = " + to_decimal(out.intersection) +
                           " is not a multiple of " + to_decimal(out.block_size));
  }
  out.paths = *paths;
  return out;
}

}  // namespace c1p
