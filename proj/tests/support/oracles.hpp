#pragma once

// Test-side reference implementations. They share no code paths with the
// library's engines: frontiers come from materializing every equivalent tree,
// occurrences from comparing every window, #FMO from filtering permutations
// with those window comparisons.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "c1p/graph.hpp"
#include "c1p/multiset.hpp"
#include "c1p/pqtree.hpp"
#include "c1p/symbol.hpp"

namespace c1p::testing {

/// "aacb" -> a a c b, one symbol per character.
inline SymbolString chars(std::string_view s) {
  SymbolString out;
  for (char c : s) out.emplace_back(std::string(1, c));
  return out;
}

inline SymbolString toks(std::string_view s) { return split_tokens(s); }

inline SymbolMultiset ms(std::string_view s) { return SymbolMultiset::of(chars(s)); }

inline std::vector<SymbolString> chars_list(std::initializer_list<std::string_view> list) {
  std::vector<SymbolString> out;
  for (auto s : list) out.push_back(chars(s));
  std::sort(out.begin(), out.end());
  return out;
}

// --- frontiers -------------------------------------------------------------

inline void collect_leaves(const PqNode& n, SymbolString& out) {
  if (n.is_leaf()) {
    out.push_back(n.label());
    return;
  }
  for (const auto& c : n.children()) collect_leaves(c, out);
}

/// Every tree reachable by permuting P-children and reversing Q-children,
/// with repetitions.
inline std::vector<PqNode> all_equivalent_trees(const PqNode& n) {
  if (n.is_leaf()) return {n};
  std::vector<std::vector<PqNode>> variants;
  for (const auto& c : n.children()) variants.push_back(all_equivalent_trees(c));

  std::vector<std::vector<std::size_t>> orders;
  std::vector<std::size_t> idx(n.children().size());
  std::iota(idx.begin(), idx.end(), 0);
  if (n.kind() == NodeKind::P) {
    do orders.push_back(idx);
    while (std::next_permutation(idx.begin(), idx.end()));
  } else {
    orders.push_back(idx);
    orders.emplace_back(idx.rbegin(), idx.rend());
  }

  std::vector<PqNode> out;
  for (const auto& order : orders) {
    std::vector<std::size_t> pick(order.size(), 0);
    while (true) {
      std::vector<PqNode> kids;
      for (std::size_t k = 0; k < order.size(); ++k) kids.push_back(variants[order[k]][pick[k]]);
      out.emplace_back(n.kind(), std::nullopt, std::move(kids));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == variants[order[k]].size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }
  return out;
}

/// How many trees all_equivalent_trees would produce; guards its use.
inline double variant_count(const PqNode& n) {
  if (n.is_leaf()) return 1;
  double v = n.kind() == NodeKind::P ? std::tgamma(static_cast<double>(n.children().size()) + 1) : 2;
  for (const auto& c : n.children()) v *= variant_count(c);
  return v;
}

inline std::vector<SymbolString> brute_frontiers(const PqTree& t) {
  std::set<SymbolString> seen;
  for (const auto& variant : all_equivalent_trees(t.root())) {
    SymbolString s;
    collect_leaves(variant, s);
    seen.insert(std::move(s));
  }
  return {seen.begin(), seen.end()};
}

// --- patterns --------------------------------------------------------------

inline std::vector<std::size_t> brute_occurrences(const SymbolMultiset& p, const SymbolString& s) {
  std::vector<std::size_t> out;
  if (p.size() > s.size()) return out;
  for (std::size_t i = 0; i + p.size() <= s.size(); ++i) {
    SymbolString window(s.begin() + static_cast<std::ptrdiff_t>(i),
                        s.begin() + static_cast<std::ptrdiff_t>(i + p.size()));
    if (SymbolMultiset::of(window) == p) out.push_back(i + 1);
  }
  return out;
}

inline std::vector<SymbolString> brute_fmo(const FmoInstance& inst) {
  SymbolString x = inst.universe.elements();
  std::sort(x.begin(), x.end());
  std::vector<SymbolString> out;
  do {
    bool ok = true;
    for (const auto& m : inst.family) {
      if (brute_occurrences(m, x).empty()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  } while (std::next_permutation(x.begin(), x.end()));
  return out;
}

// --- random generators -----------------------------------------------------

/// Well-formed tree with 1..max_leaves leaves over `alphabet` letters a, b,
/// ...; internal nodes of any arity, including empty and single-child ones
/// when `degenerate` is set.
class TreeGen {
 public:
  TreeGen(std::mt19937& rng, std::size_t alphabet, bool degenerate)
      : rng_(rng), alphabet_(alphabet), degenerate_(degenerate) {}

  PqTree operator()(std::size_t max_leaves) {
    const std::size_t leaves = uniform(1, max_leaves);
    return PqTree(node(leaves));
  }

  /// Labels leaves l0, l1, ... so that they are pairwise distinct.
  static PqNode relabel_distinct(const PqNode& n, std::size_t& next) {
    if (n.is_leaf()) return PqNode::leaf("l" + std::to_string(next++));
    std::vector<PqNode> kids;
    for (const auto& c : n.children()) kids.push_back(relabel_distinct(c, next));
    return PqNode(n.kind(), std::nullopt, std::move(kids));
  }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  PqNode node(std::size_t leaves) {
    if (leaves == 1 && (!degenerate_ || uniform(0, 3) != 0)) {
      return PqNode::leaf(std::string(1, static_cast<char>('a' + uniform(0, alphabet_ - 1))));
    }
    const NodeKind kind = uniform(0, 1) ? NodeKind::P : NodeKind::Q;
    const std::size_t min_kids = degenerate_ ? 1 : std::min<std::size_t>(2, leaves);
    const std::size_t k = leaves == 1 ? 1 : uniform(min_kids, std::min<std::size_t>(leaves, 5));
    if (k == 1 && !degenerate_) return node(leaves);

    // Split `leaves` into k positive parts.
    std::vector<std::size_t> cuts;
    std::vector<std::size_t> pool(leaves - 1);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), rng_);
    cuts.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(leaves);

    std::vector<PqNode> kids;
    for (std::size_t i = 0; i < k; ++i) kids.push_back(node(cuts[i + 1] - cuts[i]));
    if (degenerate_ && uniform(0, 4) == 0) {
      const std::size_t at = uniform(0, kids.size());
      kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(at),
                  PqNode(uniform(0, 1) ? NodeKind::P : NodeKind::Q, std::nullopt, {}));
    }
    return PqNode(kind, std::nullopt, std::move(kids));
  }

  std::mt19937& rng_;
  std::size_t alphabet_;
  bool degenerate_;
};

/// Universe of up to `max_size` symbols from a small alphabet, multiplicities
/// at most 2, and 1..max_family members drawn as random sub-multisets.
inline FmoInstance random_fmo(std::mt19937& rng, std::size_t max_size, std::size_t max_family) {
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  FmoInstance inst;
  const std::size_t size = uniform(1, max_size);
  std::vector<char> letters = {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};
  while (inst.universe.size() < size) {
    const Symbol s(std::string(1, letters[uniform(0, letters.size() - 1)]));
    if (inst.universe.count(s) < 2) inst.universe.add(s);
  }
  const SymbolString all = inst.universe.elements();
  const std::size_t members = uniform(1, max_family);
  for (std::size_t m = 0; m < members; ++m) {
    SymbolString pick = all;
    std::shuffle(pick.begin(), pick.end(), rng);
    pick.erase(pick.begin() + static_cast<std::ptrdiff_t>(uniform(1, std::min<std::size_t>(all.size(), 4))),
               pick.end());
    inst.family.push_back(SymbolMultiset::of(pick));
  }
  return inst;
}

}  // namespace c1p::testing
