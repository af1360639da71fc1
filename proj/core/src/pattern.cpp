#include <map>

#include "c1p/errors.hpp"
#include "c1p/multiset.hpp"

namespace c1p {

std::vector<std::size_t> occurrences(const SymbolMultiset& pattern, const SymbolString& s) {
  if (pattern.empty()) throw EmptyPattern("pattern multiset is empty");
  const std::size_t m = pattern.size();
  std::vector<std::size_t> out;
  if (s.size() < m) return out;

  // diff[x] = (count of x in window) - (count of x in pattern); `nonzero`
  // tracks how many symbols currently disagree.
  std::map<Symbol, long> diff;
  std::size_t nonzero = 0;
  auto bump = [&](const Symbol& x, long delta) {
    long& d = diff[x];
    if (d == 0) ++nonzero;
    d += delta;
    if (d == 0) --nonzero;
  };
  for (const auto& [sym, k] : pattern.counts()) bump(sym, -static_cast<long>(k));
  for (std::size_t i = 0; i < m; ++i) bump(s[i], 1);
  if (nonzero == 0) out.push_back(1);
  for (std::size_t i = m; i < s.size(); ++i) {
    bump(s[i], 1);
    bump(s[i - m], -1);
    if (nonzero == 0) out.push_back(i - m + 2);
  }
  return out;
}

bool contains(const SymbolMultiset& pattern, const SymbolString& s) {
  return !occurrences(pattern, s).empty();
}

bool is_sperner(std::span<const SymbolMultiset> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && family[i].is_subset_of(family[j])) return false;
    }
  }
  return true;
}

bool is_strict_sperner(std::span<const SymbolMultiset> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    SymbolMultiset others;
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (j != i) others += family[j];
    }
    if (family[i].is_subset_of(others)) return false;
  }
  return true;
}

}  // namespace c1p
