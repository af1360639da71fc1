#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "c1p/count.hpp"
#include "c1p/pqtree.hpp"
#include "c1p/symbol.hpp"

namespace c1p {

// --- pi-patterns -----------------------------------------------------------

/// 1-based positions i where s[i .. i+|pattern|-1] has exactly the multiset
/// `pattern`. Sliding window over a Parikh-difference counter. Throws
/// EmptyPattern for an empty pattern.
std::vector<std::size_t> occurrences(const SymbolMultiset& pattern, const SymbolString& s);

bool contains(const SymbolMultiset& pattern, const SymbolString& s);

/// No member is contained in another member.
bool is_sperner(std::span<const SymbolMultiset> family);

/// No member is contained in the multiset union of all the others.
bool is_strict_sperner(std::span<const SymbolMultiset> family);

// --- #FMO --------------------------------------------------------------------

/// Instance <R, F>: universe multiset and constraint family.
struct FmoInstance {
  SymbolMultiset universe;
  std::vector<SymbolMultiset> family;

  /// Throws InvalidInstance if a member is empty or not contained in R.
  void validate() const;

  friend bool operator==(const FmoInstance&, const FmoInstance&) = default;
};

enum class FmoEngine { Naive, Pruned };

std::string_view to_string(FmoEngine engine) noexcept;
/// Throws ParseError for anything but "naive" or "pruned".
FmoEngine parse_engine(std::string_view name);

/// Strings with Parikh vector R in which every family member occurs, sorted
/// lexicographically. `complete` is false when `limit` truncated the set.
struct SolutionSet {
  std::vector<SymbolString> strings;
  bool complete = true;
};

/// Naive: every distinct permutation of R, filtered by containment; this is
/// the reference semantics. Pruned: left-to-right backtracking that keeps,
/// per pattern, the windows still able to host it and backs off once some
/// pattern has none. Both return the same set.
SolutionSet solve_fmo(const FmoInstance& instance, FmoEngine engine,
                      std::optional<std::size_t> limit = kDefaultEnumerationLimit);

/// Throws EnumerationBudgetExceeded when `limit` is hit.
Count count_fmo(const FmoInstance& instance, FmoEngine engine,
                std::optional<std::size_t> limit = kDefaultEnumerationLimit);

}  // namespace c1p
