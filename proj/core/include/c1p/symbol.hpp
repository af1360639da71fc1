#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace c1p {

/// Atomic alphabet element. Tokens are nonempty, printable, and contain no
/// whitespace or parentheses. Ordering is plain token (byte) order, which
/// fixes the lexicographic order of every string set in the library.
class Symbol {
 public:
  explicit Symbol(std::string token);

  const std::string& token() const noexcept { return token_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend std::strong_ordering operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string token_;
};

using SymbolString = std::vector<Symbol>;

bool is_valid_token(std::string_view token) noexcept;

/// True for tokens the reductions generate: `$`, `#`, `c_<v>`, `cp_<v>` and
/// `d_<i>_<j>` with decimal vertex ids.
bool is_reserved_token(std::string_view token) noexcept;

namespace reserved {
Symbol dollar();
Symbol hash();
Symbol vertex(std::uint32_t v);
Symbol c(std::uint32_t v);
Symbol c_prime(std::uint32_t v);
Symbol d(std::uint32_t i, std::uint32_t j);
}  // namespace reserved

/// Tokens joined by `sep`.
std::string join(const SymbolString& s, std::string_view sep = " ");

/// Whitespace-separated tokens. Throws ParseError on an invalid token.
SymbolString split_tokens(std::string_view text);

SymbolString reversed(const SymbolString& s);

/// Multiset of symbols with positive multiplicities.
class SymbolMultiset {
 public:
  using CountMap = std::map<Symbol, std::size_t>;

  SymbolMultiset() = default;
  SymbolMultiset(std::initializer_list<Symbol> symbols);

  static SymbolMultiset of(const SymbolString& s);
  static SymbolMultiset of_tokens(std::initializer_list<std::string_view> tokens);

  void add(const Symbol& symbol, std::size_t multiplicity = 1);

  std::size_t count(const Symbol& symbol) const;
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  const CountMap& counts() const noexcept { return counts_; }

  /// Multiplicity-wise <= in every symbol.
  bool is_subset_of(const SymbolMultiset& other) const;

  SymbolMultiset& operator+=(const SymbolMultiset& other);
  friend SymbolMultiset operator+(SymbolMultiset a, const SymbolMultiset& b) {
    a += b;
    return a;
  }

  /// Multiset difference, saturating at zero.
  SymbolMultiset minus(const SymbolMultiset& other) const;

  /// Sorted symbols with multiplicity.
  SymbolString elements() const;

  friend bool operator==(const SymbolMultiset&, const SymbolMultiset&) = default;
  friend auto operator<=>(const SymbolMultiset& a, const SymbolMultiset& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  CountMap counts_;
  std::size_t size_ = 0;
};

std::string to_string(const SymbolMultiset& m);

}  // namespace c1p
