#pragma once

// Internal: compact fixed-width string sets over an interned alphabet.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "c1p/errors.hpp"
#include "c1p/symbol.hpp"

namespace c1p::detail {

using Letter = char16_t;
using WordView = std::u16string_view;

/// Maps symbols to letters in token order, so that comparing letter
/// sequences is the same as comparing token sequences.
class Alphabet {
 public:
  explicit Alphabet(const SymbolMultiset& symbols) {
    symbols_.reserve(symbols.counts().size());
    for (const auto& [sym, k] : symbols.counts()) symbols_.push_back(sym);
    if (symbols_.size() > std::numeric_limits<Letter>::max()) {
      throw InvalidInstance("alphabet too large");
    }
  }

  std::size_t size() const noexcept { return symbols_.size(); }

  Letter letter(const Symbol& s) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s) {
      throw PreconditionViolation("symbol '" + s.token() + "' is not in the alphabet");
    }
    return static_cast<Letter>(it - symbols_.begin());
  }

  const Symbol& symbol(Letter l) const { return symbols_[l]; }

  SymbolString decode(WordView w) const {
    SymbolString out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(symbols_[l]);
    return out;
  }

  std::u16string encode(const SymbolString& s) const {
    std::u16string out;
    out.reserve(s.size());
    for (const auto& sym : s) out.push_back(letter(sym));
    return out;
  }

 private:
  std::vector<Symbol> symbols_;
};

/// Set of equal-length words stored back to back. After `normalize` the
/// words are sorted and unique, and the lookup helpers may be used.
class WordSet {
 public:
  explicit WordSet(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  WordView operator[](std::size_t i) const { return WordView(data_.data() + i * width_, width_); }

  void append(WordView w) {
    data_.insert(data_.end(), w.begin(), w.end());
    ++count_;
  }

  void normalize() {
    if (count_ < 2) return;
    std::vector<std::uint32_t> order(count_);
    for (std::size_t i = 0; i < count_; ++i) order[i] = static_cast<std::uint32_t>(i);
    std::sort(order.begin(), order.end(),
              [this](std::uint32_t a, std::uint32_t b) { return (*this)[a] < (*this)[b]; });
    auto last = std::unique(order.begin(), order.end(), [this](std::uint32_t a, std::uint32_t b) {
      return (*this)[a] == (*this)[b];
    });
    std::vector<Letter> packed;
    packed.reserve(static_cast<std::size_t>(last - order.begin()) * width_);
    for (auto it = order.begin(); it != last; ++it) {
      auto w = (*this)[*it];
      packed.insert(packed.end(), w.begin(), w.end());
    }
    data_ = std::move(packed);
    count_ = static_cast<std::size_t>(last - order.begin());
  }

  void truncate(std::size_t n) {
    if (n >= count_) return;
    count_ = n;
    data_.resize(n * width_);
  }

  bool contains(WordView w) const {
    auto i = lower_bound(w);
    return i < count_ && (*this)[i] == w;
  }

  /// Some member starts with `prefix`.
  bool has_prefix(WordView prefix) const {
    auto i = lower_bound(prefix);
    return i < count_ && (*this)[i].substr(0, prefix.size()) == prefix;
  }

  friend bool operator==(const WordSet& a, const WordSet& b) {
    return a.width_ == b.width_ && a.count_ == b.count_ && a.data_ == b.data_;
  }

 private:
  std::size_t lower_bound(WordView w) const {
    std::size_t lo = 0;
    std::size_t hi = count_;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if ((*this)[mid] < w) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Letter> data_;
};

}  // namespace c1p::detail
