#include "c1p/symbol.hpp"

#include <algorithm>
#include <cctype>

#include "c1p/errors.hpp"

namespace c1p {
namespace {

bool is_decimal(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

bool is_valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return u > 0x20 && u != 0x7f && ch != '(' && ch != ')';
  });
}

bool is_reserved_token(std::string_view token) noexcept {
  if (token == "$" || token == "#") return true;
  if (token.starts_with("c_")) return is_decimal(token.substr(2));
  if (token.starts_with("cp_")) return is_decimal(token.substr(3));
  if (token.starts_with("d_")) {
    auto rest = token.substr(2);
    auto sep = rest.find('_');
    if (sep == std::string_view::npos) return false;
    return is_decimal(rest.substr(0, sep)) && is_decimal(rest.substr(sep + 1));
  }
  return false;
}

Symbol::Symbol(std::string token) : token_(std::move(token)) {
  if (!is_valid_token(token_)) {
    throw ParseError("invalid symbol token '" + token_ + "'");
  }
}

namespace reserved {
Symbol dollar() { return Symbol("$"); }
Symbol hash() { return Symbol("#"); }
Symbol vertex(std::uint32_t v) { return Symbol(std::to_string(v)); }
Symbol c(std::uint32_t v) { return Symbol("c_" + std::to_string(v)); }
Symbol c_prime(std::uint32_t v) { return Symbol("cp_" + std::to_string(v)); }
Symbol d(std::uint32_t i, std::uint32_t j) {
  return Symbol("d_" + std::to_string(i) + "_" + std::to_string(j));
}
}  // namespace reserved

std::string join(const SymbolString& s, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += sep;
    out += s[i].token();
  }
  return out;
}

SymbolString split_tokens(std::string_view text) {
  SymbolString out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(std::string(text.substr(start, i - start)));
  }
  return out;
}

SymbolString reversed(const SymbolString& s) { return SymbolString(s.rbegin(), s.rend()); }

SymbolMultiset::SymbolMultiset(std::initializer_list<Symbol> symbols) {
  for (const auto& s : symbols) add(s);
}

SymbolMultiset SymbolMultiset::of(const SymbolString& s) {
  SymbolMultiset m;
  for (const auto& sym : s) m.add(sym);
  return m;
}

SymbolMultiset SymbolMultiset::of_tokens(std::initializer_list<std::string_view> tokens) {
  SymbolMultiset m;
  for (auto t : tokens) m.add(Symbol(std::string(t)));
  return m;
}

void SymbolMultiset::add(const Symbol& symbol, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  counts_[symbol] += multiplicity;
  size_ += multiplicity;
}

std::size_t SymbolMultiset::count(const Symbol& symbol) const {
  auto it = counts_.find(symbol);
  return it == counts_.end() ? 0 : it->second;
}

bool SymbolMultiset::is_subset_of(const SymbolMultiset& other) const {
  if (size_ > other.size_) return false;
  return std::all_of(counts_.begin(), counts_.end(),
                     [&](const auto& kv) { return kv.second <= other.count(kv.first); });
}

SymbolMultiset& SymbolMultiset::operator+=(const SymbolMultiset& other) {
  for (const auto& [sym, k] : other.counts_) add(sym, k);
  return *this;
}

SymbolMultiset SymbolMultiset::minus(const SymbolMultiset& other) const {
  SymbolMultiset out;
  for (const auto& [sym, k] : counts_) {
    std::size_t take = other.count(sym);
    if (k > take) out.add(sym, k - take);
  }
  return out;
}

SymbolString SymbolMultiset::elements() const {
  SymbolString out;
  out.reserve(size_);
  for (const auto& [sym, k] : counts_) out.insert(out.end(), k, sym);
  return out;
}

std::string to_string(const SymbolMultiset& m) {
  return "{" + join(m.elements(), ",") + "}";
}

}  // namespace c1p
