#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "c1p/multiset.hpp"

namespace c1p {

/// {"R": {"a":1,"b":2}, "F": [{"b":1,"c":1}, ...]}. Throws ParseError on
/// malformed JSON or zero/negative multiplicities, InvalidInstance if the
/// instance invariants fail.
FmoInstance parse_fmo_instance(std::string_view json_text);

/// Pretty-printed, keys in symbol order.
std::string to_json(const FmoInstance& instance);

/// One string per line with space-separated tokens, then `# count=<n>`.
std::string format_string_list(const std::vector<SymbolString>& strings);

}  // namespace c1p
