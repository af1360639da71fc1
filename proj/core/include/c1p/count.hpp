#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace c1p {

/// Arbitrary-precision nonnegative integer used for every frontier, solution
/// and path count.
using Count = boost::multiprecision::cpp_int;

Count factorial(unsigned n);
Count pow2(unsigned n);

std::string to_decimal(const Count& value);

/// Parses a nonnegative decimal integer. Throws ParseError on bad input.
Count parse_count(std::string_view text);

/// Integer square root when `value` is a perfect square.
std::optional<Count> exact_sqrt(const Count& value);

/// Quotient when `denominator` divides `numerator` exactly.
std::optional<Count> exact_div(const Count& numerator, const Count& denominator);

}  // namespace c1p
