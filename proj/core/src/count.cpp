#include "c1p/count.hpp"

#include <cctype>

#include "c1p/errors.hpp"

namespace c1p {

Count factorial(unsigned n) {
  Count result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

Count pow2(unsigned n) {
  Count result = 1;
  result <<= n;
  return result;
}

std::string to_decimal(const Count& value) { return value.str(); }

Count parse_count(std::string_view text) {
  if (text.empty()) throw ParseError("empty count");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
  }
  return Count(std::string(text));
}

std::optional<Count> exact_sqrt(const Count& value) {
  if (value < 0) return std::nullopt;
  Count remainder;
  Count root = boost::multiprecision::sqrt(value, remainder);
  if (remainder != 0) return std::nullopt;
  return root;
}

std::optional<Count> exact_div(const Count& numerator, const Count& denominator) {
  if (denominator == 0) return std::nullopt;
  Count quotient;
  Count remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) return std::nullopt;
  return quotient;
}

}  // namespace c1p
