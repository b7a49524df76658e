#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace kneadgen {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept canonical at all times:
// gcd(|num|, den) = 1, den >= 1, zero is 0/1.
using BigRational = boost::multiprecision::cpp_rational;

// Builds num/den in canonical form; den may be negative (the sign moves to
// the numerator). Throws std::invalid_argument on a zero denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

// Parses "a" or "a/b" (optional sign on either part, no whitespace).
// Throws std::invalid_argument on malformed input or a zero denominator.
BigRational parse_rational(std::string_view text);

// "a" when the denominator is 1, "a/b" otherwise. Locale-independent.
std::string rational_to_string(const BigRational& value);

}  // namespace kneadgen
