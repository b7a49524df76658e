#include "kneadgen/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace kneadgen {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) return BigRational(-num, -den);
  return BigRational(num, den);
}

namespace {

bool is_integer_token(std::string_view text) {
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int's string constructor rejects a leading '+'.
BigInt to_bigint(std::string_view token) {
  if (token.front() == '+') token.remove_prefix(1);
  return BigInt(std::string(token));
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!is_integer_token(num_part)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  if (slash == std::string_view::npos) {
    return BigRational(to_bigint(num_part));
  }
  std::string_view den_part = text.substr(slash + 1);
  if (!is_integer_token(den_part)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  return make_rational(to_bigint(num_part), to_bigint(den_part));
}

std::string rational_to_string(const BigRational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

}  // namespace kneadgen
