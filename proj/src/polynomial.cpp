#include "kneadgen/polynomial.hpp"

#include <ostream>
#include <stdexcept>

#include "kneadgen/errors.hpp"

namespace kneadgen {

namespace {
const BigRational kZero(0);
}

Polynomial::Polynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const BigRational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const BigRational& coeff, std::size_t power) {
  Polynomial out;
  if (coeff != 0) {
    out.coeffs_.assign(power + 1, kZero);
    out.coeffs_[power] = coeff;
  }
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigRational& Polynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : kZero;
}

const BigRational& Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

BigRational Polynomial::evaluate(const BigRational& point) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), kZero);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  Polynomial out;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const BigRational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial& Polynomial::operator/=(const BigRational& scalar) {
  if (scalar == 0) throw std::invalid_argument("division by zero scalar");
  for (auto& c : coeffs_) c /= scalar;
  return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& dividend,
                                                     const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Polynomial quotient;
  Polynomial remainder = dividend;
  const int dd = divisor.degree();
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    const std::size_t shift = static_cast<std::size_t>(remainder.degree() - dd);
    const BigRational factor = remainder.leading_coefficient() / divisor.leading_coefficient();
    const Polynomial term = monomial(factor, shift);
    quotient += term;
    remainder -= term * divisor;
  }
  return {std::move(quotient), std::move(remainder)};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::invalid_argument("monic form of the zero polynomial");
  Polynomial out = *this;
  out /= leading_coefficient();
  return out;
}

Polynomial Polynomial::pow(std::size_t exponent) const {
  Polynomial result{BigRational(1)};
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    // Monic normalization keeps the coefficients small across the Euclid steps.
    Polynomial r = Polynomial::divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? Polynomial{} : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_quotient(a * b, gcd(a, b)).monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [quotient, remainder] = Polynomial::divmod(a, b);
  if (!remainder.is_zero()) throw InternalError("polynomial division expected to be exact");
  return quotient;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const BigRational& c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    const BigRational mag = negative ? BigRational(-c) : c;
    const bool fractional = denominator(mag) != 1;
    std::string mag_str = rational_to_string(mag);
    if (k == 0) {
      out += mag_str;
    } else {
      if (mag != 1) {
        out += fractional ? "(" + mag_str + ")" : mag_str;
      }
      out += 'z';
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace kneadgen
