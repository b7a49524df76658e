#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kneadgen/rational.hpp"

namespace kneadgen {

// Univariate polynomial over Q; coefficient index = power of z.
// Canonical form: no trailing zero coefficients. The zero polynomial is the
// empty coefficient sequence and reports degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<BigRational> coeffs);
  explicit Polynomial(std::vector<BigRational> coeffs);
  explicit Polynomial(const BigRational& constant);

  static Polynomial monomial(const BigRational& coeff, std::size_t power);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  // Coefficient of z^power; 0 beyond the degree.
  const BigRational& coeff(std::size_t power) const;
  const BigRational& leading_coefficient() const;
  BigRational constant_term() const { return coeff(0); }

  BigRational evaluate(const BigRational& point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigRational& scalar);
  Polynomial& operator/=(const BigRational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const BigRational& scalar) { return lhs *= scalar; }
  friend Polynomial operator*(const BigRational& scalar, Polynomial rhs) { return rhs *= scalar; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Division with remainder over Q; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend,
                                                  const Polynomial& divisor);

  // Scaled so the leading coefficient is 1; the polynomial must be nonzero.
  Polynomial monic() const;

  Polynomial pow(std::size_t exponent) const;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// Monic lcm; zero if either argument is zero.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

// Quotient a / b when the division is exact. Throws InternalError on a
// nonzero remainder.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

// Paper-style display, highest power first: "4z^2-7z+1". Non-integer
// coefficients are parenthesized: "(5/4)z^2".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace kneadgen
