#pragma once

#include <iosfwd>
#include <string>

#include "kneadgen/polynomial.hpp"

namespace kneadgen {

// Reduced fraction of polynomials over Q. Canonical form: gcd(num, den) = 1
// and den monic; zero is 0/1. Two values are equal as field elements iff
// their canonical forms are identical, so operator== is member-wise.
class RationalFunction {
 public:
  RationalFunction() : den_{BigRational(1)} {}
  explicit RationalFunction(Polynomial num);
  explicit RationalFunction(const BigRational& constant);
  // Normalizes num/den. Throws std::invalid_argument("division by zero
  // polynomial") when den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // num(point)/den(point); throws std::domain_error on a pole.
  BigRational evaluate(const BigRational& point) const;
  BigRational at_zero() const { return evaluate(BigRational(0)); }

  RationalFunction operator-() const;
  RationalFunction invert() const;  // throws on zero

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);  // throws on zero divisor

  friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs += rhs;
  }
  friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs -= rhs;
  }
  friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs *= rhs;
  }
  friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

// "(num)/(den)" with the canonical monic denominator, or just "num" when the
// denominator is 1: "(4z^2-7z+1)/(z^2-2z+1)".
std::string to_string(const RationalFunction& f);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace kneadgen
