#include "kneadgen/rational_function.hpp"

#include <ostream>
#include <stdexcept>

namespace kneadgen {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_{BigRational(1)} {}

RationalFunction::RationalFunction(const BigRational& constant)
    : num_(constant), den_{BigRational(1)} {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("division by zero polynomial");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial{BigRational(1)};
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  const BigRational lead = den_.leading_coefficient();
  if (lead != 1) {
    num_ /= lead;
    den_ /= lead;
  }
}

BigRational RationalFunction::evaluate(const BigRational& point) const {
  const BigRational d = den_.evaluate(point);
  if (d == 0) throw std::domain_error("pole of the rational function");
  return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::invert() const {
  if (is_zero()) throw std::invalid_argument("division by zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  return *this *= rhs.invert();
}

std::string to_string(const RationalFunction& f) {
  if (f.den() == Polynomial{BigRational(1)}) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << to_string(f);
}

}  // namespace kneadgen
