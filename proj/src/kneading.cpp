#include "kneadgen/kneading.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kneadgen {

namespace {

void check_alpha_beta(const RecurrenceSpec& spec, std::size_t alpha, std::size_t beta) {
  if (alpha < 1 || alpha > spec.dimension()) {
    throw std::invalid_argument("alpha out of range: " + std::to_string(alpha) +
                                " (p = " + std::to_string(spec.dimension()) + ")");
  }
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
}

// 1 - z^s, the common denominator of every kneading increment.
Polynomial one_minus_z_to(std::size_t s) {
  Polynomial out = Polynomial::monomial(BigRational(-1), s);
  out += Polynomial{BigRational(1)};
  return out;
}

// I - zM entrywise.
RatFuncMatrix identity_minus_z(const RatFuncMatrix& m) {
  const RationalFunction z{Polynomial::monomial(BigRational(1), 1)};
  RatFuncMatrix out = RatFuncMatrix::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) -= z * m(i, j);
  }
  return out;
}

}  // namespace

RationalFunction kneading_increment(const RecurrenceSpec& spec, std::size_t alpha,
                                    std::size_t beta) {
  check_alpha_beta(spec, alpha, beta);
  const std::size_t p = spec.dimension();
  const std::size_t s = spec.period();
  const std::size_t q = beta / p;
  const std::size_t r = beta % p;
  // p | beta: component p with shift q-1; otherwise component r with shift q.
  const std::size_t column = (r == 0) ? p : r;
  const std::size_t shift = (r == 0) ? q - 1 : q;

  std::vector<BigRational> numerator(s);
  for (std::size_t k = 0; k < s; ++k) {
    numerator[k] = spec.coeff_at(k + shift)(alpha - 1, column - 1);
  }
  return RationalFunction(Polynomial(std::move(numerator)), one_minus_z_to(s));
}

RatFuncMatrix kneading_matrix(const RecurrenceSpec& spec) {
  const std::size_t p = spec.dimension();
  RatFuncMatrix out(p, p);
  for (std::size_t alpha = 1; alpha <= p; ++alpha) {
    for (std::size_t beta = 1; beta <= p; ++beta) {
      out(alpha - 1, beta - 1) = kneading_increment(spec, alpha, beta);
    }
  }
  return out;
}

RatFuncMatrix extended_kneading_matrix(const RecurrenceSpec& spec, std::size_t alpha,
                                       std::size_t beta) {
  check_alpha_beta(spec, alpha, beta);
  const std::size_t p = spec.dimension();
  RatFuncMatrix out(p + 1, p + 1);
  for (std::size_t i = 1; i <= p; ++i) {
    for (std::size_t j = 1; j <= p; ++j) {
      out(i - 1, j - 1) = kneading_increment(spec, i, j);
    }
    out(i - 1, p) = kneading_increment(spec, i, beta);
  }
  for (std::size_t j = 1; j <= p; ++j) {
    out(p, j - 1) = RationalFunction(BigRational(alpha == j ? 1 : 0));
  }
  out(p, p) = RationalFunction(BigRational(alpha == beta ? 1 : 0));
  return out;
}

RationalFunction kneading_determinant(const RecurrenceSpec& spec) {
  return det(identity_minus_z(kneading_matrix(spec)));
}

RationalFunction extended_kneading_determinant(const RecurrenceSpec& spec, std::size_t alpha,
                                               std::size_t beta) {
  return det(identity_minus_z(extended_kneading_matrix(spec, alpha, beta)));
}

}  // namespace kneadgen
