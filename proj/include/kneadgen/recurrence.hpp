#pragma once

#include <cstddef>
#include <vector>

#include "kneadgen/matrix.hpp"

namespace kneadgen {

// An s-periodic infinite-order linear recurrence
//     x_{n+1} = sum_{i>=0} A_i x_{n-i},   x_n in Q^p,
// with p x p rational coefficient matrices satisfying A_{n+s} = A_n.
// Immutable after construction.
class RecurrenceSpec {
 public:
  // coeffs[k] = A_k for k = 0..s-1. Requires p >= 1, s >= 1, coeffs.size()
  // == s and every matrix p x p; throws std::invalid_argument otherwise.
  RecurrenceSpec(std::size_t p, std::size_t s, std::vector<RationalMatrix> coeffs);

  std::size_t dimension() const { return p_; }  // p
  std::size_t period() const { return s_; }     // s

  // A_n = coeffs[n mod s].
  const RationalMatrix& coeff_at(std::size_t n) const { return coeffs_[n % s_]; }
  const std::vector<RationalMatrix>& coefficients() const { return coeffs_; }

  // Number of spanning generating functions, (s+1)p.
  std::size_t spanning_count() const { return (s_ + 1) * p_; }

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;

 private:
  std::size_t p_;
  std::size_t s_;
  std::vector<RationalMatrix> coeffs_;
};

}  // namespace kneadgen
