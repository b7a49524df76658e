#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "kneadgen/rational.hpp"
#include "kneadgen/recurrence.hpp"

namespace kneadgen {

// Position of the standard basis vector e_beta of U: e_beta carries the
// component-th unit vector of Q^p in block `slot` (0-based), zero elsewhere.
struct BasisIndex {
  std::size_t slot;       // 0-based block index
  std::size_t component;  // 1..p

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

// beta = qp + r maps to (q, r), except r = 0 which maps to (q-1, p).
// Inverse of encode_basis_index. beta >= 1, p >= 1.
BasisIndex decode_basis_index(std::size_t beta, std::size_t p);

// beta = slot * p + component.
std::size_t encode_basis_index(const BasisIndex& index, std::size_t p);

// Finitely supported initial condition u = (u_0, u_1, ...), u_n in Q^p.
// Only nonzero blocks are stored.
class InitialCondition {
 public:
  InitialCondition() = default;

  static InitialCondition basis(std::size_t beta, std::size_t p);

  // Stores `value` as block `slot`; an all-zero value clears the slot.
  void set(std::size_t slot, std::vector<BigRational> value);

  const std::map<std::size_t, std::vector<BigRational>>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  std::size_t max_slot() const;  // 0 when empty

  // Block `slot` as a length-p vector (zero when absent).
  std::vector<BigRational> block(std::size_t slot, std::size_t p) const;

  friend bool operator==(const InitialCondition&, const InitialCondition&) = default;

 private:
  std::map<std::size_t, std::vector<BigRational>> support_;
};

// Forward orbit v_0, v_1, ..., v_N of a solution.
struct OrbitSegment {
  std::vector<std::vector<BigRational>> values;

  friend bool operator==(const OrbitSegment&, const OrbitSegment&) = default;
};

// Iterates the recurrence directly: v_0 = u_0 and
// v_{n+1} = sum_i A_i v_{n-i} with v_{-m} = u_m. The sum is finite because
// u is finitely supported. Every block of u must have length p.
OrbitSegment iterate(const RecurrenceSpec& spec, const InitialCondition& u, std::size_t steps);

}  // namespace kneadgen
