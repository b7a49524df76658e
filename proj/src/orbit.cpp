#include "kneadgen/orbit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kneadgen {

BasisIndex decode_basis_index(std::size_t beta, std::size_t p) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const std::size_t q = beta / p;
  const std::size_t r = beta % p;
  if (r == 0) return {q - 1, p};
  return {q, r};
}

std::size_t encode_basis_index(const BasisIndex& index, std::size_t p) {
  if (index.component < 1 || index.component > p) {
    throw std::invalid_argument("component out of range");
  }
  return index.slot * p + index.component;
}

InitialCondition InitialCondition::basis(std::size_t beta, std::size_t p) {
  const BasisIndex where = decode_basis_index(beta, p);
  std::vector<BigRational> block(p, BigRational(0));
  block[where.component - 1] = 1;
  InitialCondition out;
  out.set(where.slot, std::move(block));
  return out;
}

void InitialCondition::set(std::size_t slot, std::vector<BigRational> value) {
  const bool all_zero =
      std::all_of(value.begin(), value.end(), [](const BigRational& c) { return c == 0; });
  if (all_zero) {
    support_.erase(slot);
  } else {
    support_[slot] = std::move(value);
  }
}

std::size_t InitialCondition::max_slot() const {
  return support_.empty() ? 0 : support_.rbegin()->first;
}

std::vector<BigRational> InitialCondition::block(std::size_t slot, std::size_t p) const {
  const auto it = support_.find(slot);
  if (it == support_.end()) return std::vector<BigRational>(p, BigRational(0));
  return it->second;
}

OrbitSegment iterate(const RecurrenceSpec& spec, const InitialCondition& u, std::size_t steps) {
  const std::size_t p = spec.dimension();
  for (const auto& [slot, value] : u.support()) {
    if (value.size() != p) {
      throw std::invalid_argument("initial-condition block at slot " + std::to_string(slot) +
                                  " has length " + std::to_string(value.size()) +
                                  ", expected " + std::to_string(p));
    }
  }
  const std::size_t depth = u.max_slot();

  OrbitSegment orbit;
  orbit.values.reserve(steps + 1);
  orbit.values.push_back(u.block(0, p));  // v_0 = u_0

  for (std::size_t n = 0; n < steps; ++n) {
    std::vector<BigRational> next(p, BigRational(0));
    // v_{n+1} = sum_i A_i v_{n-i}; v at negative index -m is u_m, so the sum
    // stops at i = n + depth.
    for (std::size_t i = 0; i <= n + depth; ++i) {
      const std::vector<BigRational>* x = nullptr;
      if (i <= n) {
        x = &orbit.values[n - i];
      } else {
        const auto it = u.support().find(i - n);
        if (it == u.support().end()) continue;
        x = &it->second;
      }
      const RationalMatrix& a = spec.coeff_at(i);
      for (std::size_t row = 0; row < p; ++row) {
        for (std::size_t col = 0; col < p; ++col) {
          if (a(row, col) == 0 || (*x)[col] == 0) continue;
          next[row] += a(row, col) * (*x)[col];
        }
      }
    }
    orbit.values.push_back(std::move(next));
  }
  return orbit;
}

}  // namespace kneadgen
