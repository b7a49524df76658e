#include "kneadgen/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kneadgen/polynomial.hpp"

namespace kneadgen {

namespace {

// Fraction-free (Bareiss) elimination over Q[z]; every interior division is
// exact. Consumes the matrix.
Polynomial bareiss_determinant(DenseMatrix<Polynomial>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial{BigRational(1)};
  bool negate = false;
  Polynomial prev_pivot{BigRational(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot_row = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!m(i, k).is_zero()) {
          pivot_row = i;
          break;
        }
      }
      if (pivot_row == k) return {};  // zero column, singular
      m.swap_rows(k, pivot_row);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev_pivot);
      }
      m(i, k) = Polynomial{};
    }
    prev_pivot = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace

RationalFunction det(const RatFuncMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return RationalFunction(BigRational(1));

  // Clear each row to its common polynomial denominator, keeping the product
  // to divide back out of the polynomial determinant.
  DenseMatrix<Polynomial> cleared(n, n);
  Polynomial denominator_product{BigRational(1)};
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial row_den{BigRational(1)};
    for (std::size_t j = 0; j < n; ++j) row_den = lcm(row_den, m(i, j).den());
    for (std::size_t j = 0; j < n; ++j) {
      cleared(i, j) = m(i, j).num() * exact_quotient(row_den, m(i, j).den());
    }
    denominator_product *= row_den;
  }
  Polynomial poly_det = bareiss_determinant(cleared);
  return RationalFunction(std::move(poly_det), std::move(denominator_product));
}

RankSelection rank_and_select(const std::vector<std::vector<BigRational>>& vectors) {
  RankSelection out;
  if (vectors.empty()) return out;
  const std::size_t length = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != length) throw std::invalid_argument("vectors must have equal length");
  }

  // Pivot rows kept in reduced form: leading entry 1, zeros recorded below.
  std::vector<std::pair<std::size_t, std::vector<BigRational>>> pivots;
  for (std::size_t index = 0; index < vectors.size(); ++index) {
    std::vector<BigRational> v = vectors[index];
    for (const auto& [col, row] : pivots) {
      if (v[col] == 0) continue;
      const BigRational factor = v[col];
      for (std::size_t j = col; j < length; ++j) v[j] -= factor * row[j];
    }
    std::size_t lead = length;
    for (std::size_t j = 0; j < length; ++j) {
      if (v[j] != 0) {
        lead = j;
        break;
      }
    }
    if (lead == length) continue;  // dependent on the chosen ones
    const BigRational scale = v[lead];
    for (std::size_t j = lead; j < length; ++j) v[j] /= scale;
    pivots.emplace_back(lead, std::move(v));
    out.selected.push_back(index);
  }
  out.rank = out.selected.size();
  return out;
}

}  // namespace kneadgen
