#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kneadgen/rational.hpp"
#include "kneadgen/rational_function.hpp"

namespace kneadgen {

// Dense row-major matrix. T is BigRational, Polynomial or RationalFunction.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw std::invalid_argument("entry count does not match matrix shape");
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
      for (std::size_t k = 0; k < lhs.cols_; ++k)
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    return out;
  }

  friend DenseMatrix operator-(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_)
      throw std::invalid_argument("matrix shape mismatch");
    DenseMatrix out = lhs;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> entries_;
};

using RationalMatrix = DenseMatrix<BigRational>;
using RatFuncMatrix = DenseMatrix<RationalFunction>;

// Exact determinant. Each row is cleared to a common polynomial denominator,
// the polynomial matrix is reduced by fraction-free (Bareiss) elimination,
// and the accumulated denominator is divided out at the end. No fixed size
// limit; exercised to 16x16 in the tests.
// Throws std::invalid_argument on a non-square matrix.
RationalFunction det(const RatFuncMatrix& m);

struct RankSelection {
  std::vector<std::size_t> selected;  // increasing indices into the input list
  std::size_t rank = 0;
};

// Greedy left-to-right Gaussian elimination over Q. `selected` is the
// lexicographically first maximal linearly independent subset of the input
// list; rank == selected.size(). All vectors must have equal length.
RankSelection rank_and_select(const std::vector<std::vector<BigRational>>& vectors);

}  // namespace kneadgen
