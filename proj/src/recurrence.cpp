#include "kneadgen/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace kneadgen {

RecurrenceSpec::RecurrenceSpec(std::size_t p, std::size_t s, std::vector<RationalMatrix> coeffs)
    : p_(p), s_(s), coeffs_(std::move(coeffs)) {
  if (p_ == 0) throw std::invalid_argument("p must be >= 1");
  if (s_ == 0) throw std::invalid_argument("s must be >= 1");
  if (coeffs_.size() != s_) {
    throw std::invalid_argument("expected " + std::to_string(s_) + " matrices, found " +
                                std::to_string(coeffs_.size()));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].rows() != p_ || coeffs_[k].cols() != p_) {
      throw std::invalid_argument("matrix " + std::to_string(k) + ": expected " +
                                  std::to_string(p_) + "x" + std::to_string(p_) + ", found " +
                                  std::to_string(coeffs_[k].rows()) + "x" +
                                  std::to_string(coeffs_[k].cols()));
    }
  }
}

}  // namespace kneadgen
