#pragma once

#include <cstddef>

#include "kneadgen/rational_function.hpp"
#include "kneadgen/recurrence.hpp"

namespace kneadgen {

// Kneading increment K(alpha, beta) in closed rational form. With q, r the
// quotient and remainder of beta by p:
//
//   K(alpha, beta) = (sum_{k=0}^{s-1} A_{k+q-1}(alpha, p) z^k) / (1 - z^s)   if p | beta,
//                    (sum_{k=0}^{s-1} A_{k+q}(alpha, r) z^k) / (1 - z^s)     otherwise,
//
// equal to the formal series sum_{n>=0} A_{n+q-1}(alpha, p) z^n
// (resp. sum_{n>=0} A_{n+q}(alpha, r) z^n). alpha is 1..p, beta >= 1;
// throws std::invalid_argument when out of range.
RationalFunction kneading_increment(const RecurrenceSpec& spec, std::size_t alpha,
                                    std::size_t beta);

// p x p matrix with entry (alpha, beta) = K(alpha, beta), 1 <= alpha, beta <= p.
RatFuncMatrix kneading_matrix(const RecurrenceSpec& spec);

// (p+1) x (p+1) matrix: top-left block K, last column K(., beta), bottom row
// the Kronecker deltas (d(alpha,1), ..., d(alpha,p), d(alpha,beta)).
RatFuncMatrix extended_kneading_matrix(const RecurrenceSpec& spec, std::size_t alpha,
                                       std::size_t beta);

// Delta = det(I - zK). Equals 1 at z = 0.
RationalFunction kneading_determinant(const RecurrenceSpec& spec);

// Delta_alpha(beta) = det(I - zK_alpha(beta)) with the (p+1) x (p+1) identity.
RationalFunction extended_kneading_determinant(const RecurrenceSpec& spec, std::size_t alpha,
                                               std::size_t beta);

}  // namespace kneadgen
