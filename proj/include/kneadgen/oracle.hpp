#pragma once

#include <cstddef>
#include <vector>

#include "kneadgen/genfun.hpp"
#include "kneadgen/orbit.hpp"
#include "kneadgen/rational_function.hpp"
#include "kneadgen/recurrence.hpp"

namespace kneadgen {

// Power-series coefficients of f at z = 0 up to and including z^order,
// solved term by term from num = den * series. Throws std::domain_error
// ("not expandable at z = 0") when den(0) = 0.
std::vector<BigRational> taylor(const RationalFunction& f, std::size_t order);

// Componentwise expansion: order + 1 vectors in Q^p.
std::vector<std::vector<BigRational>> taylor(const GeneratingFunctionVector& g,
                                             std::size_t order);

struct VerificationReport {
  bool passed = true;
  // Valid only when !passed:
  std::size_t mismatch_index = 0;
  std::vector<BigRational> series_value;  // Taylor side at the mismatch
  std::vector<BigRational> orbit_value;   // direct-iteration side
};

// Compares taylor(G(e_beta), order) against iterate(spec, e_beta, order)
// exactly. A failure is reported, not thrown.
VerificationReport verify(const RecurrenceSpec& spec, std::size_t beta, std::size_t order);

// Series side from series_spec, orbit side from orbit_spec. With two
// different specs this checks that the brute-force orbit genuinely detects a
// perturbed generating-function path.
VerificationReport verify(const RecurrenceSpec& series_spec, const RecurrenceSpec& orbit_spec,
                          std::size_t beta, std::size_t order);

}  // namespace kneadgen
