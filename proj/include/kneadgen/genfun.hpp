#pragma once

#include <cstddef>
#include <vector>

#include "kneadgen/kneading.hpp"
#include "kneadgen/orbit.hpp"
#include "kneadgen/rational_function.hpp"
#include "kneadgen/recurrence.hpp"

namespace kneadgen {

// G(u) = (G_1, ..., G_p): one rational function per component of the orbit
// series sum_{n>=0} v_n z^n. Every component denominator has a nonzero
// constant term, so the power-series expansion at z = 0 is well defined.
struct GeneratingFunctionVector {
  std::vector<RationalFunction> components;

  friend bool operator==(const GeneratingFunctionVector&,
                         const GeneratingFunctionVector&) = default;
};

// G(e_beta), computed per component as (Delta - Delta_alpha(beta)) / (z Delta).
// Throws InternalError if z fails to divide Delta - Delta_alpha(beta) (the
// mathematics guarantees it; a failure means the engine is corrupted).
GeneratingFunctionVector generating_function(const RecurrenceSpec& spec, std::size_t beta);

// [G(e_1), ..., G(e_{(s+1)p})] -- a spanning set of the generating-function
// space.
std::vector<GeneratingFunctionVector> spanning_set(const RecurrenceSpec& spec);

struct BasisReport {
  std::vector<GeneratingFunctionVector> spanning;  // indexed by beta - 1
  std::vector<std::size_t> selected_betas;         // increasing, the chosen basis
  std::size_t dimension = 0;
};

// Flattens the spanning set over a common polynomial denominator and selects
// the lexicographically first linearly independent subset by rank over Q.
BasisReport basis_and_dimension(const RecurrenceSpec& spec);

// G(u) by linearity: the finite sum of c_beta G(e_beta) over the standard-
// basis coordinates of u, folding beta > (s+1)p down via the periodicity
// G(e_{beta+sp}) = G(e_beta) for beta > p.
GeneratingFunctionVector generating_function_of(const RecurrenceSpec& spec,
                                                const InitialCondition& u);

}  // namespace kneadgen
