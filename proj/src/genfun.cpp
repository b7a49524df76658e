#include "kneadgen/genfun.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "kneadgen/errors.hpp"

namespace kneadgen {

namespace {

// G(e_beta) from a precomputed Delta (shared across beta for one spec).
GeneratingFunctionVector with_delta(const RecurrenceSpec& spec, const RationalFunction& delta,
                                    std::size_t beta) {
  const RationalFunction z_delta =
      RationalFunction(Polynomial::monomial(BigRational(1), 1)) * delta;
  GeneratingFunctionVector out;
  out.components.reserve(spec.dimension());
  for (std::size_t alpha = 1; alpha <= spec.dimension(); ++alpha) {
    const RationalFunction difference = delta - extended_kneading_determinant(spec, alpha, beta);
    if (!difference.is_zero() && difference.num().constant_term() != 0) {
      throw InternalError("z does not divide Delta - Delta_alpha(beta)");
    }
    RationalFunction component = difference / z_delta;
    if (component.den().constant_term() == 0) {
      throw InternalError("generating function not expandable at z = 0");
    }
    out.components.push_back(std::move(component));
  }
  return out;
}

// The representative of beta in 1..(s+1)p under G(e_{beta+sp}) = G(e_beta)
// for beta > p.
std::size_t fold_beta(const RecurrenceSpec& spec, std::size_t beta) {
  const std::size_t p = spec.dimension();
  if (beta <= spec.spanning_count()) return beta;
  return p + 1 + (beta - p - 1) % (spec.period() * p);
}

}  // namespace

GeneratingFunctionVector generating_function(const RecurrenceSpec& spec, std::size_t beta) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  return with_delta(spec, kneading_determinant(spec), beta);
}

std::vector<GeneratingFunctionVector> spanning_set(const RecurrenceSpec& spec) {
  const RationalFunction delta = kneading_determinant(spec);
  std::vector<GeneratingFunctionVector> out;
  out.reserve(spec.spanning_count());
  for (std::size_t beta = 1; beta <= spec.spanning_count(); ++beta) {
    out.push_back(with_delta(spec, delta, beta));
  }
  return out;
}

BasisReport basis_and_dimension(const RecurrenceSpec& spec) {
  BasisReport report;
  report.spanning = spanning_set(spec);

  Polynomial common_den{BigRational(1)};
  for (const auto& vector : report.spanning) {
    for (const auto& component : vector.components) {
      common_den = lcm(common_den, component.den());
    }
  }
  // Reduced numerator degrees are bounded by ps, so this many slots per
  // component always suffices.
  const std::size_t slots = static_cast<std::size_t>(common_den.degree()) +
                            spec.dimension() * spec.period() + 1;

  std::vector<std::vector<BigRational>> flattened;
  flattened.reserve(report.spanning.size());
  for (const auto& vector : report.spanning) {
    std::vector<BigRational> row;
    row.reserve(slots * spec.dimension());
    for (const auto& component : vector.components) {
      const Polynomial scaled =
          component.num() * exact_quotient(common_den, component.den());
      if (scaled.degree() >= static_cast<int>(slots)) {
        throw InternalError("flattened numerator exceeds its degree bound");
      }
      for (std::size_t k = 0; k < slots; ++k) row.push_back(scaled.coeff(k));
    }
    flattened.push_back(std::move(row));
  }

  const RankSelection selection = rank_and_select(flattened);
  report.dimension = selection.rank;
  report.selected_betas.reserve(selection.selected.size());
  for (std::size_t index : selection.selected) report.selected_betas.push_back(index + 1);
  return report;
}

GeneratingFunctionVector generating_function_of(const RecurrenceSpec& spec,
                                                const InitialCondition& u) {
  const std::size_t p = spec.dimension();
  GeneratingFunctionVector result;
  result.components.assign(p, RationalFunction{});
  if (u.is_zero()) return result;

  const RationalFunction delta = kneading_determinant(spec);
  std::map<std::size_t, GeneratingFunctionVector> cache;
  for (const auto& [slot, block] : u.support()) {
    if (block.size() != p) {
      throw std::invalid_argument("initial-condition block has wrong length");
    }
    for (std::size_t component = 1; component <= p; ++component) {
      const BigRational& coordinate = block[component - 1];
      if (coordinate == 0) continue;
      const std::size_t beta = fold_beta(spec, slot * p + component);
      auto it = cache.find(beta);
      if (it == cache.end()) {
        it = cache.emplace(beta, with_delta(spec, delta, beta)).first;
      }
      const RationalFunction scale{coordinate};
      for (std::size_t alpha = 0; alpha < p; ++alpha) {
        result.components[alpha] += scale * it->second.components[alpha];
      }
    }
  }
  return result;
}

}  // namespace kneadgen
