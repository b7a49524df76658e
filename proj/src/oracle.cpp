#include "kneadgen/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace kneadgen {

std::vector<BigRational> taylor(const RationalFunction& f, std::size_t order) {
  const Polynomial& num = f.num();
  const Polynomial& den = f.den();
  const BigRational d0 = den.constant_term();
  if (d0 == 0) throw std::domain_error("not expandable at z = 0");

  // num = den * series, solved coefficient by coefficient.
  std::vector<BigRational> series(order + 1);
  const std::size_t den_degree = static_cast<std::size_t>(den.degree());
  for (std::size_t k = 0; k <= order; ++k) {
    BigRational acc = num.coeff(k);
    const std::size_t reach = std::min(k, den_degree);
    for (std::size_t j = 1; j <= reach; ++j) acc -= den.coeff(j) * series[k - j];
    series[k] = acc / d0;
  }
  return series;
}

std::vector<std::vector<BigRational>> taylor(const GeneratingFunctionVector& g,
                                             std::size_t order) {
  const std::size_t p = g.components.size();
  std::vector<std::vector<BigRational>> per_component;
  per_component.reserve(p);
  for (const auto& component : g.components) per_component.push_back(taylor(component, order));

  std::vector<std::vector<BigRational>> out(order + 1, std::vector<BigRational>(p));
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t alpha = 0; alpha < p; ++alpha) out[n][alpha] = per_component[alpha][n];
  }
  return out;
}

VerificationReport verify(const RecurrenceSpec& spec, std::size_t beta, std::size_t order) {
  return verify(spec, spec, beta, order);
}

VerificationReport verify(const RecurrenceSpec& series_spec, const RecurrenceSpec& orbit_spec,
                          std::size_t beta, std::size_t order) {
  const auto series = taylor(generating_function(series_spec, beta), order);
  const OrbitSegment orbit =
      iterate(orbit_spec, InitialCondition::basis(beta, orbit_spec.dimension()), order);

  VerificationReport report;
  for (std::size_t n = 0; n <= order; ++n) {
    if (series[n] != orbit.values[n]) {
      report.passed = false;
      report.mismatch_index = n;
      report.series_value = series[n];
      report.orbit_value = orbit.values[n];
      return report;
    }
  }
  return report;
}

}  // namespace kneadgen
