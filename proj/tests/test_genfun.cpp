#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kneadgen/genfun.hpp"
#include "test_support.hpp"

using namespace kneadgen;
using kneadgen::testing::example1;
using kneadgen::testing::example2;
using kneadgen::testing::p1s2_spec;
using kneadgen::testing::random_spec;
using kneadgen::testing::rf;
using kneadgen::testing::zero_spec;

namespace {

GeneratingFunctionVector gfv(std::initializer_list<RationalFunction> components) {
  return GeneratingFunctionVector{std::vector<RationalFunction>(components)};
}

}  // namespace

TEST_CASE("generating functions printed for the [[1,2],[3,4]] example") {
  const RecurrenceSpec spec = example1();
  CHECK(generating_function(spec, 1) ==
        gfv({rf({1, -6, 5}, {1, -7, 4}), rf({0, 3, -3}, {1, -7, 4})}));
  CHECK(generating_function(spec, 2) ==
        gfv({rf({0, 2, -2}, {1, -7, 4}), rf({1, -3, 2}, {1, -7, 4})}));
  CHECK(generating_function(spec, 3) ==
        gfv({rf({0, 1, 1}, {1, -7, 4}), rf({0, 3, -3}, {1, -7, 4})}));
  CHECK(generating_function(spec, 4) ==
        gfv({rf({0, 2, -2}, {1, -7, 4}), rf({0, 4, -2}, {1, -7, 4})}));
  CHECK_THROWS_AS(generating_function(spec, 0), std::invalid_argument);
}

TEST_CASE("generating functions of the all-ones example") {
  const RecurrenceSpec spec = example2();
  CHECK(generating_function(spec, 1) ==
        gfv({rf({-1, 2}, {-1, 3}), rf({0, -1}, {-1, 3})}));
  CHECK(generating_function(spec, 2) ==
        gfv({rf({0, -1}, {-1, 3}), rf({-1, 2}, {-1, 3})}));
  CHECK(generating_function(spec, 3) ==
        gfv({rf({0, -1}, {-1, 3}), rf({0, -1}, {-1, 3})}));
  CHECK(generating_function(spec, 4) == generating_function(spec, 3));
}

TEST_CASE("generating functions of the s = 2 scalar example") {
  const RecurrenceSpec spec = p1s2_spec();
  CHECK(generating_function(spec, 1) == gfv({rf({1, 0, -1}, {1, -1, -3})}));
  CHECK(generating_function(spec, 2) == gfv({rf({0, 2, 1}, {1, -1, -3})}));
  CHECK(generating_function(spec, 3) == gfv({rf({0, 1, 2}, {1, -1, -3})}));
}

TEST_CASE("all-zero recurrence: G(e_beta) is a delta vector") {
  const RecurrenceSpec spec = zero_spec(2, 1);
  CHECK(generating_function(spec, 1) == gfv({rf({1}), RationalFunction{}}));
  CHECK(generating_function(spec, 2) == gfv({RationalFunction{}, rf({1})}));
  CHECK(generating_function(spec, 3) == gfv({RationalFunction{}, RationalFunction{}}));
  CHECK(generating_function(spec, 4) == gfv({RationalFunction{}, RationalFunction{}}));
}

TEST_CASE("spanning set enumerates beta = 1..(s+1)p") {
  const RecurrenceSpec spec = example1();
  const auto span = spanning_set(spec);
  REQUIRE(span.size() == 4);
  for (std::size_t beta = 1; beta <= 4; ++beta) {
    CHECK(span[beta - 1] == generating_function(spec, beta));
  }
  // Periodicity beyond the spanning range.
  CHECK(generating_function(spec, 5) == generating_function(spec, 3));
  CHECK(generating_function(spec, 6) == generating_function(spec, 4));
}

TEST_CASE("basis and dimension of the paper examples") {
  SUBCASE("[[1,2],[3,4]]: dimension 4") {
    const BasisReport report = basis_and_dimension(example1());
    CHECK(report.dimension == 4);
    CHECK(report.selected_betas == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(report.spanning.size() == 4);
  }
  SUBCASE("all-ones: dimension 3 via G(e_3) = G(e_4)") {
    const BasisReport report = basis_and_dimension(example2());
    CHECK(report.dimension == 3);
    CHECK(report.selected_betas == std::vector<std::size_t>{1, 2, 3});
  }
  SUBCASE("all-zero: dimension p") {
    const BasisReport report = basis_and_dimension(zero_spec(2, 1));
    CHECK(report.dimension == 2);
    CHECK(report.selected_betas == std::vector<std::size_t>{1, 2});
  }
  SUBCASE("s = 2 scalar example: full dimension 3") {
    const BasisReport report = basis_and_dimension(p1s2_spec());
    CHECK(report.dimension == 3);
    CHECK(report.selected_betas == std::vector<std::size_t>{1, 2, 3});
  }
}

TEST_CASE("generating_function_of combines basis vectors linearly") {
  const RecurrenceSpec spec = example1();

  SUBCASE("a single basis term") {
    CHECK(generating_function_of(spec, InitialCondition::basis(1, 2)) ==
          generating_function(spec, 1));
  }
  SUBCASE("e_1 + e_2 sums the printed vectors") {
    InitialCondition u;
    u.set(0, {BigRational(1), BigRational(1)});
    CHECK(generating_function_of(spec, u) ==
          gfv({rf({1, -4, 3}, {1, -7, 4}), rf({1, 0, -1}, {1, -7, 4})}));
  }
  SUBCASE("zero initial condition") {
    CHECK(generating_function_of(spec, InitialCondition{}) ==
          gfv({RationalFunction{}, RationalFunction{}}));
  }
  SUBCASE("support beyond (s+1)p folds via periodicity") {
    // beta = 7 folds to beta = 3 for p = 2, s = 1.
    CHECK(generating_function_of(spec, InitialCondition::basis(7, 2)) ==
          generating_function(spec, 3));
    // The unfolded computation agrees with the folded one.
    CHECK(generating_function(spec, 7) == generating_function(spec, 3));
  }
  SUBCASE("rational coordinates scale exactly") {
    InitialCondition u;
    u.set(0, {make_rational(BigInt(1), BigInt(2)), BigRational(0)});
    const auto half = generating_function_of(spec, u);
    const auto whole = generating_function(spec, 1);
    for (std::size_t alpha = 0; alpha < 2; ++alpha) {
      CHECK(half.components[alpha] + half.components[alpha] == whole.components[alpha]);
    }
  }
}

TEST_CASE("constant term of G_alpha(e_beta) is the Kronecker delta for beta <= p") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const RecurrenceSpec spec = random_spec(rng);
    for (std::size_t beta = 1; beta <= spec.dimension(); ++beta) {
      const auto g = generating_function(spec, beta);
      for (std::size_t alpha = 1; alpha <= spec.dimension(); ++alpha) {
        CHECK(g.components[alpha - 1].at_zero() == (alpha == beta ? 1 : 0));
      }
    }
  }
}

TEST_CASE("periodicity and dimension bounds on random specs") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 12; ++trial) {
    const RecurrenceSpec spec = random_spec(rng, 2, 3);
    const std::size_t p = spec.dimension();
    const std::size_t sp = spec.period() * p;
    for (std::size_t beta = p + 1; beta <= 2 * p; ++beta) {
      CHECK(generating_function(spec, beta + sp) == generating_function(spec, beta));
    }
    const BasisReport report = basis_and_dimension(spec);
    CHECK(report.dimension >= p);
    CHECK(report.dimension <= spec.spanning_count());
    CHECK(report.selected_betas.size() == report.dimension);
  }
}
