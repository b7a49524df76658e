#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kneadgen/oracle.hpp"
#include "test_support.hpp"

using namespace kneadgen;
using kneadgen::testing::doubling_spec;
using kneadgen::testing::example1;
using kneadgen::testing::mat;
using kneadgen::testing::p1s2_spec;
using kneadgen::testing::random_rational;
using kneadgen::testing::random_spec;
using kneadgen::testing::rf;
using kneadgen::testing::zero_spec;

namespace {

std::vector<BigRational> qvec(std::initializer_list<std::int64_t> entries) {
  std::vector<BigRational> out;
  for (auto e : entries) out.emplace_back(e);
  return out;
}

}  // namespace

TEST_CASE("decode_basis_index follows the standard-basis listing") {
  CHECK(decode_basis_index(1, 2) == BasisIndex{0, 1});
  CHECK(decode_basis_index(2, 2) == BasisIndex{0, 2});  // beta = p
  CHECK(decode_basis_index(4, 2) == BasisIndex{1, 2});  // beta = p + 2
  CHECK(decode_basis_index(3, 3) == BasisIndex{0, 3});
  CHECK(decode_basis_index(1, 1) == BasisIndex{0, 1});
  CHECK(decode_basis_index(5, 1) == BasisIndex{4, 1});
  CHECK_THROWS_AS(decode_basis_index(0, 2), std::invalid_argument);
}

TEST_CASE("decode and encode are mutually inverse") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<std::size_t> p_dist(1, 5);
  for (std::size_t beta = 1; beta <= 60; ++beta) {
    const std::size_t p = p_dist(rng);
    const BasisIndex index = decode_basis_index(beta, p);
    CHECK(index.component >= 1);
    CHECK(index.component <= p);
    CHECK(encode_basis_index(index, p) == beta);
  }
}

TEST_CASE("iterate reproduces hand-computed orbits") {
  SUBCASE("[[1,2],[3,4]] from e_3") {
    const auto orbit = iterate(example1(), InitialCondition::basis(3, 2), 4);
    REQUIRE(orbit.values.size() == 5);
    CHECK(orbit.values[0] == qvec({0, 0}));
    CHECK(orbit.values[1] == qvec({1, 3}));
    CHECK(orbit.values[2] == qvec({8, 18}));
    CHECK(orbit.values[3] == qvec({52, 114}));
    CHECK(orbit.values[4] == qvec({332, 726}));
  }
  SUBCASE("all-zero spec freezes after v_0") {
    const auto orbit = iterate(zero_spec(2, 1), InitialCondition::basis(1, 2), 3);
    CHECK(orbit.values[0] == qvec({1, 0}));
    CHECK(orbit.values[1] == qvec({0, 0}));
    CHECK(orbit.values[3] == qvec({0, 0}));
  }
  SUBCASE("scalar doubling: each term is the sum of all previous ones") {
    const auto orbit = iterate(doubling_spec(), InitialCondition::basis(1, 1), 4);
    CHECK(orbit.values == std::vector<std::vector<BigRational>>{
                              qvec({1}), qvec({1}), qvec({2}), qvec({4}), qvec({8})});
  }
  SUBCASE("s = 2 scalar orbits") {
    const auto from_e1 = iterate(p1s2_spec(), InitialCondition::basis(1, 1), 4);
    CHECK(from_e1.values == std::vector<std::vector<BigRational>>{
                                qvec({1}), qvec({1}), qvec({3}), qvec({6}), qvec({15})});
    const auto from_e2 = iterate(p1s2_spec(), InitialCondition::basis(2, 1), 3);
    CHECK(from_e2.values == std::vector<std::vector<BigRational>>{
                                qvec({0}), qvec({2}), qvec({3}), qvec({9})});
  }
  SUBCASE("wrong block length is rejected") {
    InitialCondition u;
    u.set(0, qvec({1, 2, 3}));
    CHECK_THROWS_AS(iterate(example1(), u, 2), std::invalid_argument);
  }
}

TEST_CASE("orbits are linear in the initial condition") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    const RecurrenceSpec spec = random_spec(rng);
    const std::size_t p = spec.dimension();

    InitialCondition u, w, combined;
    const BigRational a = random_rational(rng);
    const BigRational b = random_rational(rng);
    std::uniform_int_distribution<std::size_t> slot_dist(0, 3);
    for (std::size_t slot = 0; slot <= slot_dist(rng); ++slot) {
      std::vector<BigRational> uv(p), wv(p), cv(p);
      for (std::size_t j = 0; j < p; ++j) {
        uv[j] = random_rational(rng);
        wv[j] = random_rational(rng);
        cv[j] = a * uv[j] + b * wv[j];
      }
      u.set(slot, uv);
      w.set(slot, wv);
      combined.set(slot, cv);
    }

    const std::size_t steps = 12;
    const auto orbit_u = iterate(spec, u, steps);
    const auto orbit_w = iterate(spec, w, steps);
    const auto orbit_c = iterate(spec, combined, steps);
    for (std::size_t n = 0; n <= steps; ++n) {
      for (std::size_t j = 0; j < p; ++j) {
        CHECK(orbit_c.values[n][j] == a * orbit_u.values[n][j] + b * orbit_w.values[n][j]);
      }
    }
  }
}

TEST_CASE("taylor expansion of rational functions") {
  SUBCASE("geometric series") {
    const auto series = taylor(rf({1}, {1, -1}), 5);
    CHECK(series == std::vector<BigRational>(6, BigRational(1)));
  }
  SUBCASE("first component of G(e_3) in the [[1,2],[3,4]] example") {
    const auto series = taylor(rf({0, 1, 1}, {1, -7, 4}), 4);
    CHECK(series == std::vector<BigRational>{BigRational(0), BigRational(1), BigRational(8),
                                             BigRational(52), BigRational(332)});
  }
  SUBCASE("polynomials expand to themselves") {
    const auto series = taylor(rf({3, 0, 1}), 4);
    CHECK(series == std::vector<BigRational>{BigRational(3), BigRational(0), BigRational(1),
                                             BigRational(0), BigRational(0)});
  }
  SUBCASE("pole at the origin is rejected") {
    CHECK_THROWS_WITH_AS(taylor(rf({1}, {0, 1}), 3), "not expandable at z = 0",
                         std::domain_error);
  }
}

TEST_CASE("taylor is a ring morphism onto truncated series") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction f = kneadgen::testing::random_rational_function(rng, 3);
    RationalFunction g = kneadgen::testing::random_rational_function(rng, 3);
    if (f.den().constant_term() == 0 || g.den().constant_term() == 0) continue;
    const std::size_t order = 8;
    const auto sf = taylor(f, order);
    const auto sg = taylor(g, order);
    const auto sfg = taylor(f * g, order);
    for (std::size_t k = 0; k <= order; ++k) {
      BigRational conv(0);
      for (std::size_t j = 0; j <= k; ++j) conv += sf[j] * sg[k - j];
      CHECK(sfg[k] == conv);
    }
    const auto sum = taylor(f + g, order);
    for (std::size_t k = 0; k <= order; ++k) CHECK(sum[k] == sf[k] + sg[k]);
  }
}

TEST_CASE("verify accepts the paper example and the zero recurrence") {
  for (std::size_t beta = 1; beta <= 4; ++beta) {
    CHECK(verify(example1(), beta, 30).passed);
    CHECK(verify(zero_spec(2, 1), beta, 10).passed);
  }
}

TEST_CASE("verify flags an injected fault on the generating-function path") {
  const RecurrenceSpec clean = example1();
  const RecurrenceSpec mutated(2, 1, {mat(2, {2, 2, 3, 4})});  // A_0(1,1): 1 -> 2
  const VerificationReport report = verify(mutated, clean, 1, 20);
  CHECK_FALSE(report.passed);
  CHECK(report.mismatch_index >= 1);
  CHECK(report.series_value != report.orbit_value);
  // The unperturbed run still passes.
  CHECK(verify(clean, clean, 1, 20).passed);
}

TEST_CASE("series and orbit agree for random specs, past the spanning range") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 8; ++trial) {
    const RecurrenceSpec spec = random_spec(rng, 2, 3);
    const std::size_t limit = spec.spanning_count() + spec.period() * spec.dimension();
    for (std::size_t beta = 1; beta <= limit; ++beta) {
      const VerificationReport report = verify(spec, beta, 25);
      CHECK(report.passed);
    }
  }
}
