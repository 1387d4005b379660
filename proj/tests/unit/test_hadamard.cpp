#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"
#include "unideal/errors.hpp"
#include "unideal/hadamard.hpp"

namespace unideal {
namespace {

const Field kQ;

Scalar exponent_factorial_q(const Exponents& e) {
  Scalar r = kQ.one();
  for (auto x : e)
    for (std::uint32_t i = 2; i <= x; ++i) r *= kQ.from_int(i);
  return r;
}

// sum_m m! [m]f [m]g b^m, straight from the definition.
Scalar literal_scaled_hadamard(const SparsePoly& f, const SparsePoly& g, const std::vector<Scalar>& b) {
  Scalar acc = kQ.zero();
  for (const auto& [e, c] : f.terms()) {
    const Scalar gc = g.coeff(e);
    if (gc.is_zero()) continue;
    Scalar mono = kQ.one();
    for (std::size_t i = 0; i < e.size(); ++i) mono *= b[i].pow(e[i]);
    acc += exponent_factorial_q(e) * c * gc * mono;
  }
  return acc;
}

DiagonalCircuit random_diagonal(std::size_t n, unsigned k, std::size_t summands, Rng& rng) {
  DiagonalCircuit d(kQ, n, k);
  for (std::size_t s = 0; s < summands; ++s) {
    std::vector<Scalar> l;
    for (std::size_t i = 0; i < n; ++i) l.push_back(testing::random_scalar(kQ, rng, -3, 3));
    d.add(testing::random_scalar(kQ, rng), LinearForm(kQ, l, kQ.zero()));
  }
  return d;
}

Circuit monomial_circuit(std::size_t n, const std::vector<std::size_t>& vars) {
  Circuit c(n, kQ);
  std::vector<std::size_t> f;
  for (auto v : vars) f.push_back(c.input(v));
  c.set_output(c.mul(f));
  return c;
}

TEST(ScaledHadamard, HandExample) {
  const Circuit c = monomial_circuit(2, {0, 1});
  DiagonalCircuit d(kQ, 2, 2);
  d.add(kQ.one(), LinearForm(kQ, {kQ.one(), kQ.one()}, kQ.zero()));
  EXPECT_EQ(scaled_hadamard_eval(c, d, {kQ.one(), kQ.one()}), kQ.from_int(2));
}

TEST(ScaledHadamard, DisjointSupportsGiveZero) {
  const Circuit c = monomial_circuit(2, {0, 1});
  DiagonalCircuit d(kQ, 2, 2);
  d.add(kQ.one(), LinearForm(kQ, {kQ.one(), kQ.zero()}, kQ.zero()));
  EXPECT_TRUE(scaled_hadamard_eval(c, d, {kQ.from_int(3), kQ.from_int(5)}).is_zero());
}

TEST(ScaledHadamard, SumOfVariablesPowerGivesFactorialTimesValue) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = uniform_u64(rng, 1, 4);
    const unsigned k = static_cast<unsigned>(uniform_u64(rng, 1, 3));
    SparsePoly f(n, kQ);
    for (int t = 0; t < 4; ++t) {
      Exponents e(n, 0);
      for (unsigned j = 0; j < k; ++j) ++e[uniform_u64(rng, 0, n - 1)];
      f.add_term(e, testing::random_scalar(kQ, rng));
    }
    DiagonalCircuit d(kQ, n, k);
    d.add(kQ.one(), LinearForm(kQ, std::vector<Scalar>(n, kQ.one()), kQ.zero()));
    const auto b = testing::random_point(kQ, n, rng);
    Scalar kfact = kQ.one();
    for (unsigned i = 2; i <= k; ++i) kfact *= kQ.from_int(i);
    EXPECT_EQ(scaled_hadamard_eval(from_sparse(f), d, b), kfact * f.eval(b));
  }
}

TEST(ScaledHadamard, MatchesDefinitionOnExpansions) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = uniform_u64(rng, 1, 4);
    const unsigned k = static_cast<unsigned>(uniform_u64(rng, 0, 3));
    const Circuit c = testing::random_circuit(kQ, n, k, rng);
    const DiagonalCircuit d = random_diagonal(n, k, uniform_u64(rng, 1, 4), rng);
    const SparsePoly f = expand(c);
    const SparsePoly g = d.expand();
    for (int point = 0; point < 10; ++point) {
      const auto b = testing::random_point(kQ, n, rng);
      EXPECT_EQ(scaled_hadamard_eval(c, d, b), literal_scaled_hadamard(f, g, b));
    }
  }
}

TEST(ScaledHadamard, RejectsDegreeMismatch) {
  const Circuit c = monomial_circuit(2, {0, 1, 1});
  DiagonalCircuit d(kQ, 2, 2);
  d.add(kQ.one(), LinearForm(kQ, {kQ.one(), kQ.one()}, kQ.zero()));
  EXPECT_THROW(scaled_hadamard_eval(c, d, {kQ.one(), kQ.one()}), std::invalid_argument);
  EXPECT_NO_THROW(scaled_hadamard_eval(c, d, {kQ.one(), kQ.one()}, 3));
}

TEST(Coverage, Formulas) {
  EXPECT_EQ(colour_count(1), 2u);
  EXPECT_EQ(colour_count(2), 3u);
  EXPECT_EQ(colour_count(3), 5u);
  EXPECT_EQ(colour_count(4), 6u);
  EXPECT_DOUBLE_EQ(coverage_probability(1), 1.0);
  EXPECT_DOUBLE_EQ(coverage_probability(3), 12.0 / 25.0);
  EXPECT_EQ(coverage_trials(3), static_cast<std::size_t>(std::ceil(4 * 3 * std::log(2.0) / (12.0 / 25.0))));
  EXPECT_EQ(coverage_trials(3), 18u);
  EXPECT_EQ(coverage_trials(1), 1u);
}

TEST(Coverage, EmpiricalRateForDegreeThree) {
  // m = 6 copies, all multilinear degree-3 monomials over them.
  Rng rng(8);
  const unsigned colours = colour_count(3);
  std::size_t covered = 0, total = 0;
  for (int run = 0; run < 1000; ++run) {
    std::vector<unsigned> colour(6);
    std::vector<std::vector<unsigned>> hit(20);
    for (std::size_t t = 0; t < coverage_trials(3); ++t) {
      for (auto& c : colour) c = static_cast<unsigned>(uniform_u64(rng, 0, colours - 1));
      std::size_t idx = 0;
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
          for (int c = b + 1; c < 6; ++c, ++idx)
            if (colour[a] != colour[b] && colour[b] != colour[c] && colour[a] != colour[c]) hit[idx].push_back(1);
    }
    for (const auto& h : hit) covered += !h.empty();
    total += hit.size();
  }
  EXPECT_GE(static_cast<double>(covered) / total, 1.0 - 1.0 / 8.0);
}

TEST(DetectionCircuit, FanInAndDegreeZero) {
  Rng rng(1);
  const DiagonalCircuit zero = build_detection_circuit({{2, 2}, 0}, 5, rng);
  EXPECT_EQ(zero.expand(), SparsePoly::constant(2, kQ, kQ.one()));
  for (unsigned k = 1; k <= 4; ++k) {
    const DiagonalCircuit d = build_detection_circuit({{3, 3, 2, 2}, k}, 7, rng);
    EXPECT_EQ(d.fan_in(), 7u << (colour_count(k) - 1));
    EXPECT_EQ(d.degree(), k);
  }
  EXPECT_THROW(build_detection_circuit({{2, 1}, 2}, 1, rng), std::invalid_argument);
}

TEST(DetectionCircuit, CoefficientsNonnegativeAndSupportedBelowExponents) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = uniform_u64(rng, 1, 4);
    std::vector<unsigned> e(n);
    for (auto& x : e) x = static_cast<unsigned>(uniform_u64(rng, 1, 3));
    PowerIdealSpec spec{e, 0};
    if (spec.m() == 0) continue;
    spec.k = static_cast<unsigned>(uniform_u64(rng, 1, std::min(4u, spec.m())));
    const SparsePoly g = build_detection_circuit(spec, 3, rng).expand();
    for (const auto& [mono, c] : g.terms()) {
      EXPECT_GT(sgn(c.rational()), 0);
      for (std::size_t i = 0; i < n; ++i) EXPECT_LT(mono[i], e[i]);
    }
  }
}

TEST(DetectionCircuit, SharedVariableExample) {
  Rng rng(3);
  // e = (3, 1): both copies belong to x_1, so only x_1^2 can appear.
  for (int t = 0; t < 10; ++t) {
    const SparsePoly g = build_detection_circuit({{3, 1}, 2}, 4, rng).expand();
    EXPECT_TRUE(g.coeff({1, 1}).is_zero());
  }
}

TEST(DetectionCircuit, CoversProductWithHighProbability) {
  Rng rng(12);
  int covered = 0;
  for (int t = 0; t < 200; ++t) covered += !build_detection_circuit({{2, 2}, 2}, 8, rng).expand().coeff({1, 1}).is_zero();
  // Per colouring the two copies differ with probability 2/3.
  EXPECT_GE(covered, 195);
}

TEST(MembershipPowers, SmallExamples) {
  Rng rng(5);
  EXPECT_TRUE(membership_powers(monomial_circuit(2, {0, 1}), {{2, 2}, 2}, rng).not_member);
  const PowersResult member = membership_powers(monomial_circuit(2, {0, 0}), {{2, 2}, 2}, rng);
  EXPECT_FALSE(member.not_member);
  EXPECT_LE(member.error_bound, std::pow(2.0, -20));
  Circuit zero(3, kQ);
  zero.set_output(zero.constant(0));
  EXPECT_FALSE(membership_powers(zero, {{1, 2, 3}, 2}, rng).not_member);
  Circuit one(3, kQ);
  one.set_output(one.constant(1));
  EXPECT_TRUE(membership_powers(one, {{1, 2, 3}, 2}, rng).not_member);
  EXPECT_TRUE(membership_powers(one, {{1, 1, 1}, 0}, rng).not_member);
}

TEST(MembershipPowers, RejectsHighDegree) {
  Rng rng(5);
  EXPECT_THROW(membership_powers(monomial_circuit(2, {0, 1, 1}), {{2, 2}, 2}, rng), std::invalid_argument);
}

TEST(MembershipPowers, MatchesMonomialBruteForce) {
  Rng rng(44);
  int nonmembers = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform_u64(rng, 1, 6);
    const unsigned k = static_cast<unsigned>(uniform_u64(rng, 1, 4));
    std::vector<unsigned> e(n);
    for (auto& x : e) x = static_cast<unsigned>(uniform_u64(rng, 1, 3));
    const Circuit c = testing::random_circuit(kQ, n, k, rng);
    const bool member = power_ideal_member_brute(c, e);
    nonmembers += !member;
    EXPECT_EQ(membership_powers(c, {e, k}, rng).not_member, !member);
  }
  EXPECT_GT(nonmembers, 10);
}

}  // namespace
}  // namespace unideal
