#include <gtest/gtest.h>

#include "test_util.hpp"
#include "unideal/circuit.hpp"
#include "unideal/errors.hpp"

namespace unideal {
namespace {

const Field kQ;

Circuit sum_times_first() {
  Circuit c(2, kQ);
  const auto x1 = c.input(0);
  c.mul(c.add(x1, c.input(1)), x1);
  return c;
}

TEST(Circuit, EvalExamples) {
  Circuit k(3, kQ);
  k.constant(5);
  EXPECT_EQ(eval(k, {kQ.from_int(1), kQ.from_int(2), kQ.from_int(3)}), kQ.from_int(5));
  EXPECT_EQ(eval(sum_times_first(), {kQ.from_int(2), kQ.from_int(3)}), kQ.from_int(10));
}

TEST(Circuit, EvalAtOriginIsConstantTerm) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Circuit c = testing::random_circuit(kQ, 3, 4, rng);
    EXPECT_EQ(eval(c, std::vector<Scalar>(3, kQ.zero())), expand(c).coeff({0, 0, 0}));
  }
}

TEST(Circuit, RejectsBadArity) {
  EXPECT_THROW(eval(sum_times_first(), {kQ.one()}), std::invalid_argument);
  Circuit c(1, kQ);
  EXPECT_THROW(c.input(1), std::invalid_argument);
}

TEST(Circuit, ExpandBinomial) {
  Circuit c(2, kQ);
  c.pow(c.add(c.input(0), c.input(1)), 2);
  const SparsePoly p = expand(c);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.coeff({1, 1}), kQ.from_int(2));
  EXPECT_EQ(p.coeff({2, 0}), kQ.one());
  EXPECT_THROW(expand(c, 1), CapExceeded);
}

TEST(Circuit, ExpandAgreesWithEval) {
  Rng rng(2);
  for (const Field& f : {kQ, Field::prime(1000003)}) {
    for (int i = 0; i < 60; ++i) {
      const Circuit c = testing::random_circuit(f, 4, 5, rng);
      const SparsePoly p = expand(c, 10000);
      for (int t = 0; t < 20; ++t) {
        const auto x = testing::random_point(f, 4, rng);
        ASSERT_EQ(eval(c, x), p.eval(x));
      }
    }
  }
}

TEST(Circuit, HornerRoundTrip) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const SparsePoly p = testing::random_sparse(kQ, 3, 4, 8, rng);
    EXPECT_EQ(expand(from_sparse(p)), p);
  }
  EXPECT_TRUE(expand(from_sparse(SparsePoly(2, kQ))).is_zero());
}

TEST(Circuit, ModPEvaluatorMatchesExact) {
  Rng rng(4);
  const std::uint64_t p = 1000000007;
  const Field fp = Field::prime(p);
  for (int i = 0; i < 50; ++i) {
    const Circuit c = testing::random_circuit(kQ, 3, 4, rng);
    const ModPEvaluator ev(c, p);
    std::vector<Scalar> x;
    std::vector<std::uint64_t> xp;
    for (int j = 0; j < 3; ++j) {
      x.push_back(kQ.from_int(uniform_i64(rng, -50, 50)));
      xp.push_back(modp::from_scalar(x.back(), p));
    }
    EXPECT_EQ(fp.embed(eval(c, x)).residue_value(), ev(xp));
  }
}

TEST(Circuit, RepeatedSquaringModRandomPrime) {
  Circuit c(1, kQ);
  std::size_t node = c.input(0);
  for (int i = 0; i < 20; ++i) node = c.mul(node, node);
  Rng rng(5);
  for (int i = 0; i < 5; ++i) {
    const ModValue mv = eval_mod_random_prime(c, {kQ.from_int(2)}, 64, rng);
    EXPECT_EQ(mv.value, modp::pow(2, 1ULL << 20, mv.prime));
    EXPECT_EQ(64 - __builtin_clzll(mv.prime), 64);
  }
  Circuit zero(1, kQ);
  zero.constant(0);
  EXPECT_EQ(eval_mod_random_prime(zero, {kQ.one()}, 32, rng).value, 0u);
}

TEST(Circuit, ModRandomPrimeRarelyVanishesOnNonzero) {
  // 3^200 - 1 has few prime divisors among 32-bit primes; no false zero expected.
  Circuit c(1, kQ);
  c.sub(c.pow(c.input(0), 200), c.constant(1));
  Rng rng(6);
  int zeros = 0;
  for (int i = 0; i < 200; ++i) zeros += eval_mod_random_prime(c, {kQ.from_int(3)}, 32, rng).value == 0;
  EXPECT_EQ(zeros, 0);
}

TEST(Circuit, HomogeneousPartExamples) {
  Circuit c(1, kQ);
  const auto x = c.input(0);
  c.add(std::vector<std::size_t>{c.constant(1), x, c.mul(x, x)});
  const Scalar b = kQ.from_int(7);
  EXPECT_EQ(homogeneous_part_eval(c, 1, 2, {b}), b);
  EXPECT_EQ(homogeneous_part_eval(c, 2, 2, {b}), b * b);
  EXPECT_EQ(homogeneous_part_eval(c, 3, 2, {b}), kQ.zero());
  EXPECT_THROW(homogeneous_part_eval(c.embedded(Field::prime(3)), 1, 2, {Field::prime(3).one()}),
               std::invalid_argument);
}

TEST(Circuit, HomogeneousPartsSumToValue) {
  Rng rng(7);
  for (const Field& f : {kQ, Field::prime(1000003)}) {
    for (int i = 0; i < 40; ++i) {
      const Circuit c = testing::random_circuit(f, 3, 4, rng);
      const auto d = static_cast<unsigned>(c.degree_bound());
      const auto x = testing::random_point(f, 3, rng);
      const SparsePoly p = expand(c);
      Scalar total = f.zero();
      for (unsigned k = 0; k <= d; ++k) {
        const Scalar hk = homogeneous_part_eval(c, k, d, x);
        ASSERT_EQ(hk, p.homogeneous_part(k).eval(x));
        total += hk;
      }
      EXPECT_EQ(total, eval(c, x));
    }
  }
}

TEST(Circuit, FischerSingleFactor) {
  LinearForm l(kQ, {kQ.one()}, kQ.one());
  const DiagonalCircuit d = power_decompose_product({l}, 1);
  ASSERT_EQ(d.fan_in(), 1u);
  EXPECT_EQ(d.summands()[0].coeff, kQ.one());
  EXPECT_EQ(d.summands()[0].form, LinearForm::variable(kQ, 1, 0));
}

TEST(Circuit, FischerDifferenceOfSquares) {
  const LinearForm a(kQ, {kQ.one(), kQ.one()}, kQ.zero());
  const LinearForm b(kQ, {kQ.one(), kQ.from_int(-1)}, kQ.zero());
  const DiagonalCircuit d = power_decompose_product({a, b}, 2);
  EXPECT_EQ(d.fan_in(), 2u);
  Rng rng(8);
  for (int i = 0; i < 5; ++i) {
    const auto x = testing::random_point(kQ, 2, rng);
    EXPECT_EQ(d.eval(x), x[0] * x[0] - x[1] * x[1]);
  }
}

TEST(Circuit, FischerElementarySymmetric) {
  std::vector<LinearForm> forms;
  for (std::size_t i = 0; i < 3; ++i) {
    LinearForm l = LinearForm::variable(kQ, 3, i);
    l.set_constant(kQ.one());
    forms.push_back(l);
  }
  const DiagonalCircuit d = power_decompose_product(forms, 2);
  EXPECT_EQ(d.fan_in(), 4u);
  Rng rng(9);
  for (int i = 0; i < 5; ++i) {
    const auto x = testing::random_point(kQ, 3, rng);
    EXPECT_EQ(d.eval(x), x[0] * x[1] + x[0] * x[2] + x[1] * x[2]);
  }
}

TEST(Circuit, FischerMatchesHomogeneousPartOfProduct) {
  Rng rng(10);
  for (int i = 0; i < 30; ++i) {
    const std::size_t m = uniform_u64(rng, 1, 5);
    const unsigned k = static_cast<unsigned>(uniform_u64(rng, 0, m));
    std::vector<LinearForm> forms;
    Circuit prod(3, kQ);
    std::vector<std::size_t> factors;
    for (std::size_t j = 0; j < m; ++j) {
      forms.emplace_back(kQ, testing::random_point(kQ, 3, rng), testing::random_scalar(kQ, rng));
      factors.push_back(prod.linear(forms.back()));
    }
    prod.mul(factors);
    const DiagonalCircuit d = power_decompose_product(forms, k);
    EXPECT_EQ(d.fan_in(), std::size_t{1} << (m - 1));
    for (int t = 0; t < 20; ++t) {
      const auto x = testing::random_point(kQ, 3, rng);
      ASSERT_EQ(d.eval(x), homogeneous_part_eval(prod, k, static_cast<unsigned>(m), x));
    }
  }
}

}  // namespace
}  // namespace unideal
