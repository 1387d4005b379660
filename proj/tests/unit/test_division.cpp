#include <gtest/gtest.h>

#include <algorithm>

#include "test_util.hpp"
#include "unideal/errors.hpp"
#include "unideal/ideal.hpp"
#include "unideal/zero_test.hpp"

namespace unideal {
namespace {

const Field kQ;

TEST(Division, PowerTable) {
  const auto boolean = power_table(UnivariatePoly::from_ints(kQ, {0, -1, 1}), 5);
  for (std::size_t e = 1; e <= 5; ++e) EXPECT_EQ(boolean[e], UnivariatePoly::from_ints(kQ, {0, 1}));
  const auto square = power_table(UnivariatePoly::from_ints(kQ, {0, 0, 1}), 3);
  EXPECT_TRUE(square[3].is_zero());
  EXPECT_EQ(square[1], UnivariatePoly::from_ints(kQ, {0, 1}));
}

TEST(Division, HandExample) {
  SparsePoly f(2, kQ);
  f.add_term({2, 1}, kQ.one());
  f.add_term({0, 1}, kQ.one());
  const SparsePoly r = divide(f, UnivariateIdeal::boolean(2, kQ));
  SparsePoly expected(2, kQ);
  expected.add_term({1, 1}, kQ.one());
  expected.add_term({0, 1}, kQ.one());
  EXPECT_EQ(r, expected);
  EXPECT_EQ(divide(SparsePoly::constant(2, kQ, kQ.from_int(7)), UnivariateIdeal::boolean(2, kQ)),
            SparsePoly::constant(2, kQ, kQ.from_int(7)));
}

TEST(Division, BruteMembershipExamples) {
  Circuit sq(1, kQ);
  sq.mul(sq.input(0), sq.input(0));
  EXPECT_TRUE(is_member_brute(sq, UnivariateIdeal::powers({2}, kQ)));

  // Row-product polynomial of the 2x2 all-ones matrix.
  Circuit pa(2, kQ);
  const auto s = pa.add(pa.input(0), pa.input(1));
  pa.mul(s, s);
  const SparsePoly r = remainder_brute(pa, UnivariateIdeal::powers({2, 2}, kQ));
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r.coeff({1, 1}), kQ.from_int(2));

  // Triangle graph polynomial is not in <x_i^3 - 1>.
  Circuit tri(3, kQ);
  auto diff = [&](std::size_t i, std::size_t j) { return tri.sub(tri.input(i), tri.input(j)); };
  tri.mul(std::vector<std::size_t>{diff(0, 1), diff(0, 2), diff(1, 2)});
  UnivariateIdeal cubes(kQ);
  for (std::size_t i = 0; i < 3; ++i) cubes.add(i, UnivariatePoly::from_ints(kQ, {-1, 0, 0, 1}));
  EXPECT_FALSE(is_member_brute(tri, cubes));
}

UnivariateIdeal random_ideal(const Field& f, std::size_t n, Rng& rng) {
  UnivariateIdeal ideal(f);
  for (std::size_t i = 0; i < n; ++i) {
    if (uniform_u64(rng, 0, 4) == 0) continue;  // some variables stay free
    std::vector<Scalar> c;
    const std::size_t d = uniform_u64(rng, 1, 3);
    for (std::size_t j = 0; j < d; ++j) c.push_back(testing::random_scalar(f, rng, -3, 3));
    c.push_back(testing::random_scalar(f, rng, 1, 3));
    ideal.add(i, UnivariatePoly(f, c));
  }
  return ideal;
}

void expect_reduced(const SparsePoly& r, const UnivariateIdeal& ideal) {
  for (const auto& g : ideal.generators()) EXPECT_LT(static_cast<int>(r.degree_in(g.var)), g.poly.degree());
}

TEST(Division, AlgebraicLaws) {
  Rng rng(31);
  for (const Field& f : {kQ, Field::prime(1000003)}) {
    for (int i = 0; i < 100; ++i) {
      const UnivariateIdeal ideal = random_ideal(f, 3, rng);
      const SparsePoly a = testing::random_sparse(f, 3, 5, 6, rng);
      const SparsePoly b = testing::random_sparse(f, 3, 5, 6, rng);
      const Scalar ca = testing::random_scalar(f, rng), cb = testing::random_scalar(f, rng);
      const SparsePoly ra = divide(a, ideal);
      expect_reduced(ra, ideal);
      EXPECT_EQ(divide(ra, ideal), ra);
      EXPECT_EQ(divide(a * ca + b * cb, ideal), ra * ca + divide(b, ideal) * cb);

      auto gens = ideal.generators();
      std::shuffle(gens.begin(), gens.end(), rng);
      UnivariateIdeal permuted(f);
      for (const auto& g : gens) permuted.add(g.var, g.poly);
      EXPECT_EQ(divide(a, permuted), ra);

      for (const auto& g : ideal.generators()) {
        SparsePoly gp(3, f);
        for (std::size_t j = 0; j < g.poly.coeffs().size(); ++j) {
          Exponents e(3, 0);
          e[g.var] = static_cast<std::uint32_t>(j);
          gp.add_term(e, g.poly.coeffs()[j]);
        }
        EXPECT_TRUE(divide(gp * testing::random_sparse(f, 3, 3, 1, rng), ideal).is_zero());
      }
    }
  }
}

TEST(Division, IdealValidation) {
  UnivariateIdeal ideal(kQ);
  EXPECT_THROW(ideal.add(0, UnivariatePoly::from_ints(kQ, {3})), std::invalid_argument);
  ideal.add(0, UnivariatePoly::from_ints(kQ, {0, 1}));
  EXPECT_THROW(ideal.add(0, UnivariatePoly::from_ints(kQ, {1, 1})), std::invalid_argument);
  EXPECT_THROW(ideal.add(1, UnivariatePoly::from_ints(Field::prime(5), {1, 1})), std::invalid_argument);
}

TEST(ZeroTest, Examples) {
  Rng rng(41);
  auto zero = [&](const std::vector<Scalar>&) { return kQ.zero(); };
  EXPECT_FALSE(random_zero_test(zero, 2, 2, 10, kQ, rng).nonzero);
  auto prod = [](const std::vector<Scalar>& x) { return x[0] * x[1]; };
  const ZeroTestResult r = random_zero_test(prod, 2, 2, 10, kQ, rng);
  EXPECT_TRUE(r.nonzero);
  EXPECT_EQ(r.sample_size, 200u);
  auto constant = [](const std::vector<Scalar>&) { return kQ.from_int(3); };
  const ZeroTestResult c = random_zero_test(constant, 2, 0, 10, kQ, rng);
  EXPECT_TRUE(c.nonzero);
  EXPECT_EQ(c.trials_run, 1u);
  EXPECT_THROW(random_zero_test(prod, 2, 2, 1, Field::prime(101), rng), std::invalid_argument);
  const ZeroTestResult z = random_zero_test(zero, 2, 2, 10, kQ, rng);
  EXPECT_NEAR(z.error_bound, 1e-20, 1e-30);
}

}  // namespace
}  // namespace unideal
