#include <gtest/gtest.h>

#include <algorithm>
#include <complex>

#include "test_util.hpp"
#include "unideal/certifier.hpp"
#include "unideal/errors.hpp"
#include "unideal/linalg.hpp"

namespace unideal {
namespace {

const Field kQ;

UnivariatePoly poly(std::initializer_list<long long> c) { return UnivariatePoly::from_ints(kQ, c); }

UnivariateIdeal ideal_of(const std::vector<UnivariatePoly>& gens) {
  UnivariateIdeal I(kQ);
  for (std::size_t v = 0; v < gens.size(); ++v) I.add(v, gens[v]);
  return I;
}

Circuit from_poly(const SparsePoly& p) { return from_sparse(p); }

SparsePoly var(std::size_t n, std::size_t v) { return SparsePoly::variable(n, kQ, v); }
SparsePoly cst(std::size_t n, long long c) { return SparsePoly::constant(n, kQ, kQ.from_int(c)); }

TEST(Gaussian, Arithmetic) {
  const Gaussian a(1, 2), b(3, -1);
  EXPECT_EQ(a * b, Gaussian(5, 5));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.norm2(), 5);
  EXPECT_THROW(a / Gaussian(), std::domain_error);
  EXPECT_EQ(eval_gaussian(poly({1, 0, 1}), Gaussian(0, 1)), Gaussian(0, 0));
}

TEST(RootBounds, Examples) {
  const RootBounds b = root_magnitude_bounds(poly({-2, 0, 1}));
  EXPECT_EQ(b.hi, 4);
  EXPECT_EQ(b.lo, 1);
  const RootBounds c = root_magnitude_bounds(poly({-1, 1}));
  EXPECT_EQ(c.lo, 1);
  EXPECT_EQ(c.hi, 1);
  EXPECT_EQ(root_magnitude_bounds(poly({0, 1})).lo, 0);
  EXPECT_THROW(root_magnitude_bounds(UnivariatePoly(kQ)), std::invalid_argument);
}

TEST(RootBounds, HoldForRandomPolynomials) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    std::vector<long long> c(uniform_u64(rng, 2, 6));
    for (auto& x : c) x = uniform_i64(rng, -8, 8);
    if (c.back() == 0) c.back() = 1;
    const UnivariatePoly p = UnivariatePoly::from_ints(kQ, c);
    if (!is_squarefree(p)) continue;
    const RootBounds b = root_magnitude_bounds(p);
    for (const auto& z : approximate_roots(p, mpq_class(1, 1 << 20))) {
      const double r = std::sqrt(z.norm2().get_d());
      EXPECT_LE(r, b.hi.get_d() + 1e-5);
      EXPECT_GE(r, b.lo.get_d() - 1e-5);
    }
  }
}

TEST(Separation, Examples) {
  const double s = separation_bound(poly({-1, 0, 1}));
  EXPECT_GT(s, 0);
  EXPECT_LE(s, 2);
  const double t = separation_bound(poly({0, -1, 0, 1}));
  EXPECT_GT(t, 0);
  EXPECT_LE(t, 1);
  EXPECT_THROW(separation_bound(poly({1, -2, 1})), NotSquarefree);
}

TEST(Separation, BelowTrueMinimum) {
  Rng rng(3);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    std::vector<long long> c(uniform_u64(rng, 3, 6));
    for (auto& x : c) x = uniform_i64(rng, -8, 8);
    if (c.back() == 0) c.back() = 2;
    const UnivariatePoly p = UnivariatePoly::from_ints(kQ, c);
    if (!is_squarefree(p)) continue;
    const auto roots = approximate_roots(p, mpq_class(1, 1 << 30));
    double best = 1e300;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) best = std::min(best, std::sqrt((roots[i] - roots[j]).norm2().get_d()));
    EXPECT_LE(separation_bound(p), best + 1e-8);
    EXPECT_GT(separation_bound(p), 0);
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(CharPoly, KnownMatrices) {
  using Row = std::vector<mpq_class>;
  // [[2,1],[1,2]]: t^2 - 4t + 3
  EXPECT_EQ(characteristic_polynomial({Row{2, 1}, Row{1, 2}}), (Row{3, -4, 1}));
  // Companion matrix of t^3 - 2t + 5.
  EXPECT_EQ(characteristic_polynomial({Row{0, 0, -5}, Row{1, 0, 2}, Row{0, 1, 0}}), (Row{5, -2, 0, 1}));
  EXPECT_EQ(characteristic_polynomial({}), (Row{1}));
}

TEST(CharPoly, MatchesDeterminantAtPoints) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = uniform_u64(rng, 1, 6);
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    Matrix m(n, n, kQ);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long long v = uniform_u64(rng, 0, 2) == 0 ? 0 : uniform_i64(rng, -4, 4);
        a[i][j] = static_cast<long>(v);
        m(i, j) = kQ.from_int(v);
      }
    const auto chi = characteristic_polynomial(a);
    for (long long x = -2; x <= 2; ++x) {
      Matrix shifted(n, n, kQ);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? kQ.from_int(x) : kQ.zero()) - m(i, j);
      mpq_class val = 0;
      for (std::size_t i = chi.size(); i-- > 0;) val = val * static_cast<long>(x) + chi[i];
      EXPECT_EQ(kQ.from_rational(val), determinant(shifted));
    }
  }
}

TEST(ApproximateRoots, Examples) {
  const mpq_class eps(1, 1 << 30);
  auto r = approximate_roots(poly({-1, 0, 1}), eps);
  ASSERT_EQ(r.size(), 2u);
  std::sort(r.begin(), r.end(), [](const Gaussian& a, const Gaussian& b) { return a.re < b.re; });
  EXPECT_LE((r[0] - Gaussian(-1)).norm2(), eps * eps);
  EXPECT_LE((r[1] - Gaussian(1)).norm2(), eps * eps);
  const auto z = approximate_roots(poly({0, 1}), mpq_class(1, 4));
  EXPECT_EQ(z, std::vector<Gaussian>{Gaussian(0)});
  const auto i = approximate_roots(poly({1, 0, 1}), eps);
  for (const auto& x : i) EXPECT_LE((x.re * x.re), eps * eps);
  EXPECT_THROW(approximate_roots(poly({1, -2, 1}), eps), NotSquarefree);
}

TEST(Threshold, LinearOverQuadratic) {
  // f = x - 1, I = <x^2 - 4>: R = f, |R(+-2)| in {1, 3}.
  const PrecisionBudget b = compute_threshold(from_poly(var(1, 0) - cst(1, 1)), ideal_of({poly({-4, 0, 1})}));
  EXPECT_LE(b.B3, 1);
  EXPECT_GT(b.B3, 0);
  EXPECT_LE(b.M, mpq_class(1, 3));
  EXPECT_LE(b.eps * (b.B2 + b.B4), b.M);
  for (const auto& z : approximate_roots(poly({-4, 0, 1}), b.eps)) {
    const mpq_class v = eval_gaussian(from_poly(var(1, 0) - cst(1, 1)), {z}).norm2();
    EXPECT_GE(v, 4 * b.M * b.M);
  }
}

TEST(Threshold, MemberValuesStayBelowM) {
  const UnivariateIdeal I = ideal_of({poly({-2, 0, 1}), poly({-3, 1, 1})});
  const SparsePoly p1 = var(2, 0) * var(2, 0) - cst(2, 2);
  const SparsePoly f = p1 * var(2, 1);
  const PrecisionBudget b = compute_threshold(from_poly(f), I);
  EXPECT_EQ(b.B3, 0);
  const SearchResult s = search_nonmembership(from_poly(f), I, b);
  EXPECT_EQ(s.decision, Decision::Member);
  EXPECT_EQ(s.tuples_checked, 4u);
  EXPECT_LE(s.max_small_norm2, b.M * b.M);
}

TEST(Threshold, HalvingEpsKeepsM) {
  const Circuit f = from_poly(var(1, 0) - cst(1, 1));
  const UnivariateIdeal I = ideal_of({poly({-4, 0, 1})});
  const PrecisionBudget a = compute_threshold(f, I);
  const PrecisionBudget b = compute_threshold(f, I, mpq_class(a.eps / 2));
  EXPECT_EQ(a.M, b.M);
  EXPECT_EQ(b.eps, a.eps / 2);
  EXPECT_LE(b.eps * (b.B2 + b.B4), b.M);
}

TEST(Threshold, RejectsRepeatedRootsAndMissingGenerators) {
  EXPECT_THROW(compute_threshold(from_poly(var(1, 0)), ideal_of({poly({1, -2, 1})})), NotSquarefree);
  EXPECT_THROW(compute_threshold(from_poly(var(2, 1)), ideal_of({poly({-1, 1})})), std::invalid_argument);
}

TEST(Verify, Examples) {
  const UnivariateIdeal I = ideal_of({poly({-4, 0, 1})});
  const Circuit f = from_poly(var(1, 0) - cst(1, 1));
  const PrecisionBudget b = compute_threshold(f, I);
  EXPECT_EQ(verify_certificate(f, I, {{Gaussian(2)}}, b), Verdict::Accept);
  EXPECT_EQ(verify_certificate(f, I, {{Gaussian(5)}}, b), Verdict::RejectResidual);
  const Circuit g = from_poly(var(1, 0) * var(1, 0) - cst(1, 4));
  const PrecisionBudget bg = compute_threshold(g, I);
  EXPECT_EQ(verify_certificate(g, I, {{Gaussian(2)}}, bg), Verdict::RejectValue);
  EXPECT_THROW(verify_certificate(f, I, {{}}, b), std::invalid_argument);
}

TEST(Search, Examples) {
  const UnivariateIdeal I = ideal_of({poly({-1, 0, 1}), poly({-1, 0, 1})});
  const Circuit f = from_poly(var(2, 0) * var(2, 1));
  const PrecisionBudget b = compute_threshold(f, I);
  const SearchResult s = search_nonmembership(f, I, b);
  ASSERT_EQ(s.decision, Decision::NonMember);
  EXPECT_EQ(verify_certificate(f, I, *s.certificate, b), Verdict::Accept);

  const Circuit g = from_poly((var(2, 0) * var(2, 0) - cst(2, 1)) * var(2, 1));
  EXPECT_EQ(search_nonmembership(g, I, compute_threshold(g, I)).decision, Decision::Member);

  const Circuit one = from_poly(cst(2, 1));
  EXPECT_EQ(search_nonmembership(one, I, compute_threshold(one, I)).decision, Decision::NonMember);
}

TEST(Search, AgreesWithExactDivision) {
  Rng rng(77);
  int nonmembers = 0, members = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = uniform_u64(rng, 1, 2);
    UnivariateIdeal I(kQ);
    for (std::size_t v = 0; v < n; ++v) {
      for (;;) {
        std::vector<long long> c(uniform_u64(rng, 2, 4));
        for (auto& x : c) x = uniform_i64(rng, -8, 8);
        if (c.back() == 0) c.back() = 1;
        const UnivariatePoly p = UnivariatePoly::from_ints(kQ, c);
        if (is_squarefree(p)) {
          I.add(v, p);
          break;
        }
      }
    }
    // Half the instances are forced into the ideal.
    Circuit f = testing::random_circuit(kQ, n, 3, rng, 2);
    if (t % 2 == 0) {
      SparsePoly g = expand(f);
      g = g - divide(g, I);
      f = from_sparse(g);
    }
    const bool member = is_member_brute(f, I);
    (member ? members : nonmembers)++;
    const PrecisionBudget b = compute_threshold(f, I);
    const SearchResult s = search_nonmembership(f, I, b);
    ASSERT_NE(s.decision, Decision::Undecided);
    EXPECT_EQ(s.decision == Decision::Member, member);
    if (s.certificate) EXPECT_EQ(verify_certificate(f, I, *s.certificate, b), Verdict::Accept);
  }
  EXPECT_GT(members, 5);
  EXPECT_GT(nonmembers, 5);
}

}  // namespace
}  // namespace unideal
