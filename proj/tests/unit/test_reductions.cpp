#include <gtest/gtest.h>

#include <algorithm>

#include "unideal/bruteforce.hpp"
#include "unideal/hadamard.hpp"
#include "unideal/reductions.hpp"

namespace unideal {
namespace {

const Field kQ;

Graph random_graph(std::size_t n, Rng& rng) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (uniform_u64(rng, 0, 1)) g.add_edge(u, v);
  return g;
}

std::vector<std::vector<Scalar>> integer_grid(std::size_t k, std::size_t n) {
  std::vector<Scalar> axis;
  for (std::size_t j = 1; j <= n; ++j) axis.push_back(kQ.from_int(static_cast<long long>(j)));
  return std::vector<std::vector<Scalar>>(k, axis);
}

bool is_member_on_grid(const MembershipInstance& m, std::size_t k, std::size_t n) {
  return vanishes_on_grid(m.circuit, integer_grid(k, n));
}

TEST(IndependentSet, TriangleHasNoPair) {
  const auto m = reduce_independent_set(Graph::complete(3), 2);
  EXPECT_TRUE(is_member_on_grid(m, 2, 3));
  EXPECT_TRUE(is_member_brute(m.circuit, m.ideal));
}

TEST(IndependentSet, PathEndpointsWitness) {
  const auto m = reduce_independent_set(Graph::path(3), 2);
  EXPECT_FALSE(is_member_brute(m.circuit, m.ideal));
  EXPECT_FALSE(eval(m.circuit, {kQ.from_int(1), kQ.from_int(3)}).is_zero());
  EXPECT_TRUE(eval(m.circuit, {kQ.from_int(1), kQ.from_int(2)}).is_zero());
  EXPECT_TRUE(eval(m.circuit, {kQ.from_int(2), kQ.from_int(2)}).is_zero());
}

TEST(IndependentSet, SingleVertexAlwaysExists) {
  const auto m = reduce_independent_set(Graph::complete(4), 1);
  EXPECT_FALSE(is_member_on_grid(m, 1, 4));
}

TEST(IndependentSet, RejectsOversizedK) { EXPECT_THROW(reduce_independent_set(Graph(2), 3), std::invalid_argument); }

TEST(IndependentSet, MatchesBruteForceOnRandomGraphs) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + uniform_u64(rng, 0, 4);
    const std::size_t k = 1 + uniform_u64(rng, 0, std::min<std::size_t>(n, 3) - 1);
    const Graph g = random_graph(n, rng);
    const auto m = reduce_independent_set(g, k);
    EXPECT_EQ(!is_member_on_grid(m, k, n), brute::has_independent_set(g, k)) << "n=" << n << " k=" << k;
  }
}

TEST(IndependentSet, GridAgreesWithDivisionForPairs) {
  Rng rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = random_graph(3, rng);
    const auto m = reduce_independent_set(g, 2);
    EXPECT_EQ(is_member_brute(m.circuit, m.ideal), is_member_on_grid(m, 2, 3));
  }
}

TEST(KLinEq, SingleRowHasSolution) {
  const KLinEqInstance inst{{{1, 1}}, {1}};
  const auto m = reduce_klineq(inst);
  EXPECT_EQ(m.circuit.nvars(), 2u);
  EXPECT_FALSE(power_ideal_member_brute(m.circuit, {2, 2}));
}

TEST(KLinEq, TargetAboveRowSumIsNo) {
  const KLinEqInstance inst{{{1, 0}}, {2}};
  const auto m = reduce_klineq(inst);
  EXPECT_TRUE(is_member_brute(m.circuit, m.ideal));
}

TEST(KLinEq, RejectsRaggedInput) {
  EXPECT_THROW(reduce_klineq(KLinEqInstance{{{1, 1}, {1}}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(reduce_klineq(KLinEqInstance{{{1, 1}}, {1, 1}}), std::invalid_argument);
}

TEST(KLinEq, MatchesBruteForceOnRandomInstances) {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + uniform_u64(rng, 0, 1);
    const std::size_t n = 1 + uniform_u64(rng, 0, 5);
    KLinEqInstance inst;
    inst.a.assign(k, std::vector<std::uint64_t>(n));
    inst.b.assign(k, 0);
    for (auto& row : inst.a)
      for (auto& x : row) x = uniform_u64(rng, 0, 3);
    for (auto& t : inst.b) t = uniform_u64(rng, 0, 7);
    const auto m = reduce_klineq(inst);
    EXPECT_EQ(!is_member_brute(m.circuit, m.ideal), brute::klineq_solution(inst.a, inst.b).has_value());
  }
}

TEST(OneInThree, BlockWidth) {
  EXPECT_EQ(one_in_three_block(2), 2u);
  EXPECT_EQ(one_in_three_block(4), 4u);
  EXPECT_EQ(one_in_three_block(5), 6u);
}

TEST(OneInThree, SingleClause) {
  const OneInThreeInstance inst{3, 4, {{0, 1, 2}}};
  const auto lin = reduce_one_in_three(inst);
  ASSERT_EQ(lin.rows(), 1u);
  EXPECT_EQ(lin.a[0], (std::vector<std::uint64_t>{1, 1, 1, 0}));
  EXPECT_EQ(lin.b[0], 1u);
  const auto m = reduce_klineq(lin);
  EXPECT_FALSE(is_member_brute(m.circuit, m.ideal));
}

TEST(OneInThree, SharedPairIsUnsatisfiable) {
  // x0 + x1 + x2 = 1, x0 + x1 + x3 = 1, x2 + x3 + x0 = 1 and x1 + x2 + x3 = 1
  // sum to 3 (x0 + x1 + x2 + x3) = 4.
  const OneInThreeInstance inst{4, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  EXPECT_TRUE(brute::one_in_three_solutions(4, inst.clauses).empty());
  const auto lin = reduce_one_in_three(inst);
  EXPECT_FALSE(brute::klineq_solution(lin.a, lin.b).has_value());
}

TEST(OneInThree, SolutionsCorrespond) {
  Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t vars = 3 + uniform_u64(rng, 0, 3);
    const std::size_t columns = vars + uniform_u64(rng, 0, 2);
    OneInThreeInstance inst{vars, columns, {}};
    const std::size_t clauses = 1 + uniform_u64(rng, 0, 4);
    while (inst.clauses.size() < clauses) {
      std::array<std::size_t, 3> c{};
      for (auto& v : c) v = uniform_u64(rng, 0, vars - 1);
      if (c[0] != c[1] && c[0] != c[2] && c[1] != c[2]) inst.clauses.push_back(c);
    }
    const auto sat = brute::one_in_three_solutions(vars, inst.clauses);
    const auto lin = reduce_one_in_three(inst);
    // Every 0/1 vector over the padded columns solves A x = b iff its
    // restriction satisfies the formula.
    for (std::uint64_t mask = 0; mask < (1ULL << columns); ++mask) {
      bool solves = true;
      for (std::size_t r = 0; r < lin.rows(); ++r) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < columns; ++j)
          if (mask >> j & 1) s += lin.a[r][j];
        solves = solves && s == lin.b[r];
      }
      const std::uint64_t restricted = mask & ((1ULL << vars) - 1);
      const bool satisfies = std::find(sat.begin(), sat.end(), restricted) != sat.end();
      EXPECT_EQ(solves, satisfies);
    }
  }
}

TEST(OneInThree, RejectsMalformedClauses) {
  EXPECT_THROW(reduce_one_in_three(OneInThreeInstance{3, 3, {{0, 0, 1}}}), std::invalid_argument);
  EXPECT_THROW(reduce_one_in_three(OneInThreeInstance{3, 3, {{0, 1, 3}}}), std::invalid_argument);
  EXPECT_THROW(reduce_one_in_three(OneInThreeInstance{3, 2, {{0, 1, 2}}}), std::invalid_argument);
}

TEST(Coloring, RootsOfUnity) {
  const auto roots = roots_of_unity(3, 7);
  ASSERT_EQ(roots.size(), 3u);
  for (const auto& r : roots) EXPECT_TRUE(r.pow(3).is_one());
  EXPECT_THROW(roots_of_unity(4, 7), std::invalid_argument);
}

TEST(Coloring, Triangle) {
  const auto three = graph_coloring_instance(Graph::complete(3), 3);
  EXPECT_FALSE(is_member_brute(three.circuit, three.ideal));
  const auto two = graph_coloring_instance(Graph::complete(3), 2);
  EXPECT_TRUE(is_member_brute(two.circuit, two.ideal));
}

TEST(Coloring, EdgelessIsOne) {
  const auto m = graph_coloring_instance(Graph(3), 1);
  EXPECT_TRUE(expand(m.circuit) == SparsePoly::constant(3, kQ, kQ.one()));
  EXPECT_FALSE(is_member_brute(m.circuit, m.ideal));
}

TEST(Coloring, MatchesBruteForce) {
  Rng rng(11);
  const std::uint64_t prime = 1000000009;  // p - 1 is divisible by 2 and 3
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + uniform_u64(rng, 0, 5);
    const std::size_t k = 1 + uniform_u64(rng, 0, 2);
    const Graph g = random_graph(n, rng);
    const Field f = Field::prime(prime);
    const auto m = graph_coloring_instance(g, k, f);
    const std::vector<std::vector<Scalar>> axes(n, roots_of_unity(k, prime));
    EXPECT_EQ(vanishes_on_grid(m.circuit, axes), !brute::is_colorable(g, k));
    const auto exact = graph_coloring_instance(g, k);
    EXPECT_EQ(is_member_brute(exact.circuit, exact.ideal), !brute::is_colorable(g, k));
  }
}

}  // namespace
}  // namespace unideal
