#include "unideal/applications.hpp"

#include <bit>
#include <stdexcept>

#include "unideal/linalg.hpp"
#include "unideal/zero_test.hpp"

namespace unideal {

Scalar ryser_permanent(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > 20) throw std::invalid_argument("ryser_permanent is limited to n <= 20");
  const Field& f = a.field();
  if (n == 0) return f.one();
  std::vector<Scalar> row_sums(n, f.zero());
  Scalar total = f.zero();
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (1ULL << n); ++step) {
    const auto col = static_cast<std::size_t>(std::countr_zero(step));
    gray ^= 1ULL << col;
    const bool added = (gray >> col) & 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sums[i] += a(i, col);
      else
        row_sums[i] -= a(i, col);
    }
    Scalar prod = f.one();
    for (const auto& s : row_sums) prod *= s;
    if ((n - static_cast<std::size_t>(std::popcount(gray))) % 2 == 1)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

LowRankInput permanent_input(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  const Field& f = a.field();
  const RowBasis rb = rank_and_row_basis(a);
  LowRankInput in;
  in.outer = Circuit(rb.rank, f);
  std::vector<std::size_t> factors;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> c;
    for (std::size_t t = 0; t < rb.rank; ++t) c.push_back(rb.coords(i, t));
    factors.push_back(in.outer.linear(LinearForm(f, c, f.zero())));
  }
  in.outer.set_output(in.outer.mul(factors));
  in.forms = rb.basis;
  in.degree_bound = static_cast<unsigned>(n);
  return in;
}

Scalar permanent_lowrank(const Matrix& a, RemStats* stats) {
  const LowRankInput in = permanent_input(a);
  const std::size_t n = a.rows();
  if (in.forms.empty()) return n == 0 ? a.field().one() : a.field().zero();
  const UnivariateIdeal ideal = UnivariateIdeal::powers(std::vector<unsigned>(n, 2), a.field());
  return rem_eval(in, ideal, std::vector<Scalar>(n, a.field().one()), stats);
}

VcInstance build_vc_instance(const Graph& g, std::size_t k, const Field& f, bool tight) {
  const std::size_t n = g.order();
  if (k > n) throw std::invalid_argument("cover size exceeds the vertex count");
  if (f.characteristic() == 2) throw std::invalid_argument("characteristic 2 is not supported");
  VcInstance inst;

  // Gram matrix of q(x) = x (A/2) x^T, so each edge is counted once.
  Matrix gram = g.adjacency(f);
  const Scalar half = f.from_int(2).inverse();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) *= half;
  const Congruence cd = congruence_diagonalize(gram);
  const Matrix p = inverse(cd.q);  // gram = P D P^T

  std::vector<Scalar> weights;
  for (std::size_t i = 0; i < n; ++i) {
    if (cd.d(i, i).is_zero()) continue;
    std::vector<Scalar> col;
    for (std::size_t j = 0; j < n; ++j) col.push_back(p(j, i));
    inst.input.forms.emplace_back(f, col, f.zero());
    weights.push_back(cd.d(i, i));
  }
  inst.quadratic_rank = weights.size();
  inst.input.forms.emplace_back(f, std::vector<Scalar>(n, f.one()), f.zero());

  const std::size_t r = inst.quadratic_rank;
  Circuit& c = inst.input.outer;
  c = Circuit(r + 1, f);
  std::vector<std::size_t> squares;
  for (std::size_t i = 0; i < r; ++i) {
    const auto z = c.input(i);
    squares.push_back(c.mul(std::vector<std::size_t>{c.constant(weights[i]), z, z}));
  }
  const auto q = c.add(squares);
  inst.s_max = tight ? g.size() : n * (n - 1) / 2;
  std::vector<std::size_t> factors;
  for (std::size_t s = 1; s <= inst.s_max; ++s)
    factors.push_back(c.add(q, c.constant(-static_cast<long long>(s))));
  const auto sum = c.input(r);
  for (std::size_t t = 0; t + k < n; ++t) factors.push_back(c.add(sum, c.constant(-static_cast<long long>(t))));
  c.set_output(c.mul(factors));

  inst.degree_bound = static_cast<unsigned>(2 * inst.s_max + (n - k));
  inst.input.degree_bound = inst.degree_bound;
  inst.ideal = UnivariateIdeal::boolean(n, f);
  return inst;
}

VcResult vertex_cover_lowrank(const Graph& g, std::size_t k, std::size_t trials, Rng& rng, const VcOptions& options) {
  VcResult result;
  const VcInstance inst = build_vc_instance(g, k, options.field, options.tight);
  result.degree_bound = inst.degree_bound;
  const RemEvaluator ev(inst.input, inst.ideal);
  const auto zt = random_zero_test([&](const std::vector<Scalar>& beta) { return ev(beta); }, g.order(),
                                   inst.degree_bound, trials, options.field, rng);
  result.has_cover = zt.nonzero;
  result.trials_run = zt.trials_run;
  result.error_bound = zt.error_bound;
  result.sample_size = zt.sample_size;
  return result;
}

}  // namespace unideal
