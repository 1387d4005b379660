#include "unideal/reductions.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace unideal {

void KLinEqInstance::validate() const {
  if (a.size() != b.size()) throw std::invalid_argument("k-Lin-Eq: b must have one entry per row");
  for (const auto& row : a)
    if (row.size() != cols()) throw std::invalid_argument("k-Lin-Eq: ragged matrix");
}

void OneInThreeInstance::validate() const {
  if (columns < 2 || columns < vars) throw std::invalid_argument("1-in-3: need columns >= max(2, vars)");
  for (const auto& c : clauses) {
    for (auto v : c)
      if (v >= vars) throw std::invalid_argument("1-in-3: variable out of range");
    if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) throw std::invalid_argument("1-in-3: clause repeats a variable");
  }
}

MembershipInstance reduce_independent_set(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k > n) throw std::invalid_argument("independent set size exceeds the vertex count");
  const Field q;
  MembershipInstance out{Circuit(k, q), UnivariateIdeal(q)};
  for (std::size_t i = 0; i < k; ++i) {
    UnivariatePoly p = UnivariatePoly::constant(q, q.one());
    for (std::size_t j = 1; j <= n; ++j) p = p * UnivariatePoly::linear_root(q, q.from_int(static_cast<long long>(j)));
    out.ideal.add(i, std::move(p));
  }
  Circuit& c = out.circuit;
  auto shifted = [&](std::size_t var, std::size_t value) {
    std::vector<Scalar> coeffs(k, q.zero());
    coeffs[var] = q.one();
    return c.linear(LinearForm(q, coeffs, q.from_int(-static_cast<long long>(value))));
  };
  auto sum_of_squares = [&](std::size_t a, std::size_t u, std::size_t b, std::size_t v) {
    const auto l1 = shifted(a, u);
    const auto l2 = shifted(b, v);
    return c.add(c.mul(l1, l1), c.mul(l2, l2));
  };
  std::vector<std::size_t> factors;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<Scalar> diff(k, q.zero());
      diff[i] = q.one();
      diff[j] = -q.one();
      factors.push_back(c.linear(LinearForm(q, diff, q.zero())));
      for (const auto& [u0, v0] : g.edges()) {
        const std::size_t u = u0 + 1, v = v0 + 1;
        factors.push_back(sum_of_squares(i, u, j, v));
        factors.push_back(sum_of_squares(j, u, i, v));
      }
    }
  c.set_output(c.mul(factors));
  return out;
}

MembershipInstance reduce_klineq(const KLinEqInstance& inst) {
  inst.validate();
  const std::size_t k = inst.rows();
  const std::size_t n = inst.cols();
  const Field q;
  std::vector<std::uint64_t> mu(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (auto x : inst.a[i]) mu[i] += x;

  std::vector<unsigned> exps(2 * k);
  bool feasible = true;
  for (std::size_t i = 0; i < k; ++i) {
    feasible = feasible && inst.b[i] <= mu[i];
    exps[i] = static_cast<unsigned>(inst.b[i] + 1);
    exps[k + i] = inst.b[i] <= mu[i] ? static_cast<unsigned>(mu[i] - inst.b[i] + 1) : 1u;
  }
  MembershipInstance out{Circuit(2 * k, q), UnivariateIdeal::powers(exps, q)};
  Circuit& c = out.circuit;
  if (!feasible) {
    c.set_output(c.constant(0));
    return out;
  }
  std::vector<std::size_t> factors;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> xs, ys;
    for (std::size_t i = 0; i < k; ++i) {
      if (inst.a[i][j] == 0) continue;
      xs.push_back(c.pow(c.input(i), static_cast<unsigned>(inst.a[i][j])));
      ys.push_back(c.pow(c.input(k + i), static_cast<unsigned>(inst.a[i][j])));
    }
    factors.push_back(c.add(c.mul(ys), c.mul(xs)));
  }
  c.set_output(c.mul(factors));
  return out;
}

std::size_t one_in_three_block(std::size_t columns) {
  if (columns < 2) throw std::invalid_argument("1-in-3 packing needs at least two columns");
  return 2 * static_cast<std::size_t>(std::bit_width(columns - 1));
}

KLinEqInstance reduce_one_in_three(const OneInThreeInstance& inst) {
  inst.validate();
  const std::size_t block = one_in_three_block(inst.columns);
  const std::size_t rows = 2 * inst.clauses.size();
  const std::size_t k = (rows + block - 1) / block;
  if (block > 63) throw std::invalid_argument("1-in-3 packing exceeds 64-bit entries");
  KLinEqInstance out;
  out.a.assign(k, std::vector<std::uint64_t>(inst.columns, 0));
  out.b.assign(k, 0);
  // Row 2i holds clause i and row 2i+1 is zero; target 1 on clause rows.
  for (std::size_t i = 0; i < inst.clauses.size(); ++i) {
    const std::size_t row = 2 * i;
    const std::uint64_t bit = 1ULL << (row % block);
    for (auto v : inst.clauses[i]) out.a[row / block][v] |= bit;
    out.b[row / block] |= bit;
  }
  return out;
}

MembershipInstance graph_coloring_instance(const Graph& g, std::size_t k, const Field& f) {
  if (k == 0) throw std::invalid_argument("colour count must be positive");
  const std::size_t n = g.order();
  MembershipInstance out{Circuit(n, f), UnivariateIdeal(f)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> c(k + 1, f.zero());
    c[0] = -f.one();
    c[k] = f.one();
    out.ideal.add(i, UnivariatePoly(f, c));
  }
  Circuit& c = out.circuit;
  std::vector<std::size_t> factors;
  for (const auto& [u, v] : g.edges()) {
    std::vector<Scalar> coeffs(n, f.zero());
    coeffs[u] = f.one();
    coeffs[v] = -f.one();
    factors.push_back(c.linear(LinearForm(f, coeffs, f.zero())));
  }
  c.set_output(c.mul(factors));
  return out;
}

std::vector<Scalar> roots_of_unity(std::size_t k, std::uint64_t p) {
  if (k == 0 || (p - 1) % k != 0) throw std::invalid_argument("need p = 1 mod k");
  const Field f = Field::prime(p);
  // Prime factors of p - 1 identify a generator.
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  std::uint64_t g = 2;
  for (;; ++g) {
    bool generator = true;
    for (auto q : factors) generator = generator && modp::pow(g, (p - 1) / q, p) != 1;
    if (generator) break;
  }
  const std::uint64_t w = modp::pow(g, (p - 1) / k, p);
  std::vector<Scalar> out;
  std::uint64_t x = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(Scalar::residue(x, p));
    x = modp::mul(x, w, p);
  }
  return out;
}

bool vanishes_on_grid(const Circuit& c, const std::vector<std::vector<Scalar>>& axes) {
  const std::size_t n = c.nvars();
  if (axes.size() != n) throw std::invalid_argument("one axis per variable required");
  for (const auto& a : axes)
    if (a.empty()) return true;
  std::vector<std::size_t> idx(n, 0);
  std::vector<Scalar> point(n);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) point[v] = axes[v][idx[v]];
    if (!eval(c, point).is_zero()) return false;
    std::size_t v = 0;
    while (v < n && ++idx[v] == axes[v].size()) idx[v++] = 0;
    if (v == n) return true;
  }
}

}  // namespace unideal
