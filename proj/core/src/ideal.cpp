#include "unideal/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "unideal/errors.hpp"

namespace unideal {

UnivariateIdeal UnivariateIdeal::boolean(std::size_t n, Field f) {
  UnivariateIdeal ideal(f);
  for (std::size_t i = 0; i < n; ++i) ideal.add(i, UnivariatePoly::from_ints(f, {0, -1, 1}));
  return ideal;
}

UnivariateIdeal UnivariateIdeal::powers(const std::vector<unsigned>& exponents, Field f) {
  UnivariateIdeal ideal(f);
  for (std::size_t i = 0; i < exponents.size(); ++i) ideal.add(i, UnivariatePoly::monomial(f, f.one(), exponents[i]));
  return ideal;
}

void UnivariateIdeal::add(std::size_t var, UnivariatePoly p) {
  if (p.degree() < 1) throw std::invalid_argument("ideal generators must be nonconstant");
  if (!(p.field() == field_)) throw std::invalid_argument("generator field differs from the ideal's field");
  if (find(var) != nullptr) throw std::invalid_argument("two generators for x" + std::to_string(var + 1));
  gens_.push_back({var, std::move(p)});
}

const UnivariatePoly* UnivariateIdeal::find(std::size_t var) const {
  for (const auto& g : gens_)
    if (g.var == var) return &g.poly;
  return nullptr;
}

std::size_t UnivariateIdeal::var_span() const {
  std::size_t span = 0;
  for (const auto& g : gens_) span = std::max(span, g.var + 1);
  return span;
}

std::optional<std::vector<unsigned>> UnivariateIdeal::power_exponents(std::size_t n) const {
  std::vector<unsigned> e(n, 0);
  for (const auto& g : gens_) {
    if (g.var >= n) return std::nullopt;
    for (int i = 0; i < g.poly.degree(); ++i)
      if (!g.poly.coeff(static_cast<std::size_t>(i)).is_zero()) return std::nullopt;
    e[g.var] = static_cast<unsigned>(g.poly.degree());
  }
  return e;
}

UnivariateIdeal UnivariateIdeal::embedded(const Field& f) const {
  UnivariateIdeal out(f);
  for (const auto& g : gens_) out.add(g.var, UnivariatePoly(f, g.poly.coeffs()));
  return out;
}

std::vector<UnivariatePoly> power_table(const UnivariatePoly& p, std::size_t max_e) {
  if (p.degree() < 1) throw std::invalid_argument("power_table needs a nonconstant modulus");
  const Field& f = p.field();
  std::vector<UnivariatePoly> table;
  table.reserve(max_e + 1);
  UnivariatePoly cur = UnivariatePoly::constant(f, f.one()) % p;
  const UnivariatePoly x = UnivariatePoly::monomial(f, f.one(), 1);
  for (std::size_t e = 0; e <= max_e; ++e) {
    table.push_back(cur);
    cur = (cur * x) % p;
  }
  return table;
}

SparsePoly divide(const SparsePoly& f, const UnivariateIdeal& ideal) {
  if (!(f.field() == ideal.field())) throw FieldMismatch("polynomial and ideal live over different fields");
  std::vector<const Generator*> order;
  for (const auto& g : ideal.generators()) order.push_back(&g);
  std::sort(order.begin(), order.end(), [](const Generator* a, const Generator* b) { return a->var < b->var; });

  SparsePoly cur = f;
  for (const Generator* g : order) {
    if (g->var >= f.nvars()) continue;
    const auto d = static_cast<std::uint32_t>(g->poly.degree());
    const std::uint32_t top = cur.degree_in(g->var);
    if (top < d) continue;
    const auto table = power_table(g->poly, top);
    SparsePoly next(cur.nvars(), cur.field());
    for (const auto& [e, c] : cur.terms()) {
      if (e[g->var] < d) {
        next.add_term(e, c);
        continue;
      }
      Exponents e2 = e;
      const auto& red = table[e[g->var]];
      for (std::size_t j = 0; j < red.coeffs().size(); ++j) {
        if (red.coeffs()[j].is_zero()) continue;
        e2[g->var] = static_cast<std::uint32_t>(j);
        next.add_term(e2, c * red.coeffs()[j]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

SparsePoly remainder_brute(const Circuit& c, const UnivariateIdeal& ideal, std::size_t monomial_cap) {
  return divide(expand(c, monomial_cap), ideal.embedded(c.field()));
}

bool is_member_brute(const Circuit& c, const UnivariateIdeal& ideal, std::size_t monomial_cap) {
  return remainder_brute(c, ideal, monomial_cap).is_zero();
}

}  // namespace unideal
