#include "selftest.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <string>

#include "unideal/applications.hpp"
#include "unideal/bruteforce.hpp"
#include "unideal/certifier.hpp"
#include "unideal/hadamard.hpp"
#include "unideal/ideal.hpp"
#include "unideal/linalg.hpp"
#include "unideal/lowrank.hpp"
#include "unideal/reductions.hpp"

namespace unideal::cli {

namespace {

const Field kQ;

Scalar small(const Field& f, Rng& rng, long long lo = -5, long long hi = 5) { return f.from_int(uniform_i64(rng, lo, hi)); }

std::vector<Scalar> small_point(const Field& f, std::size_t n, Rng& rng) {
  std::vector<Scalar> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(small(f, rng));
  return p;
}

/// Sum of products of inputs and affine forms, degree <= max_deg.
Circuit random_circuit(const Field& f, std::size_t n, unsigned max_deg, Rng& rng) {
  Circuit c(n, f);
  std::vector<std::size_t> sums;
  for (int s = 0; s < 3; ++s) {
    std::vector<std::size_t> factors{c.constant(small(f, rng))};
    const auto deg = uniform_u64(rng, 0, max_deg);
    for (std::uint64_t j = 0; j < deg; ++j) {
      if (uniform_u64(rng, 0, 1) == 0) {
        factors.push_back(c.input(uniform_u64(rng, 0, n - 1)));
      } else {
        factors.push_back(c.linear(LinearForm(f, small_point(f, n, rng), small(f, rng))));
      }
    }
    sums.push_back(c.mul(factors));
  }
  c.set_output(c.add(sums));
  return c;
}

UnivariateIdeal random_ideal(const Field& f, std::size_t n, Rng& rng) {
  UnivariateIdeal ideal(f);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Scalar> c;
    const auto d = uniform_u64(rng, 1, 3);
    for (std::uint64_t j = 0; j < d; ++j) c.push_back(small(f, rng, -3, 3));
    c.push_back(f.one());
    ideal.add(v, UnivariatePoly(f, c));
  }
  return ideal;
}

bool remainder_matches(Rng& rng) {
  const std::vector<Field> fields{kQ, Field::prime(random_prime(64, rng))};
  for (const Field& f : fields)
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = uniform_u64(rng, 1, 5), r = uniform_u64(rng, 1, 3);
      LowRankInput input;
      input.outer = random_circuit(f, r, 3, rng);
      for (std::size_t i = 0; i < r; ++i) input.forms.emplace_back(f, small_point(f, n, rng), small(f, rng));
      input.degree_bound = static_cast<unsigned>(input.outer.degree_bound());
      const UnivariateIdeal ideal = random_ideal(f, n, rng);
      const auto alpha = small_point(f, n, rng);
      if (rem_eval(input, ideal, alpha) != divide(expand(compose(input)), ideal).eval(alpha)) return false;
    }
  return true;
}

bool permanent_matches(Rng& rng) {
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = uniform_u64(rng, 1, 6);
    Matrix a(n, n, kQ);
    const auto r = uniform_u64(rng, 0, 3);
    for (std::uint64_t s = 0; s < r; ++s) {
      const auto u = small_point(kQ, n, rng), v = small_point(kQ, n, rng);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) += u[i] * v[j];
    }
    if (permanent_lowrank(a) != ryser_permanent(a)) return false;
  }
  return true;
}

bool vertex_cover_matches(Rng& rng) {
  std::vector<Graph> graphs{Graph(3), Graph::cycle(4), Graph::star(5)};
  for (std::size_t a = 1; a <= 2; ++a)
    for (std::size_t b = a; b <= 3; ++b) graphs.push_back(Graph::complete_bipartite(a, b));
  for (const Graph& g : graphs) {
    const std::size_t optimum = brute::min_vertex_cover(g);
    for (std::size_t k = 0; k <= g.order(); ++k)
      if (vertex_cover_lowrank(g, k, 10, rng).has_cover != (k >= optimum)) return false;
  }
  return true;
}

bool hadamard_matches(Rng& rng) {
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = uniform_u64(rng, 1, 3);
    const auto k = static_cast<unsigned>(uniform_u64(rng, 1, 3));
    const Circuit c = random_circuit(kQ, n, k, rng);
    DiagonalCircuit d(kQ, n, k);
    for (int s = 0; s < 2; ++s) d.add(small(kQ, rng), LinearForm(kQ, small_point(kQ, n, rng), kQ.zero()));
    const auto b = small_point(kQ, n, rng);
    const SparsePoly f = expand(c), g = d.expand();
    Scalar literal = kQ.zero();
    for (const auto& [e, coef] : f.terms()) {
      Scalar term = coef * g.coeff(e);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 2; j <= e[i]; ++j) term *= kQ.from_int(j);
        term *= b[i].pow(e[i]);
      }
      literal += term;
    }
    if (scaled_hadamard_eval(c, d, b) != literal) return false;
  }
  return true;
}

bool powers_match(Rng& rng) {
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = uniform_u64(rng, 1, 5);
    const auto k = static_cast<unsigned>(uniform_u64(rng, 1, 3));
    std::vector<unsigned> e(n);
    for (auto& x : e) x = static_cast<unsigned>(uniform_u64(rng, 1, 3));
    const Circuit c = random_circuit(kQ, n, k, rng);
    const PowersResult r = membership_powers(c, PowerIdealSpec{e, k}, rng);
    if (r.not_member == power_ideal_member_brute(c, e)) return false;
  }
  return true;
}

bool fan_in_matches(Rng& rng) {
  for (unsigned k = 1; k <= 4; ++k) {
    const DiagonalCircuit d = build_detection_circuit(PowerIdealSpec{std::vector<unsigned>(k + 1, 2), k}, 3, rng);
    if (d.fan_in() != 3 * (std::size_t{1} << (colour_count(k) - 1))) return false;
  }
  return coverage_trials(3) == 18;
}

bool certifier_matches(Rng& rng) {
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = uniform_u64(rng, 1, 2);
    UnivariateIdeal ideal(kQ);
    for (std::size_t v = 0; v < n; ++v)
      for (;;) {
        std::vector<Scalar> c{small(kQ, rng), small(kQ, rng), kQ.one()};
        UnivariatePoly p(kQ, c);
        if (is_squarefree(p)) {
          ideal.add(v, p);
          break;
        }
      }
    Circuit f = random_circuit(kQ, n, 3, rng);
    if (t % 2 == 0) {
      const SparsePoly g = expand(f);
      f = from_sparse(g - divide(g, ideal));
    }
    const PrecisionBudget budget = compute_threshold(f, ideal);
    const SearchResult s = search_nonmembership(f, ideal, budget);
    if ((s.decision == Decision::Member) != is_member_brute(f, ideal) || s.decision == Decision::Undecided) return false;
    if (s.certificate && verify_certificate(f, ideal, *s.certificate, budget) != Verdict::Accept) return false;
  }
  return true;
}

bool reductions_match(Rng& rng) {
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = uniform_u64(rng, 2, 5);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (uniform_u64(rng, 0, 1)) g.add_edge(u, v);
    const std::size_t k = uniform_u64(rng, 1, 2);
    std::vector<Scalar> axis;
    for (std::size_t j = 1; j <= n; ++j) axis.push_back(kQ.from_int(static_cast<long long>(j)));
    const auto is = reduce_independent_set(g, k);
    if (vanishes_on_grid(is.circuit, std::vector<std::vector<Scalar>>(k, axis)) == brute::has_independent_set(g, k))
      return false;
    const auto col = graph_coloring_instance(g, k + 1);
    if (is_member_brute(col.circuit, col.ideal) == brute::is_colorable(g, k + 1)) return false;

    KLinEqInstance lin;
    lin.a.assign(1, std::vector<std::uint64_t>(n));
    for (auto& x : lin.a[0]) x = uniform_u64(rng, 0, 2);
    lin.b = {uniform_u64(rng, 0, 2 * n)};
    const auto m = reduce_klineq(lin);
    if (is_member_brute(m.circuit, m.ideal) == brute::klineq_solution(lin.a, lin.b).has_value()) return false;
  }
  const OneInThreeInstance sat{4, 4, {{0, 1, 2}, {1, 2, 3}}};
  const KLinEqInstance lin = reduce_one_in_three(sat);
  return brute::klineq_solution(lin.a, lin.b).has_value() == !brute::one_in_three_solutions(4, sat.clauses).empty();
}

bool division_laws_hold(Rng& rng) {
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = uniform_u64(rng, 1, 3);
    const UnivariateIdeal ideal = random_ideal(kQ, n, rng);
    const SparsePoly f = expand(random_circuit(kQ, n, 5, rng));
    const SparsePoly g = expand(random_circuit(kQ, n, 5, rng));
    const SparsePoly rf = divide(f, ideal);
    const Scalar a = small(kQ, rng), b = small(kQ, rng);
    if (divide(f * a + g * b, ideal) != rf * a + divide(g, ideal) * b) return false;
    if (divide(rf, ideal) != rf) return false;
    for (const auto& gen : ideal.generators())
      if (static_cast<int>(rf.degree_in(gen.var)) >= gen.poly.degree()) return false;
    UnivariateIdeal reversed(kQ);
    for (auto it = ideal.generators().rbegin(); it != ideal.generators().rend(); ++it) reversed.add(it->var, it->poly);
    if (divide(f, reversed) != rf) return false;
  }
  return true;
}

}  // namespace

int run_selftest(std::uint64_t seed, std::ostream& out) {
  const std::vector<std::pair<const char*, std::function<bool(Rng&)>>> checks{
      {"remainder evaluation vs expand-and-divide", remainder_matches},
      {"low-rank permanent vs Ryser", permanent_matches},
      {"vertex cover vs exhaustive search", vertex_cover_matches},
      {"scaled Hadamard vs literal definition", hadamard_matches},
      {"power-ideal membership vs monomial check", powers_match},
      {"detection circuit fan-in", fan_in_matches},
      {"certifier vs exact division", certifier_matches},
      {"reductions vs source problems", reductions_match},
      {"division algebra laws", division_laws_hold},
  };
  int failures = 0;
  Rng rng(seed);
  for (const auto& [name, check] : checks) {
    bool ok = false;
    try {
      ok = check(rng);
    } catch (const std::exception& e) {
      out << "  (" << e.what() << ")\n";
    }
    failures += !ok;
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
  }
  return failures;
}

}  // namespace unideal::cli
