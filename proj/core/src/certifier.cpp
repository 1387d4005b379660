#include "unideal/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "unideal/errors.hpp"

namespace unideal {

// ---------------------------------------------------------------- Gaussian

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  mpq_class r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  const mpq_class n = o.norm2();
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  *this *= Gaussian(o.re, -o.im);
  re /= n;
  im /= n;
  return *this;
}

std::string Gaussian::to_string() const { return re.get_str() + " " + im.get_str(); }

Gaussian eval_gaussian(const UnivariatePoly& p, const Gaussian& z) {
  if (!p.field().is_rational()) throw FieldMismatch("Gaussian evaluation needs a polynomial over Q");
  Gaussian acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= z;
    acc.re += p.coeff(static_cast<std::size_t>(i)).rational();
  }
  return acc;
}

namespace {

struct GaussianRing {
  using Elem = Gaussian;
  const std::vector<Gaussian>& point;
  Elem input(std::size_t v) const { return point[v]; }
  Elem constant(const Scalar& s) const { return Gaussian(s.rational()); }
  Elem linear(const LinearForm& l) const {
    Gaussian acc(l.constant().rational());
    for (std::size_t i = 0; i < l.nvars(); ++i) {
      const Scalar& c = l.coeff(i);
      if (c.is_zero()) continue;
      acc.re += c.rational() * point[i].re;
      acc.im += c.rational() * point[i].im;
    }
    return acc;
  }
  void add_to(Elem& a, const Elem& b) const { a += b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

mpq_class abs_q(const mpq_class& q) { return sgn(q) < 0 ? mpq_class(-q) : q; }

mpq_class pow_q(const mpq_class& q, unsigned e) {
  mpq_class r = 1;
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

void require_rational(const UnivariatePoly& p) {
  if (!p.field().is_rational()) throw FieldMismatch("certifier works over Q");
}

}  // namespace

Gaussian eval_gaussian(const Circuit& c, const std::vector<Gaussian>& point) {
  if (!c.field().is_rational()) throw FieldMismatch("Gaussian evaluation needs a circuit over Q");
  if (point.size() != c.nvars()) throw std::invalid_argument("point has the wrong number of coordinates");
  GaussianRing ring{point};
  return evaluate(c, ring);
}

// ---------------------------------------------------------------- bounds

RootBounds root_magnitude_bounds(const UnivariatePoly& p) {
  require_rational(p);
  if (p.is_zero()) throw std::invalid_argument("root bounds of the zero polynomial");
  const auto d = static_cast<std::size_t>(p.degree());
  RootBounds b;
  mpq_class tail = 0, mx = 0;
  for (std::size_t i = 0; i <= d; ++i) {
    const mpq_class a = abs_q(p.coeff(i).rational());
    if (i >= 1) tail += a;
    mx = std::max(mx, a);
  }
  const mpq_class a0 = abs_q(p.coeff(0).rational());
  b.lo = sgn(a0) == 0 || sgn(tail) == 0 ? mpq_class(sgn(tail) == 0 ? 1 : 0) : std::min(mpq_class(1), mpq_class(a0 / tail));
  b.hi = std::max(mpq_class(1), mpq_class(mpq_class(static_cast<unsigned long>(d)) * mx / abs_q(p.leading().rational())));
  return b;
}

mpq_class separation_bound_squared(const UnivariatePoly& p) {
  require_rational(p);
  if (p.degree() < 2) throw std::invalid_argument("separation needs degree >= 2");
  if (!is_squarefree(p)) throw NotSquarefree("polynomial has a repeated root");
  const auto d = static_cast<unsigned long>(p.degree());
  const mpq_class disc = abs_q(discriminant(p).rational());
  mpq_class norm2 = 0;
  for (const auto& c : p.coeffs()) norm2 += c.rational() * c.rational();
  // delta^2 = 3 |disc| d^{-(d+2)} ||p||^{-2(d-1)}
  return mpq_class(3) * disc / (pow_q(mpq_class(d), static_cast<unsigned>(d + 2)) * pow_q(norm2, static_cast<unsigned>(d - 1)));
}

double separation_bound(const UnivariatePoly& p) {
  if (p.degree() < 2) return std::numeric_limits<double>::infinity();
  return std::sqrt(separation_bound_squared(p).get_d());
}

namespace {

// det(tI - A) over GF(p) via Hessenberg reduction, low-to-high coefficients.
std::vector<std::uint64_t> charpoly_mod(std::vector<std::vector<std::uint64_t>> h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const std::uint64_t inv = modp::inverse(h[m][m - 1], p);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h[j][m - 1] == 0) continue;
      const std::uint64_t u = modp::mul(h[j][m - 1], inv, p);
      for (std::size_t c = 0; c < n; ++c) h[j][c] = modp::sub(h[j][c], modp::mul(u, h[m][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][m] = modp::add(h[r][m], modp::mul(u, h[r][j], p), p);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod_{j=k-i+1}^{k} h_{j,j-1}) p_{k-i-1}, 1-based.
  std::vector<std::vector<std::uint64_t>> q(n + 1);
  q[0] = {1 % p};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> next(k + 1, 0);
    for (std::size_t j = 0; j < q[k - 1].size(); ++j) {
      next[j + 1] = modp::add(next[j + 1], q[k - 1][j], p);
      next[j] = modp::sub(next[j], modp::mul(h[k - 1][k - 1], q[k - 1][j], p), p);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = modp::mul(prod, h[k - i][k - i - 1], p);
      if (prod == 0) break;
      const std::uint64_t factor = modp::mul(h[k - i - 1][k - 1], prod, p);
      for (std::size_t j = 0; j < q[k - i - 1].size(); ++j)
        next[j] = modp::sub(next[j], modp::mul(factor, q[k - i - 1][j], p), p);
    }
    q[k] = std::move(next);
  }
  return q[n];
}

}  // namespace

std::vector<mpq_class> characteristic_polynomial(const std::vector<std::vector<mpq_class>>& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Scale to an integer matrix B = cA; chi_A(t) = c^{-n} chi_B(c t).
  mpz_class c = 1;
  for (const auto& row : a)
    for (const auto& x : row) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), x.get_den_mpz_t());
  std::vector<std::vector<mpz_class>> b(n, std::vector<mpz_class>(n));
  mpz_class rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      b[i][j] = a[i][j].get_num() * (c / a[i][j].get_den());
      row_sum += abs(b[i][j]);
    }
    rho = std::max(rho, row_sum);
  }
  // Eigenvalues of B lie within rho, so |coeff_k| <= C(n,k) rho^{n-k} < (2 max(rho,1))^n.
  mpz_class bound;
  mpz_pow_ui(bound.get_mpz_t(), mpz_class(2 * std::max(rho, mpz_class(1))).get_mpz_t(), n);
  bound *= 2;

  std::vector<mpz_class> acc(n + 1, 0);
  mpz_class modulus = 1;
  std::uint64_t prime = (1ULL << 62);
  while (modulus <= bound) {
    do --prime;
    while (!is_probable_prime(prime));
    std::vector<std::vector<std::uint64_t>> bm(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) bm[i][j] = modp::reduce(b[i][j], prime);
    const std::vector<std::uint64_t> r = charpoly_mod(std::move(bm), prime);
    const std::uint64_t minv = modp::inverse(modp::reduce(modulus, prime), prime);
    for (std::size_t k = 0; k <= n; ++k) {
      const std::uint64_t cur = modp::reduce(acc[k], prime);
      const std::uint64_t step = modp::mul(modp::sub(r[k], cur, prime), minv, prime);
      acc[k] += modulus * mpz_class(static_cast<unsigned long>(step));
    }
    modulus *= mpz_class(static_cast<unsigned long>(prime));
  }
  std::vector<mpq_class> out(n + 1);
  mpz_class cpow = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    mpz_class v = acc[k];
    if (2 * v > modulus) v -= modulus;
    out[k] = mpq_class(v, cpow);
    out[k].canonicalize();
    cpow *= c;
  }
  return out;
}

unsigned coefficient_bits(const UnivariatePoly& p) {
  require_rational(p);
  unsigned L = 1;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    const mpq_class& q = c.rational();
    L = std::max<unsigned>(L, static_cast<unsigned>(mpz_sizeinbase(q.get_num_mpz_t(), 2)));
    L = std::max<unsigned>(L, static_cast<unsigned>(mpz_sizeinbase(q.get_den_mpz_t(), 2)));
  }
  return L;
}

// ---------------------------------------------------------------- roots

namespace {

mpq_class round_to_bits(const mpq_class& x, unsigned bits) {
  mpz_class scaled_num = x.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
  mpz_class q;
  // round(x 2^bits) = floor((2 num 2^bits + den) / (2 den))
  mpz_class num2 = 2 * scaled_num + x.get_den();
  mpz_class den2 = 2 * x.get_den();
  mpz_fdiv_q(q.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
  mpq_class r(q);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
  return r;
}

mpq_class from_double(long double v) {
  mpq_class r;
  mpq_set_d(r.get_mpq_t(), static_cast<double>(v));
  return r;
}

std::vector<std::complex<long double>> durand_kerner(const UnivariatePoly& p) {
  const auto d = static_cast<std::size_t>(p.degree());
  std::vector<std::complex<long double>> c(d + 1);
  const long double lead = p.leading().rational().get_d();
  for (std::size_t i = 0; i <= d; ++i) c[i] = static_cast<long double>(p.coeff(i).rational().get_d()) / lead;
  auto eval = [&](std::complex<long double> z) {
    std::complex<long double> acc = 0;
    for (std::size_t i = d + 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
  };
  const long double radius = root_magnitude_bounds(p).hi.get_d();
  std::vector<std::complex<long double>> z(d);
  const std::complex<long double> seed(0.4L, 0.9L);
  std::complex<long double> w = 1;
  for (std::size_t i = 0; i < d; ++i) {
    z[i] = w * radius;
    w *= seed;
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::complex<long double> den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      if (std::abs(den) == 0) den = 1e-30L;
      const auto step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

}  // namespace

namespace {

// Rounded Newton steps until every |p(z_i)|^2 < threshold2; false on stall.
bool refine(const UnivariatePoly& p, const UnivariatePoly& dp, std::vector<Gaussian>& z, const mpq_class& threshold2,
            unsigned target_bits) {
  std::vector<bool> done(z.size(), false);
  unsigned bits = 64;
  for (int iter = 0; iter < 400; ++iter) {
    bool all = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      const Gaussian v = eval_gaussian(p, z[i]);
      if (v.norm2() < threshold2) {
        done[i] = true;
        continue;
      }
      all = false;
      const Gaussian dv = eval_gaussian(dp, z[i]);
      if (sgn(dv.norm2()) == 0) return false;
      const Gaussian next = z[i] - v / dv;
      z[i] = Gaussian(round_to_bits(next.re, bits), round_to_bits(next.im, bits));
    }
    if (all) return true;
    bits = std::min(2 * bits, target_bits);
  }
  return false;
}

unsigned log2_inverse(const mpq_class& r) {
  return static_cast<unsigned>(std::max<long>(0, -static_cast<long>(std::floor(std::log2(r.get_d())))));
}

}  // namespace

std::vector<Gaussian> approximate_roots(const UnivariatePoly& p, const mpq_class& eps, unsigned L) {
  require_rational(p);
  if (p.degree() < 1) throw std::invalid_argument("approximate_roots needs a nonconstant polynomial");
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be positive");
  if (!is_squarefree(p)) throw NotSquarefree("polynomial has a repeated root");
  if (L == 0) L = coefficient_bits(p);
  const auto d = static_cast<unsigned>(p.degree());
  const UnivariatePoly dp = p.derivative();
  std::vector<Gaussian> z;
  for (const auto& c : durand_kerner(p)) z.emplace_back(from_double(c.real()), from_double(c.imag()));

  // Approximations within r of roots and pairwise more than 2r apart track
  // distinct roots; r shrinks from eps until that holds, which it must once
  // r < sep / 4 unless two approximations share a root.
  const mpq_class floor2 = d >= 2 ? mpq_class(separation_bound_squared(p) / 64) : mpq_class(0);
  mpq_class r = eps;
  for (;;) {
    mpq_class threshold = pow_q(r, d);
    mpq_div_2exp(threshold.get_mpq_t(), threshold.get_mpq_t(), L);
    const unsigned target_bits = L + d * log2_inverse(r) + 128;
    if (!refine(p, dp, z, threshold * threshold, target_bits))
      throw ConvergenceFailure("root refinement did not reach the residual threshold");
    bool separated = true;
    const mpq_class sep2 = 4 * r * r;
    for (unsigned i = 0; i < d && separated; ++i)
      for (unsigned j = i + 1; j < d && separated; ++j) separated = (z[i] - z[j]).norm2() > sep2;
    if (separated) return z;
    if (r * r < floor2) throw ConvergenceFailure("two approximations track the same root");
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), 2);
  }
}

// ---------------------------------------------------------------- threshold

namespace {

// sum_e |c_e| sum_i e_i rho_i^{e_i - 1} prod_{j != i} rho_j^{e_j}
mpq_class lipschitz_bound(const SparsePoly& g, const std::vector<mpq_class>& rho) {
  mpq_class total = 0;
  for (const auto& [e, c] : g.terms()) {
    const mpq_class a = abs_q(c.rational());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpq_class term = a * e[i] * pow_q(rho[i], e[i] - 1);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (j != i) term *= pow_q(rho[j], e[j]);
      total += term;
    }
  }
  return total;
}

struct IdealInfo {
  std::vector<const UnivariatePoly*> gens;
  std::vector<unsigned> degrees;
  std::size_t dimension = 1;
};

IdealInfo check_ideal(const Circuit& f, const UnivariateIdeal& ideal) {
  if (!f.field().is_rational() || !ideal.field().is_rational()) throw FieldMismatch("certifier works over Q");
  IdealInfo info;
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    const UnivariatePoly* p = ideal.find(v);
    if (p == nullptr) throw std::invalid_argument("every variable needs a generator");
    if (!is_squarefree(*p)) throw NotSquarefree("generator for x" + std::to_string(v + 1) + " has a repeated root");
    info.gens.push_back(p);
    info.degrees.push_back(static_cast<unsigned>(p->degree()));
    info.dimension *= static_cast<std::size_t>(p->degree());
    if (info.dimension > kSearchTupleCap) throw CapExceeded(kSearchTupleCap, info.dimension);
  }
  return info;
}

}  // namespace

PrecisionBudget compute_threshold(const Circuit& f, const UnivariateIdeal& ideal, const std::optional<mpq_class>& eps_cap) {
  const IdealInfo info = check_ideal(f, ideal);
  if (info.dimension > kThresholdDimensionCap) throw CapExceeded(kThresholdDimensionCap, info.dimension);
  const std::size_t n = f.nvars();
  PrecisionBudget b;
  b.n = n;
  for (std::size_t v = 0; v < n; ++v) {
    b.L = std::max(b.L, coefficient_bits(*info.gens[v]));
    b.d = std::max(b.d, info.degrees[v]);
    b.radius.push_back(root_magnitude_bounds(*info.gens[v]).hi + mpq_class(1, 2));
  }

  const SparsePoly full = expand(f);
  const SparsePoly rem = divide(full, ideal);
  b.B2 = lipschitz_bound(full - rem, b.radius);
  b.B4 = lipschitz_bound(rem, b.radius);

  if (rem.is_zero()) {
    b.B3 = 0;
    b.M = 1;
  } else {
    // Matrix of multiplication by R on the monomial basis of Q[x]/I; its
    // eigenvalues are the values R(a) over all root tuples a.
    std::vector<Exponents> basis{Exponents(n, 0)};
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Exponents> next;
      for (const auto& e : basis)
        for (std::uint32_t k = 0; k < info.degrees[v]; ++k) {
          Exponents x = e;
          x[v] = k;
          next.push_back(x);
        }
      basis = std::move(next);
    }
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<mpq_class>> mat(basis.size(), std::vector<mpq_class>(basis.size(), 0));
    for (std::size_t col = 0; col < basis.size(); ++col) {
      SparsePoly mono(n, f.field());
      mono.add_term(basis[col], f.field().one());
      const SparsePoly column = divide(rem * mono, ideal);
      for (const auto& [e, c] : column.terms()) mat[index.at(e)][col] = c.rational();
    }
    std::vector<mpq_class> chi = characteristic_polynomial(mat);
    std::size_t zeros = 0;
    while (zeros < chi.size() && sgn(chi[zeros]) == 0) ++zeros;
    std::vector<Scalar> trimmed;
    for (std::size_t i = zeros; i < chi.size(); ++i) trimmed.emplace_back(chi[i]);
    b.B3 = root_magnitude_bounds(UnivariatePoly(Field{}, trimmed)).lo;
    b.M = b.B3 / 3;
  }

  mpq_class limit(1, 2);
  if (eps_cap) {
    if (sgn(*eps_cap) <= 0) throw std::invalid_argument("eps cap must be positive");
    limit = std::min(limit, *eps_cap);
  }
  const mpq_class slope = b.B2 + b.B4;
  if (sgn(slope) > 0) limit = std::min(limit, mpq_class(b.M / slope));
  b.eps = 1;
  while (b.eps > limit) mpq_div_2exp(b.eps.get_mpq_t(), b.eps.get_mpq_t(), 1);
  return b;
}

// ---------------------------------------------------------------- verify

Verdict verify_certificate(const Circuit& f, const UnivariateIdeal& ideal, const Certificate& cert,
                           const PrecisionBudget& budget) {
  const IdealInfo info = check_ideal(f, ideal);
  if (cert.point.size() != f.nvars()) throw std::invalid_argument("certificate has the wrong number of coordinates");
  for (std::size_t v = 0; v < f.nvars(); ++v) {
    mpq_class t = pow_q(budget.eps, info.degrees[v]);
    mpq_div_2exp(t.get_mpq_t(), t.get_mpq_t(), budget.L);
    if (!(eval_gaussian(*info.gens[v], cert.point[v]).norm2() < t * t)) return Verdict::RejectResidual;
  }
  const mpq_class value2 = eval_gaussian(f, cert.point).norm2();
  return value2 >= 4 * budget.M * budget.M ? Verdict::Accept : Verdict::RejectValue;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Member:
      return "MEMBER";
    case Decision::NonMember:
      return "NOT-MEMBER";
    case Decision::Undecided:
      return "UNDECIDED";
  }
  return "?";
}

SearchResult search_nonmembership(const Circuit& f, const UnivariateIdeal& ideal, const PrecisionBudget& budget) {
  const IdealInfo info = check_ideal(f, ideal);
  const std::size_t n = f.nvars();
  std::vector<std::vector<Gaussian>> roots;
  for (std::size_t v = 0; v < n; ++v) roots.push_back(approximate_roots(*info.gens[v], budget.eps, budget.L));

  SearchResult result;
  const mpq_class small2 = budget.M * budget.M;
  const mpq_class large2 = 4 * small2;
  bool undecided = false;
  std::vector<std::size_t> idx(n, 0);
  std::vector<Gaussian> point(n);
  for (;;) {
    for (std::size_t v = 0; v < n; ++v) point[v] = roots[v][idx[v]];
    const mpq_class value2 = eval_gaussian(f, point).norm2();
    ++result.tuples_checked;
    if (value2 >= large2) {
      result.decision = Decision::NonMember;
      result.certificate = Certificate{point};
      return result;
    }
    if (value2 <= small2)
      result.max_small_norm2 = std::max(result.max_small_norm2, value2);
    else
      undecided = true;
    std::size_t v = 0;
    while (v < n && ++idx[v] == roots[v].size()) idx[v++] = 0;
    if (v == n) break;
  }
  result.decision = undecided ? Decision::Undecided : Decision::Member;
  return result;
}

}  // namespace unideal
