#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "unideal/circuit.hpp"
#include "unideal/ideal.hpp"
#include "unideal/univariate.hpp"

namespace unideal {

/// Exact complex number re + im*i with rational parts.
struct Gaussian {
  mpq_class re;
  mpq_class im;

  Gaussian() = default;
  Gaussian(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}

  /// |z|^2
  mpq_class norm2() const { return re * re + im * im; }
  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  /// o must be nonzero.
  Gaussian& operator/=(const Gaussian& o);
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

  std::string to_string() const;
};

/// Horner evaluation of a polynomial over Q at a Gaussian rational.
Gaussian eval_gaussian(const UnivariatePoly& p, const Gaussian& z);
/// Exact evaluation of a circuit over Q at Gaussian rational inputs.
Gaussian eval_gaussian(const Circuit& c, const std::vector<Gaussian>& point);

struct RootBounds {
  /// 0 when the constant coefficient vanishes.
  mpq_class lo;
  mpq_class hi;
};

/// Every complex root a satisfies lo <= |a| <= hi with
/// lo = min(1, |a_0| / sum_{i>=1} |a_i|) and hi = max(1, d max|a_i| / |a_d|).
/// Throws std::invalid_argument for the zero polynomial.
RootBounds root_magnitude_bounds(const UnivariatePoly& p);

/// delta^2 for the Mahler bound
/// delta = sqrt(3) |disc|^{1/2} d^{-(d+2)/2} ||p||_2^{-(d-1)}, exact.
/// Requires degree >= 2; throws NotSquarefree when p has a repeated root.
mpq_class separation_bound_squared(const UnivariatePoly& p);
/// sqrt of separation_bound_squared; +infinity below degree 2.
double separation_bound(const UnivariatePoly& p);

/// Characteristic polynomial det(t I - A) over Q, low-to-high coefficients.
std::vector<mpq_class> characteristic_polynomial(const std::vector<std::vector<mpq_class>>& a);

/// Approximations of all deg p roots of a squarefree p over Q. Each one z
/// satisfies |p(z)| < 2^{-L} eps^d (hence lies within eps of a root) and the
/// approximations are pairwise more than 2 eps apart, so they track distinct
/// roots. `L` defaults to coefficient_bits(p). Throws NotSquarefree or
/// ConvergenceFailure.
std::vector<Gaussian> approximate_roots(const UnivariatePoly& p, const mpq_class& eps, unsigned L = 0);

/// Smallest L >= 1 with 2^{-L} <= |a| <= 2^L for every nonzero coefficient.
unsigned coefficient_bits(const UnivariatePoly& p);

struct PrecisionBudget {
  unsigned L = 0;
  unsigned d = 0;
  std::size_t n = 0;
  mpq_class eps;
  mpq_class M;
  /// Lipschitz bound of f - R near the root tuples, per unit of eps.
  mpq_class B2;
  /// Lower bound on |R(a)| over root tuples with R(a) != 0; 0 if R = 0.
  mpq_class B3;
  /// Lipschitz bound of R near the root tuples, per unit of eps.
  mpq_class B4;
  /// Per-variable radius (root bound + 1/2) used for B2 and B4.
  std::vector<mpq_class> radius;
};

/// Largest product of generator degrees compute_threshold accepts.
inline constexpr std::size_t kThresholdDimensionCap = 512;

/// Explicit M and eps with eps (B2 + B4) <= M and M = B3 / 3. f over Q on n
/// variables; I must hold a squarefree generator for each variable. The
/// remainder R = f mod I is computed exactly and B3 is read off the
/// characteristic polynomial of multiplication by R on Q[x]/I. eps is a
/// power of two, at most 1/2 and at most `eps_cap` when given.
PrecisionBudget compute_threshold(const Circuit& f, const UnivariateIdeal& ideal,
                                  const std::optional<mpq_class>& eps_cap = std::nullopt);

struct Certificate {
  std::vector<Gaussian> point;
};

enum class Verdict { Accept, RejectResidual, RejectValue };

/// Accepts iff every coordinate passes |p_i(z_i)| < 2^{-L} eps^{deg p_i} and
/// |f(z)| >= 2M, both checked exactly through squared magnitudes. Acceptance
/// proves f is not in I. Throws std::invalid_argument on a wrong length.
Verdict verify_certificate(const Circuit& f, const UnivariateIdeal& ideal, const Certificate& cert,
                           const PrecisionBudget& budget);

enum class Decision { Member, NonMember, Undecided };
std::string to_string(Decision d);

struct SearchResult {
  Decision decision = Decision::Member;
  std::optional<Certificate> certificate;
  std::size_t tuples_checked = 0;
  /// Largest |f|^2 over tuples at or below M^2.
  mpq_class max_small_norm2 = 0;
};

/// Largest product of generator degrees search_nonmembership accepts.
inline constexpr std::size_t kSearchTupleCap = 100'000;

/// Walks all approximate root tuples and returns the first one with
/// |f| >= 2M; Member if every tuple gives |f| <= M; Undecided if some tuple
/// falls strictly between and none clears 2M.
SearchResult search_nonmembership(const Circuit& f, const UnivariateIdeal& ideal, const PrecisionBudget& budget);

}  // namespace unideal
