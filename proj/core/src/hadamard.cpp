#include "unideal/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "unideal/errors.hpp"

namespace unideal {

unsigned PowerIdealSpec::m() const {
  unsigned total = 0;
  for (auto e : exponents) total += e - 1;
  return total;
}

void PowerIdealSpec::validate() const {
  for (auto e : exponents)
    if (e == 0) throw std::invalid_argument("power ideal exponents must be at least 1");
}

UnivariateIdeal PowerIdealSpec::ideal(const Field& f) const {
  validate();
  return UnivariateIdeal::powers(exponents, f);
}

namespace {

Scalar factorial(const Field& f, unsigned k) {
  Scalar r = f.one();
  for (unsigned i = 2; i <= k; ++i) r *= f.from_int(i);
  return r;
}

void check_degree(const Circuit& c, unsigned bound) {
  if (c.degree_bound() > bound)
    throw std::invalid_argument("degree mismatch: circuit degree bound " + std::to_string(c.degree_bound()) +
                                " exceeds " + std::to_string(bound));
}

}  // namespace

Scalar scaled_hadamard_eval(const Circuit& c, const DiagonalCircuit& d, const std::vector<Scalar>& b,
                            unsigned degree_bound) {
  const Field& f = c.field();
  if (d.field() != f) throw FieldMismatch("circuit and diagonal circuit live in different fields");
  if (d.nvars() != c.nvars() || b.size() != c.nvars()) throw std::invalid_argument("variable count mismatch");
  const unsigned j = d.degree();
  const unsigned bound = degree_bound == 0 ? j : degree_bound;
  check_degree(c, bound);
  if (j > bound) return f.zero();
  const std::vector<Scalar> weights = homogeneous_weights(f, j, bound);
  std::vector<Scalar> point(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) point[i] = f.embed(b[i]);

  Scalar acc = f.zero();
  std::vector<Scalar> scaled(b.size());
  for (const auto& s : d.summands()) {
    if (s.coeff.is_zero()) continue;
    Scalar h = f.zero();
    for (unsigned t = 0; t <= bound; ++t) {
      const Scalar node = f.from_int(t + 1);
      for (std::size_t i = 0; i < b.size(); ++i) scaled[i] = s.form.coeff(i) * point[i] * node;
      h += weights[t] * eval(c, scaled);
    }
    acc += s.coeff * h;
  }
  return acc * factorial(f, j);
}

unsigned colour_count(unsigned k) { return (3 * k + 1) / 2; }

double coverage_probability(unsigned k) {
  const double c = colour_count(k);
  double p = 1.0;
  for (unsigned i = 0; i < k; ++i) p *= (c - i) / c;
  return p;
}

std::size_t trials_for_budget(unsigned k, unsigned bits) {
  if (k <= 1) return 1;
  return static_cast<std::size_t>(std::ceil(bits * std::log(2.0) / coverage_probability(k)));
}

std::size_t coverage_trials(unsigned k) { return trials_for_budget(k, 4 * k); }

DiagonalCircuit build_detection_circuit(const PowerIdealSpec& spec, std::size_t trials, Rng& rng, const Field& f) {
  spec.validate();
  const std::size_t n = spec.nvars();
  const unsigned k = spec.k;
  if (k > spec.m()) throw std::invalid_argument("degree exceeds sum of (e_i - 1)");
  DiagonalCircuit out(f, n, k);
  if (k == 0) {
    out.add(f.one(), LinearForm(f, n));
    return out;
  }
  std::vector<std::size_t> owner;
  for (std::size_t i = 0; i < n; ++i) owner.insert(owner.end(), spec.exponents[i] - 1, i);
  const unsigned colours = colour_count(k);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<LinearForm> forms(colours, LinearForm(f, std::vector<Scalar>(n, f.zero()), f.one()));
    for (const auto i : owner) {
      auto& l = forms[uniform_u64(rng, 0, colours - 1)];
      std::vector<Scalar> coeffs;
      for (std::size_t v = 0; v < n; ++v) coeffs.push_back(l.coeff(v));
      coeffs[i] += f.one();
      l = LinearForm(f, coeffs, f.one());
    }
    out.append(power_decompose_product(forms, k));
  }
  return out;
}

namespace {

struct ModDiagonal {
  std::vector<std::uint64_t> coeffs;
  std::vector<std::vector<std::uint64_t>> forms;
};

ModDiagonal reduce_diagonal(const DiagonalCircuit& d, std::uint64_t p) {
  ModDiagonal out;
  for (const auto& s : d.summands()) {
    const std::uint64_t c = modp::from_scalar(s.coeff, p);
    if (c == 0) continue;
    out.coeffs.push_back(c);
    std::vector<std::uint64_t> l;
    for (std::size_t i = 0; i < d.nvars(); ++i) l.push_back(modp::from_scalar(s.form.coeff(i), p));
    out.forms.push_back(std::move(l));
  }
  return out;
}

// Evaluation of (f o_s D)(b) modulo p, up to the nonzero factor j!.
std::uint64_t hadamard_mod(const ModPEvaluator& ev, const ModDiagonal& d, const std::vector<std::uint64_t>& weights,
                           const std::vector<std::uint64_t>& b) {
  const std::uint64_t p = ev.prime();
  std::uint64_t acc = 0;
  std::vector<std::uint64_t> base(b.size()), scaled(b.size());
  for (std::size_t s = 0; s < d.coeffs.size(); ++s) {
    for (std::size_t i = 0; i < b.size(); ++i) base[i] = modp::mul(d.forms[s][i], b[i], p);
    std::uint64_t h = 0;
    for (std::size_t t = 0; t < weights.size(); ++t) {
      for (std::size_t i = 0; i < b.size(); ++i) scaled[i] = modp::mul(base[i], t + 1, p);
      h = modp::add(h, modp::mul(weights[t], ev(scaled), p), p);
    }
    acc = modp::add(acc, modp::mul(d.coeffs[s], h, p), p);
  }
  return acc;
}

}  // namespace

PowersResult membership_powers(const Circuit& c, const PowerIdealSpec& spec, Rng& rng, const PowersOptions& options) {
  spec.validate();
  if (spec.nvars() != c.nvars()) throw std::invalid_argument("exponent count differs from the variable count");
  check_degree(c, spec.k);
  if (options.prime_bits < 32) throw std::invalid_argument("prime_bits must be at least 32");
  PowersResult result;
  const unsigned bound = spec.k;
  const unsigned top = std::min(spec.k, spec.m());
  const std::size_t n = c.nvars();
  const Field q_field;

  // A nonzero B-bit integer has at most B / (bits - 1) prime divisors with
  // `bits` bits, out of roughly 2^{bits-1} / (bits ln 2) such primes.
  const double bits = options.prime_bits;
  const double bad_prime = std::min(1.0, options.coefficient_bits / (bits - 1.0) * bits * std::log(2.0) /
                                             std::pow(2.0, bits - 1.0));
  double error = 0.0;
  for (unsigned j = 0; j <= top; ++j) {
    PowerIdealSpec sub{spec.exponents, j};
    const std::size_t trials = options.trials != 0 ? options.trials : trials_for_budget(j, options.budget_bits);
    result.trials_per_degree.push_back(trials);
    const DiagonalCircuit d = build_detection_circuit(sub, trials, rng, q_field);
    result.total_fan_in += d.fan_in();
    const double miss = j >= 2 ? std::pow(1.0 - coverage_probability(j), static_cast<double>(trials)) : 0.0;
    double attempt_error = 1.0;

    for (unsigned attempt = 0; attempt < options.primes; ++attempt) {
      std::uint64_t p;
      ModDiagonal dm;
      std::unique_ptr<ModPEvaluator> ev;
      for (;;) {
        p = random_prime(options.prime_bits, rng);
        try {
          ev = std::make_unique<ModPEvaluator>(c, p);
          dm = reduce_diagonal(d, p);
          break;
        } catch (const FieldMismatch&) {
          continue;
        }
      }
      result.primes_used.push_back(p);
      const Field fp = Field::prime(p);
      std::vector<std::uint64_t> weights;
      for (const auto& w : homogeneous_weights(fp, j, bound)) weights.push_back(w.residue_value());
      const std::uint64_t sample = std::min<std::uint64_t>(options.sample_size, p - 1);
      bool nonzero = false;
      for (std::size_t t = 0; t < options.zt_trials && !nonzero; ++t) {
        std::vector<std::uint64_t> b(n);
        for (auto& x : b) x = uniform_u64(rng, 1, sample);
        nonzero = hadamard_mod(*ev, dm, weights, b) != 0;
      }
      if (nonzero) {
        result.not_member = true;
        result.witness_degree = j;
        result.error_bound = 0.0;
        return result;
      }
      attempt_error *= std::min(
          1.0, bad_prime + std::pow(static_cast<double>(j) / static_cast<double>(sample), options.zt_trials));
    }
    // A nonmember has a surviving monomial in some degree j, and a wrong
    // answer needs that degree's test to fail.
    error = std::max(error, miss + attempt_error);
  }
  result.error_bound = std::min(1.0, error);
  return result;
}

bool power_ideal_member_brute(const Circuit& c, const std::vector<unsigned>& exponents, std::size_t monomial_cap) {
  if (exponents.size() != c.nvars()) throw std::invalid_argument("exponent count differs from the variable count");
  const SparsePoly f = expand(c, monomial_cap);
  for (const auto& [e, coeff] : f.terms()) {
    bool divisible = false;
    for (std::size_t i = 0; i < e.size() && !divisible; ++i) divisible = e[i] >= exponents[i];
    if (!divisible) return false;
  }
  return true;
}

}  // namespace unideal
