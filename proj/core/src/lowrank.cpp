#include "unideal/lowrank.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "unideal/errors.hpp"
#include "unideal/linalg.hpp"

namespace unideal {

void LowRankInput::validate() const {
  if (outer.nvars() != forms.size()) throw std::invalid_argument("outer circuit arity differs from the number of forms");
  for (const auto& l : forms) {
    if (l.nvars() != nvars()) throw std::invalid_argument("linear forms differ in length");
    if (!(l.field() == outer.field())) throw std::invalid_argument("forms and outer circuit use different fields");
  }
}

Circuit compose(const LowRankInput& input) {
  input.validate();
  const Field f = input.outer.field();
  const std::size_t n = input.nvars();
  Circuit c(n, f);
  for (const Node& node : input.outer.nodes()) {
    switch (node.kind) {
      case NodeKind::Input:
        c.linear(input.forms[node.var]);
        break;
      case NodeKind::Const:
        c.constant(node.value);
        break;
      case NodeKind::Add:
        c.add(node.children);
        break;
      case NodeKind::Mul:
        c.mul(node.children);
        break;
      case NodeKind::Linear: {
        LinearForm sum(f, std::vector<Scalar>(n, f.zero()), node.form.constant());
        for (std::size_t i = 0; i < node.form.nvars(); ++i) sum += input.forms[i] * node.form.coeff(i);
        c.linear(sum);
        break;
      }
    }
  }
  c.set_output(input.outer.output());
  return c;
}

Transform build_transform(const std::vector<LinearForm>& forms, std::size_t n, bool with_matrix) {
  Transform tr;
  const Field f = forms.empty() ? Field{} : forms.front().field();
  std::set<std::size_t> support;
  for (const auto& l : forms)
    for (auto v : l.support()) support.insert(v);
  tr.live.assign(support.begin(), support.end());
  const std::size_t r = std::min(forms.size(), tr.live.size());
  tr.fixed.assign(tr.live.begin(), tr.live.begin() + static_cast<std::ptrdiff_t>(r));

  std::vector<LinearForm> residual;
  for (const auto& l : forms) {
    LinearForm fixed_part(f, std::vector<Scalar>(n, f.zero()), l.constant());
    LinearForm rest(f, l.coeffs(), f.zero());
    for (auto v : tr.fixed) {
      fixed_part.coeff(v) = l.coeff(v);
      rest.coeff(v) = f.zero();
    }
    tr.fixed_parts.push_back(std::move(fixed_part));
    residual.push_back(std::move(rest));
  }

  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (residual[i].is_linear_zero()) continue;
    std::vector<LinearForm> trial = tr.residual_forms;
    trial.push_back(residual[i]);
    if (rank(forms_to_matrix(trial, n, f)) == trial.size()) {
      tr.chosen.push_back(i);
      tr.residual_forms.push_back(residual[i]);
    }
  }
  tr.r_prime = tr.residual_forms.size();

  tr.coords = Matrix(forms.size(), tr.r_prime, f);
  if (tr.r_prime > 0) {
    std::vector<LinearForm> stacked = tr.residual_forms;
    stacked.insert(stacked.end(), residual.begin(), residual.end());
    const RowBasis rb = rank_and_row_basis(forms_to_matrix(stacked, n, f));
    Matrix head(tr.r_prime, tr.r_prime, f);
    Matrix tail(forms.size(), tr.r_prime, f);
    for (std::size_t j = 0; j < tr.r_prime; ++j) {
      for (std::size_t i = 0; i < tr.r_prime; ++i) head(i, j) = rb.coords(i, j);
      for (std::size_t i = 0; i < forms.size(); ++i) tail(i, j) = rb.coords(tr.r_prime + i, j);
    }
    tr.coords = tail * inverse(head);
  }

  if (with_matrix) {
    std::vector<LinearForm> rows;
    for (auto v : tr.fixed) rows.push_back(LinearForm::variable(f, n, v));
    rows.insert(rows.end(), tr.residual_forms.begin(), tr.residual_forms.end());
    tr.t = rows.empty() ? Matrix::identity(n, f) : complete_invertible(rows, n);
  }
  return tr;
}

// ---------------------------------------------------------------- packed polynomial ring

namespace {

struct FpOps {
  using Elem = std::uint64_t;
  std::uint64_t p;
  Elem zero() const { return 0; }
  bool is_zero(const Elem& a) const { return a == 0; }
  void add_to(Elem& a, const Elem& b) const { a = modp::add(a, b, p); }
  Elem mul(const Elem& a, const Elem& b) const { return modp::mul(a, b, p); }
  Elem from(const Scalar& s) const { return modp::from_scalar(s, p); }
  Scalar to_scalar(const Elem& a) const { return Scalar::residue(a, p); }
};

struct QOps {
  using Elem = mpq_class;
  Elem zero() const { return 0; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  void add_to(Elem& a, const Elem& b) const { a += b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem from(const Scalar& s) const { return s.rational(); }
  Scalar to_scalar(const Elem& a) const { return Scalar(a); }
};

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

/// Polynomials in `reduced` variables (kept modulo their generators) and
/// `free` variables, with exponent vectors packed into one 64-bit key.
template <class Ops>
class PackedRing {
 public:
  using Coef = typename Ops::Elem;
  using Elem = std::unordered_map<std::uint64_t, Coef>;

  PackedRing(const Ops& ops, const std::vector<const UnivariatePoly*>& generators, std::size_t free_vars,
             std::uint64_t free_degree, std::uint64_t cap)
      : ops_(ops), nred_(generators.size()), cap_(cap) {
    unsigned offset = 0;
    auto place = [&](std::uint64_t max_exp) {
      const unsigned width = std::max(1, static_cast<int>(std::bit_width(max_exp)));
      shift_.push_back(offset);
      mask_.push_back(width >= 64 ? ~0ULL : ((1ULL << width) - 1));
      offset += width;
    };
    for (const auto* g : generators) {
      const auto d = static_cast<std::uint64_t>(g->degree());
      deg_.push_back(d);
      place(std::max<std::uint64_t>(1, 2 * d - 2));
      const auto table = power_table(*g, std::max<std::size_t>(1, 2 * d - 2));
      std::vector<std::vector<Coef>> t;
      for (const auto& u : table) {
        std::vector<Coef> row;
        for (const auto& c : u.coeffs()) row.push_back(ops_.from(c));
        t.push_back(std::move(row));
      }
      tables_.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < free_vars; ++i) place(free_degree);
    if (offset > 64) throw CapExceeded(cap_, saturating_pow(2, offset > 63 ? 63 : offset));
  }

  std::size_t nvars() const { return shift_.size(); }
  std::uint64_t exponent(std::uint64_t key, std::size_t v) const { return (key >> shift_[v]) & mask_[v]; }
  std::uint64_t unit(std::size_t v) const { return 1ULL << shift_[v]; }

  // Ring interface for evaluate().
  std::vector<Elem> images;
  Elem input(std::size_t var) const { return images.at(var); }
  Elem constant(const Scalar& c) const {
    Elem e;
    Coef x = ops_.from(c);
    if (!ops_.is_zero(x)) e.emplace(0, std::move(x));
    return e;
  }
  Elem linear(const LinearForm& l) const {
    Elem acc = constant(l.constant());
    for (std::size_t i = 0; i < l.nvars(); ++i) {
      if (l.coeff(i).is_zero()) continue;
      const Coef c = ops_.from(l.coeff(i));
      for (const auto& [k, v] : images.at(i)) accumulate(acc, k, ops_.mul(c, v));
    }
    prune(acc);
    return acc;
  }
  void add_to(Elem& acc, const Elem& x) const {
    for (const auto& [k, v] : x) accumulate(acc, k, v);
    prune(acc);
  }
  Elem mul(const Elem& a, const Elem& b) const {
    const Elem& small = a.size() <= b.size() ? a : b;
    const Elem& large = a.size() <= b.size() ? b : a;
    Elem out;
    out.reserve(large.size() * 2);
    for (const auto& [ks, vs] : small)
      for (const auto& [kl, vl] : large) insert_reduced(out, ks + kl, ops_.mul(vs, vl));
    prune(out);
    return out;
  }

  /// Builds sum_j c_j * x^{keys_j}, reducing the fixed variables.
  Elem from_terms(const std::vector<std::pair<std::uint64_t, Coef>>& terms) const {
    Elem out;
    for (const auto& [k, c] : terms) insert_reduced(out, k, c);
    prune(out);
    return out;
  }

  std::size_t peak() const { return peak_; }

 private:
  void accumulate(Elem& acc, std::uint64_t key, const Coef& c) const {
    auto [it, inserted] = acc.try_emplace(key, c);
    if (!inserted) ops_.add_to(it->second, c);
  }

  void insert_reduced(Elem& out, std::uint64_t key, const Coef& c) const {
    for (std::size_t v = 0; v < nred_; ++v) {
      const std::uint64_t e = exponent(key, v);
      if (e < deg_[v]) continue;
      const std::uint64_t base = key - (e << shift_[v]);
      const auto& row = tables_[v][e];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (ops_.is_zero(row[j])) continue;
        insert_reduced(out, base + (static_cast<std::uint64_t>(j) << shift_[v]), ops_.mul(c, row[j]));
      }
      return;
    }
    accumulate(out, key, c);
  }

  void prune(Elem& e) const {
    for (auto it = e.begin(); it != e.end();) {
      if (ops_.is_zero(it->second))
        it = e.erase(it);
      else
        ++it;
    }
    if (e.size() > cap_) throw CapExceeded(cap_, e.size());
    peak_ = std::max(peak_, e.size());
  }

  const Ops& ops_;
  std::size_t nred_;
  std::uint64_t cap_;
  std::vector<unsigned> shift_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint64_t> deg_;
  std::vector<std::vector<std::vector<Coef>>> tables_;
  mutable std::size_t peak_ = 0;
};

}  // namespace

// ---------------------------------------------------------------- recursion

class RemEvaluator::Impl {
 public:
  virtual ~Impl() = default;
  virtual Scalar eval(const std::vector<Scalar>& alpha, RemStats* stats) const = 0;
  Field field;
};

namespace {

template <class Ops>
class RemEngine final : public RemEvaluator::Impl {
 public:
  RemEngine(Ops ops, const LowRankInput& input, const UnivariateIdeal& ideal)
      : ops_(ops), ideal_(ideal), d_(input.degree_bound), n_(input.nvars()) {
    field = input.outer.field();
    first_ = expand_level(input.outer, input.forms);
  }

  Scalar eval(const std::vector<Scalar>& alpha_in, RemStats* stats) const override {
    if (alpha_in.size() != n_) throw std::invalid_argument("point has wrong arity");
    std::vector<Coef> alpha;
    for (const auto& a : alpha_in) alpha.push_back(ops_.from(field.embed(a)));
    if (stats) *stats = RemStats{};
    Level level = first_;
    for (;;) {
      if (stats) {
        ++stats->depth;
        stats->max_terms = std::max(stats->max_terms, level.peak);
        stats->fixed_per_level.push_back(level.fixed.size());
      }
      // Substitute alpha for the reduced variables.
      std::unordered_map<std::uint64_t, Coef> rest;
      const std::size_t nfixed = level.fixed.size();
      std::vector<std::vector<Coef>> powers(nfixed);
      for (std::size_t v = 0; v < nfixed; ++v) {
        const auto d = static_cast<std::size_t>(ideal_.find(level.fixed[v])->degree());
        Coef p = ops_.from(field.one());
        for (std::size_t e = 0; e < d; ++e) {
          powers[v].push_back(p);
          p = ops_.mul(p, alpha[level.fixed[v]]);
        }
      }
      for (const auto& [key, c] : level.value) {
        Coef term = c;
        std::uint64_t free_key = key;
        for (std::size_t v = 0; v < nfixed; ++v) {
          const std::uint64_t e = level.ring->exponent(key, v);
          term = ops_.mul(term, powers[v][e]);
          free_key -= e << shiftof(*level.ring, v);
        }
        auto [it, inserted] = rest.try_emplace(free_key, term);
        if (!inserted) ops_.add_to(it->second, term);
      }
      if (level.residual_forms.empty()) {
        auto it = rest.find(0);
        return it == rest.end() ? field.zero() : ops_.to_scalar(it->second);
      }
      // Remaining polynomial in the residual forms.
      const std::size_t rp = level.residual_forms.size();
      SparsePoly h(rp, field);
      for (const auto& [key, c] : rest) {
        if (ops_.is_zero(c)) continue;
        Exponents e(rp);
        for (std::size_t t = 0; t < rp; ++t) e[t] = static_cast<std::uint32_t>(level.ring->exponent(key, nfixed + t));
        h.add_term(e, ops_.to_scalar(c));
      }
      level = expand_level(from_sparse(h), level.residual_forms);
    }
  }

 private:
  using Coef = typename Ops::Elem;
  using Ring = PackedRing<Ops>;

  struct Level {
    std::vector<std::size_t> fixed;
    std::vector<LinearForm> residual_forms;  // empty at the last level
    std::shared_ptr<Ring> ring;
    typename Ring::Elem value;
    std::size_t peak = 0;
  };

  static unsigned shiftof(const Ring& ring, std::size_t v) { return static_cast<unsigned>(std::countr_zero(ring.unit(v))); }

  Level expand_level(const Circuit& outer, const std::vector<LinearForm>& forms) const {
    Level level;
    const Transform tr = build_transform(forms, n_, false);
    for (auto v : tr.live)
      if (ideal_.find(v) == nullptr)
        throw std::invalid_argument("x" + std::to_string(v + 1) + " appears in a form but has no generator");

    const bool last = tr.fixed.size() + tr.r_prime == tr.live.size();
    level.fixed = last ? tr.live : tr.fixed;
    if (!last) level.residual_forms = tr.residual_forms;
    const std::size_t nfree = last ? 0 : tr.r_prime;

    std::vector<const UnivariatePoly*> gens;
    for (auto v : level.fixed) gens.push_back(ideal_.find(v));
    // Linear images alone need d >= 1 to fit.
    const std::uint64_t cap = saturating_pow(std::max<std::uint64_t>(d_, 1) + 1, level.fixed.size() + nfree);
    level.ring = std::make_shared<Ring>(ops_, gens, nfree, std::max<std::uint64_t>(1, outer.degree_bound()), cap);
    Ring& ring = *level.ring;

    // Images of the outer inputs.
    for (std::size_t i = 0; i < forms.size(); ++i) {
      std::vector<std::pair<std::uint64_t, Coef>> terms;
      const LinearForm& head = last ? forms[i] : tr.fixed_parts[i];
      if (!head.constant().is_zero()) terms.emplace_back(0, ops_.from(head.constant()));
      for (std::size_t v = 0; v < level.fixed.size(); ++v) {
        const Scalar& c = head.coeff(level.fixed[v]);
        if (!c.is_zero()) terms.emplace_back(ring.unit(v), ops_.from(c));
      }
      for (std::size_t t = 0; t < nfree; ++t) {
        const Scalar& c = tr.coords(i, t);
        if (!c.is_zero()) terms.emplace_back(ring.unit(level.fixed.size() + t), ops_.from(c));
      }
      ring.images.push_back(ring.from_terms(terms));
    }
    level.value = evaluate(outer, ring);
    level.peak = ring.peak();
    return level;
  }

  Ops ops_;
  UnivariateIdeal ideal_;
  unsigned d_;
  std::size_t n_;
  Level first_;
};

}  // namespace

RemEvaluator::RemEvaluator(const LowRankInput& input, const UnivariateIdeal& ideal) {
  input.validate();
  const Field f = input.outer.field();
  const UnivariateIdeal embedded = ideal.embedded(f);
  if (f.is_rational())
    impl_ = std::make_unique<RemEngine<QOps>>(QOps{}, input, embedded);
  else
    impl_ = std::make_unique<RemEngine<FpOps>>(FpOps{f.modulus()}, input, embedded);
}

RemEvaluator::~RemEvaluator() = default;
RemEvaluator::RemEvaluator(RemEvaluator&&) noexcept = default;
RemEvaluator& RemEvaluator::operator=(RemEvaluator&&) noexcept = default;

Scalar RemEvaluator::operator()(const std::vector<Scalar>& alpha, RemStats* stats) const {
  return impl_->eval(alpha, stats);
}

const Field& RemEvaluator::field() const { return impl_->field; }

Scalar rem_eval(const LowRankInput& input, const UnivariateIdeal& ideal, const std::vector<Scalar>& alpha,
                RemStats* stats) {
  return RemEvaluator(input, ideal)(alpha, stats);
}

}  // namespace unideal
