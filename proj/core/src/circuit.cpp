#include "unideal/circuit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "unideal/errors.hpp"

namespace unideal {

// ---------------------------------------------------------------- building

std::size_t Circuit::push(Node node) {
  for (auto ch : node.children)
    if (ch >= nodes_.size()) throw std::invalid_argument("circuit child refers to a later node");
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

std::size_t Circuit::input(std::size_t var) {
  if (var >= n_) throw std::invalid_argument("circuit input index out of range");
  Node node;
  node.kind = NodeKind::Input;
  node.var = var;
  return push(std::move(node));
}

std::size_t Circuit::constant(const Scalar& c) {
  Node node;
  node.kind = NodeKind::Const;
  node.value = field_.embed(c);
  return push(std::move(node));
}

std::size_t Circuit::add(std::vector<std::size_t> children) {
  if (children.empty()) return constant(0);
  Node node;
  node.kind = NodeKind::Add;
  node.children = std::move(children);
  return push(std::move(node));
}

std::size_t Circuit::mul(std::vector<std::size_t> children) {
  if (children.empty()) return constant(1);
  Node node;
  node.kind = NodeKind::Mul;
  node.children = std::move(children);
  return push(std::move(node));
}

std::size_t Circuit::linear(const LinearForm& form) {
  if (form.nvars() != n_) throw std::invalid_argument("linear node has wrong arity");
  Node node;
  node.kind = NodeKind::Linear;
  node.form = form.embedded(field_);
  return push(std::move(node));
}

std::size_t Circuit::sub(std::size_t a, std::size_t b) { return add(a, mul(constant(-1), b)); }

std::size_t Circuit::pow(std::size_t a, std::uint64_t e) {
  if (e == 0) return constant(1);
  std::optional<std::size_t> result;
  std::size_t base = a;
  while (true) {
    if (e & 1) result = result ? mul(*result, base) : base;
    e >>= 1;
    if (e == 0) break;
    base = mul(base, base);
  }
  return *result;
}

void Circuit::set_output(std::size_t id) {
  if (id >= nodes_.size()) throw std::invalid_argument("output node out of range");
  output_ = id;
}

std::size_t Circuit::output() const {
  if (nodes_.empty()) throw std::logic_error("empty circuit has no output");
  return output_ ? *output_ : nodes_.size() - 1;
}

std::uint64_t Circuit::degree_bound() const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> deg(nodes_.size(), 0);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    switch (node.kind) {
      case NodeKind::Input:
        deg[i] = 1;
        break;
      case NodeKind::Const:
        deg[i] = 0;
        break;
      case NodeKind::Linear:
        deg[i] = node.form.is_linear_zero() ? 0 : 1;
        break;
      case NodeKind::Add:
        for (auto ch : node.children) deg[i] = std::max(deg[i], deg[ch]);
        break;
      case NodeKind::Mul:
        for (auto ch : node.children) deg[i] = deg[i] > kMax - deg[ch] ? kMax : deg[i] + deg[ch];
        break;
    }
  }
  return deg[output()];
}

Circuit Circuit::embedded(const Field& f) const {
  Circuit out(n_, f);
  out.nodes_ = nodes_;
  for (auto& node : out.nodes_) {
    if (node.kind == NodeKind::Const) node.value = f.embed(node.value);
    if (node.kind == NodeKind::Linear) node.form = node.form.embedded(f);
  }
  out.output_ = output_;
  return out;
}

// ---------------------------------------------------------------- evaluation

namespace {

struct ScalarRing {
  using Elem = Scalar;
  const Field& field;
  const std::vector<Scalar>& point;

  Elem input(std::size_t var) const { return point[var]; }
  Elem constant(const Scalar& c) const { return c; }
  Elem linear(const LinearForm& l) const { return l.eval(point); }
  void add_to(Elem& acc, const Elem& x) const { acc += x; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

struct SparseRing {
  using Elem = SparsePoly;
  std::size_t n;
  Field field;
  std::size_t cap;

  void check(const SparsePoly& p) const {
    if (p.size() > cap) throw CapExceeded(cap, p.size());
  }
  Elem input(std::size_t var) const { return SparsePoly::variable(n, field, var); }
  Elem constant(const Scalar& c) const { return SparsePoly::constant(n, field, c); }
  Elem linear(const LinearForm& l) const {
    SparsePoly p = SparsePoly::constant(n, field, l.constant());
    for (std::size_t i = 0; i < n; ++i) {
      if (!l.coeff(i).is_zero()) p += SparsePoly::variable(n, field, i) * l.coeff(i);
    }
    check(p);
    return p;
  }
  void add_to(Elem& acc, const Elem& x) const {
    acc += x;
    check(acc);
  }
  Elem mul(const Elem& a, const Elem& b) const {
    SparsePoly p = a * b;
    check(p);
    return p;
  }
};

}  // namespace

Scalar eval(const Circuit& c, const std::vector<Scalar>& point) {
  if (point.size() != c.nvars()) throw std::invalid_argument("evaluation point has wrong arity");
  std::vector<Scalar> embedded;
  embedded.reserve(point.size());
  for (const auto& x : point) embedded.push_back(c.field().embed(x));
  ScalarRing ring{c.field(), embedded};
  return evaluate(c, ring);
}

ModPEvaluator::ModPEvaluator(const Circuit& c, std::uint64_t p) : p_(p), n_(c.nvars()) {
  const std::size_t out = c.output();
  ops_.reserve(out + 1);
  for (std::size_t i = 0; i <= out; ++i) {
    const Node& node = c.nodes()[i];
    Op op{node.kind, node.var, 0, node.children, {}};
    if (node.kind == NodeKind::Const) op.value = modp::from_scalar(node.value, p);
    if (node.kind == NodeKind::Linear) {
      op.value = modp::from_scalar(node.form.constant(), p);
      for (std::size_t j = 0; j < node.form.nvars(); ++j) {
        const std::uint64_t cj = modp::from_scalar(node.form.coeff(j), p);
        if (cj != 0) op.terms.emplace_back(j, cj);
      }
    }
    ops_.push_back(std::move(op));
  }
  scratch_.resize(ops_.size());
}

std::uint64_t ModPEvaluator::operator()(const std::vector<std::uint64_t>& point) const {
  if (point.size() != n_) throw std::invalid_argument("evaluation point has wrong arity");
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    const Op& op = ops_[i];
    std::uint64_t v = 0;
    switch (op.kind) {
      case NodeKind::Input:
        v = point[op.var] % p_;
        break;
      case NodeKind::Const:
        v = op.value;
        break;
      case NodeKind::Linear:
        v = op.value;
        for (const auto& [j, cj] : op.terms) v = modp::add(v, modp::mul(cj, point[j] % p_, p_), p_);
        break;
      case NodeKind::Add:
        for (auto ch : op.children) v = modp::add(v, scratch_[ch], p_);
        break;
      case NodeKind::Mul:
        v = 1 % p_;
        for (auto ch : op.children) v = modp::mul(v, scratch_[ch], p_);
        break;
    }
    scratch_[i] = v;
  }
  return scratch_.back();
}

ModValue eval_mod_random_prime(const Circuit& c, const std::vector<Scalar>& point, unsigned bits, Rng& rng) {
  if (bits < 32) throw std::invalid_argument("eval_mod_random_prime needs at least 32-bit primes");
  for (;;) {
    const std::uint64_t p = random_prime(bits, rng);
    try {
      ModPEvaluator ev(c, p);
      std::vector<std::uint64_t> x;
      x.reserve(point.size());
      for (const auto& s : point) x.push_back(modp::from_scalar(s, p));
      return {ev(x), p};
    } catch (const FieldMismatch&) {
      continue;  // p divides a denominator
    }
  }
}

SparsePoly expand(const Circuit& c, std::size_t monomial_cap) {
  SparseRing ring{c.nvars(), c.field(), monomial_cap};
  return evaluate(c, ring);
}

namespace {

using TermList = std::vector<std::pair<const Exponents*, const Scalar*>>;

std::optional<std::size_t> horner(Circuit& c, const TermList& terms, std::size_t v,
                                  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t>& powers) {
  if (terms.empty()) return std::nullopt;
  if (v == c.nvars()) {
    Scalar sum = *terms.front().second;
    for (std::size_t i = 1; i < terms.size(); ++i) sum += *terms[i].second;
    return c.constant(sum);
  }
  auto power = [&](std::uint64_t e) {
    auto it = powers.find({v, e});
    if (it != powers.end()) return it->second;
    const std::size_t id = e == 1 ? c.input(v) : c.pow(c.input(v), e);
    powers.emplace(std::make_pair(v, e), id);
    return id;
  };
  std::map<std::uint32_t, TermList, std::greater<>> groups;
  for (const auto& t : terms) groups[(*t.first)[v]].push_back(t);
  std::optional<std::size_t> acc;
  std::uint32_t prev = groups.begin()->first;
  for (const auto& [e, group] : groups) {
    auto sub = horner(c, group, v + 1, powers);
    if (acc) {
      acc = c.mul(*acc, power(prev - e));
      acc = sub ? c.add(*acc, *sub) : *acc;
    } else {
      acc = sub;
    }
    prev = e;
  }
  if (prev > 0) acc = c.mul(*acc, power(prev));
  return acc;
}

}  // namespace

Circuit from_sparse(const SparsePoly& p) {
  Circuit c(p.nvars(), p.field());
  TermList terms;
  for (const auto& [e, coeff] : p.terms()) terms.emplace_back(&e, &coeff);
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> powers;
  auto out = horner(c, terms, 0, powers);
  c.set_output(out ? *out : c.constant(0));
  return c;
}

// ---------------------------------------------------------------- homogeneous parts

std::vector<Scalar> homogeneous_weights(const Field& f, unsigned k, unsigned d) {
  if (!f.has_at_least(static_cast<std::uint64_t>(d) + 2))
    throw std::invalid_argument("field too small for " + std::to_string(d + 1) + " nonzero interpolation nodes");
  std::vector<Scalar> weights(d + 1, f.zero());
  if (k > d) return weights;
  std::vector<Scalar> nodes;
  for (unsigned i = 0; i <= d; ++i) nodes.push_back(f.from_int(i + 1));
  // N(t) = prod_i (t - t_i), low-to-high coefficients.
  std::vector<Scalar> big{f.one()};
  for (const auto& t : nodes) {
    std::vector<Scalar> next(big.size() + 1, f.zero());
    for (std::size_t j = 0; j < big.size(); ++j) {
      next[j + 1] += big[j];
      next[j] -= big[j] * t;
    }
    big = std::move(next);
  }
  for (unsigned i = 0; i <= d; ++i) {
    // Synthetic division N(t) / (t - t_i), high to low.
    std::vector<Scalar> q(d + 1, f.zero());
    q[d] = big[d + 1];
    for (std::size_t j = d; j >= 1; --j) q[j - 1] = big[j] + nodes[i] * q[j];
    Scalar denom = f.one();
    for (unsigned j = 0; j <= d; ++j)
      if (j != i) denom *= nodes[i] - nodes[j];
    weights[i] = q[k] / denom;
  }
  return weights;
}

Scalar homogeneous_part_eval(const Circuit& c, unsigned k, unsigned d, const std::vector<Scalar>& point) {
  const Field& f = c.field();
  const std::vector<Scalar> weights = homogeneous_weights(f, k, d);
  Scalar acc = f.zero();
  if (k > d) return acc;
  std::vector<Scalar> scaled(point.size());
  for (unsigned i = 0; i <= d; ++i) {
    const Scalar t = f.from_int(i + 1);
    for (std::size_t j = 0; j < point.size(); ++j) scaled[j] = f.embed(point[j]) * t;
    acc += weights[i] * eval(c, scaled);
  }
  return acc;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DiagonalCircuit power_decompose_product(const std::vector<LinearForm>& forms, unsigned k) {
  const std::size_t m = forms.size();
  if (m == 0) throw std::invalid_argument("power_decompose_product needs at least one form");
  if (k > m) throw std::invalid_argument("degree exceeds the number of factors");
  if (m > 62) throw std::invalid_argument("too many factors");
  const Field f = forms.front().field();
  const std::size_t n = forms.front().nvars();
  DiagonalCircuit out(f, n, k);

  Scalar norm = f.one();
  for (std::size_t i = 1; i < m; ++i) norm *= f.from_int(2);
  for (std::size_t i = 2; i <= m; ++i) norm *= f.from_int(static_cast<long long>(i));
  const Scalar base = f.from_int(static_cast<long long>(binomial(static_cast<unsigned>(m), k))) / norm;

  for (std::uint64_t mask = 0; mask < (1ULL << (m - 1)); ++mask) {
    LinearForm sum = forms[0];
    bool negative = false;
    for (std::size_t i = 1; i < m; ++i) {
      if (mask >> (i - 1) & 1) {
        sum -= forms[i];
        negative = !negative;
      } else {
        sum += forms[i];
      }
    }
    const Scalar mu = sum.constant();
    sum.set_constant(f.zero());
    Scalar coeff = base * mu.pow(m - k);
    if (negative) coeff = -coeff;
    out.add(coeff, sum);
  }
  return out;
}

}  // namespace unideal
