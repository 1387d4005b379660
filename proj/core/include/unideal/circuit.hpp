#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "unideal/diagonal_circuit.hpp"
#include "unideal/linear_form.hpp"
#include "unideal/random.hpp"
#include "unideal/sparse_poly.hpp"

namespace unideal {

enum class NodeKind { Input, Const, Add, Mul, Linear };

struct Node {
  NodeKind kind = NodeKind::Const;
  std::size_t var = 0;                 // Input
  Scalar value;                        // Const
  std::vector<std::size_t> children;   // Add, Mul
  LinearForm form;                     // Linear
};

/// Arithmetic circuit over n inputs. Children always precede their parent, so
/// the node list is a topological order.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::size_t n, Field f) : n_(n), field_(f) {}

  std::size_t input(std::size_t var);
  std::size_t constant(const Scalar& c);
  std::size_t constant(long long c) { return constant(field_.from_int(c)); }
  std::size_t add(std::vector<std::size_t> children);
  std::size_t mul(std::vector<std::size_t> children);
  std::size_t linear(const LinearForm& form);
  std::size_t add(std::size_t a, std::size_t b) { return add(std::vector<std::size_t>{a, b}); }
  std::size_t mul(std::size_t a, std::size_t b) { return mul(std::vector<std::size_t>{a, b}); }
  std::size_t sub(std::size_t a, std::size_t b);
  /// Repeated squaring; pow(a, 0) is the constant 1.
  std::size_t pow(std::size_t a, std::uint64_t e);

  void set_output(std::size_t id);
  /// The last node unless set explicitly.
  std::size_t output() const;

  std::size_t nvars() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Syntactic degree bound of the output (>= true degree).
  std::uint64_t degree_bound() const;
  Circuit embedded(const Field& f) const;

 private:
  std::size_t push(Node node);

  std::size_t n_ = 0;
  Field field_;
  std::vector<Node> nodes_;
  std::optional<std::size_t> output_;
};

/// Evaluates the circuit in an arbitrary commutative ring. `Ring` supplies
///   Elem input(std::size_t var), Elem constant(const Scalar&),
///   Elem linear(const LinearForm&), void add_to(Elem&, const Elem&),
///   Elem mul(const Elem&, const Elem&).
/// Intermediate values are released after their last use.
template <class Ring>
typename Ring::Elem evaluate(const Circuit& c, Ring& ring) {
  using Elem = typename Ring::Elem;
  const auto& nodes = c.nodes();
  const std::size_t out = c.output();
  std::vector<std::size_t> last_use(nodes.size(), 0);
  for (std::size_t i = 0; i <= out; ++i)
    for (auto ch : nodes[i].children) last_use[ch] = i;
  last_use[out] = std::numeric_limits<std::size_t>::max();

  std::vector<std::optional<Elem>> values(out + 1);
  auto take = [&](const std::vector<std::size_t>& children, std::size_t parent) -> Elem {
    const std::size_t child = children.front();
    std::size_t uses = 0;
    for (auto ch : children) uses += ch == child;
    if (last_use[child] == parent && uses == 1) {
      Elem e = std::move(*values[child]);
      values[child].reset();
      return e;
    }
    return *values[child];
  };
  for (std::size_t i = 0; i <= out; ++i) {
    const Node& node = nodes[i];
    if (last_use[i] == 0 && i != out) continue;  // dead node
    switch (node.kind) {
      case NodeKind::Input:
        values[i] = ring.input(node.var);
        break;
      case NodeKind::Const:
        values[i] = ring.constant(node.value);
        break;
      case NodeKind::Linear:
        values[i] = ring.linear(node.form);
        break;
      case NodeKind::Add: {
        Elem acc = take(node.children, i);
        for (std::size_t j = 1; j < node.children.size(); ++j) ring.add_to(acc, *values[node.children[j]]);
        for (auto ch : node.children)
          if (last_use[ch] == i) values[ch].reset();
        values[i] = std::move(acc);
        break;
      }
      case NodeKind::Mul: {
        Elem acc = take(node.children, i);
        for (std::size_t j = 1; j < node.children.size(); ++j) acc = ring.mul(acc, *values[node.children[j]]);
        for (auto ch : node.children)
          if (last_use[ch] == i) values[ch].reset();
        values[i] = std::move(acc);
        break;
      }
    }
  }
  return std::move(*values[out]);
}

/// Exact evaluation; the point must have n entries in (or embeddable into)
/// the circuit's field.
Scalar eval(const Circuit& c, const std::vector<Scalar>& point);

/// Fast evaluation over GF(p) for a fixed circuit and prime. Rational
/// constants are reduced once; throws FieldMismatch if a denominator vanishes.
class ModPEvaluator {
 public:
  ModPEvaluator(const Circuit& c, std::uint64_t p);
  std::uint64_t operator()(const std::vector<std::uint64_t>& point) const;
  std::uint64_t prime() const noexcept { return p_; }

 private:
  struct Op {
    NodeKind kind;
    std::size_t var;
    std::uint64_t value;
    std::vector<std::size_t> children;
    std::vector<std::pair<std::size_t, std::uint64_t>> terms;
  };
  std::uint64_t p_;
  std::size_t n_;
  std::vector<Op> ops_;
  mutable std::vector<std::uint64_t> scratch_;
};

struct ModValue {
  std::uint64_t value;
  std::uint64_t prime;
};

/// Evaluates at a rational point modulo a fresh random prime of `bits` bits
/// (bits >= 32). Primes dividing some denominator are skipped.
ModValue eval_mod_random_prime(const Circuit& c, const std::vector<Scalar>& point, unsigned bits, Rng& rng);

/// Explicit sparse expansion. Throws CapExceeded when any intermediate value
/// has more than `monomial_cap` terms.
SparsePoly expand(const Circuit& c, std::size_t monomial_cap = 1'000'000);

/// Circuit computing a sparse polynomial in Horner form.
Circuit from_sparse(const SparsePoly& p);

/// Weights w_t with f_k(b) = sum_t w_t f(t b) for every f of degree <= d,
/// using the nodes t = 1..d+1. Throws std::invalid_argument if the field has
/// at most d+1 elements.
std::vector<Scalar> homogeneous_weights(const Field& f, unsigned k, unsigned d);

/// Value at `point` of the degree-k homogeneous component of f, given
/// deg(f) <= d.
Scalar homogeneous_part_eval(const Circuit& c, unsigned k, unsigned d, const std::vector<Scalar>& point);

/// The degree-k homogeneous part of prod_j forms_j as a sum of k-th powers,
/// via Fischer's identity. Always has exactly 2^{m-1} summands for m >= 1
/// (zero-coefficient summands are kept).
DiagonalCircuit power_decompose_product(const std::vector<LinearForm>& forms, unsigned k);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace unideal
