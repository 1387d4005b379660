#include "unideal/diagonal_circuit.hpp"

#include <stdexcept>

namespace unideal {

void DiagonalCircuit::add(const Scalar& coeff, const LinearForm& form) {
  if (form.nvars() != n_) throw std::invalid_argument("diagonal summand has wrong arity");
  if (!form.is_homogeneous()) throw std::invalid_argument("diagonal summand form must be homogeneous");
  summands_.push_back({field_.embed(coeff), form.embedded(field_)});
}

void DiagonalCircuit::append(const DiagonalCircuit& other) {
  if (other.degree_ != degree_ || other.n_ != n_) throw std::invalid_argument("diagonal circuits differ in shape");
  for (const auto& s : other.summands_) add(s.coeff, s.form);
}

Scalar DiagonalCircuit::eval(const std::vector<Scalar>& point) const {
  Scalar acc = field_.zero();
  for (const auto& s : summands_) acc += s.coeff * s.form.eval(point).pow(degree_);
  return acc;
}

SparsePoly DiagonalCircuit::expand() const {
  SparsePoly acc(n_, field_);
  for (const auto& s : summands_) {
    SparsePoly lambda(n_, field_);
    for (std::size_t i = 0; i < n_; ++i) lambda += SparsePoly::variable(n_, field_, i) * s.form.coeff(i);
    SparsePoly power = SparsePoly::constant(n_, field_, s.coeff);
    for (unsigned e = 0; e < degree_; ++e) power = power * lambda;
    acc += power;
  }
  return acc;
}

DiagonalCircuit DiagonalCircuit::embedded(const Field& f) const {
  DiagonalCircuit out(f, n_, degree_);
  for (const auto& s : summands_) out.add(f.embed(s.coeff), s.form.embedded(f));
  return out;
}

}  // namespace unideal
