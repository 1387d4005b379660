#include "unideal/linear_form.hpp"

#include <sstream>
#include <stdexcept>

namespace unideal {

LinearForm::LinearForm(Field f, std::size_t n) : field_(f), coeffs_(n, f.zero()), constant_(f.zero()) {}

LinearForm::LinearForm(std::vector<Scalar> coeffs)
    : field_(coeffs.empty() ? Field{} : coeffs.front().field()), coeffs_(std::move(coeffs)), constant_(field_.zero()) {}

LinearForm::LinearForm(Field f, std::vector<Scalar> coeffs, Scalar constant)
    : field_(f), coeffs_(std::move(coeffs)), constant_(f.embed(constant)) {
  for (auto& c : coeffs_) c = field_.embed(c);
}

LinearForm LinearForm::variable(Field f, std::size_t n, std::size_t var) {
  LinearForm l(f, n);
  l.coeffs_.at(var) = f.one();
  return l;
}

bool LinearForm::is_linear_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> LinearForm::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) s.push_back(i);
  }
  return s;
}

Scalar LinearForm::eval(const std::vector<Scalar>& point) const {
  if (point.size() != coeffs_.size()) throw std::invalid_argument("linear form evaluated at wrong arity");
  Scalar acc = constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) acc += coeffs_[i] * point[i];
  }
  return acc;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("linear form length mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  constant_ += o.constant_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("linear form length mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  constant_ -= o.constant_;
  return *this;
}

LinearForm& LinearForm::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  constant_ *= c;
  return *this;
}

LinearForm LinearForm::embedded(const Field& f) const { return LinearForm(f, coeffs_, constant_); }

std::string LinearForm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? " " : "") << coeffs_[i];
  if (!constant_.is_zero()) os << " + " << constant_;
  return os.str();
}

}  // namespace unideal
