#include "unideal/sparse_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace unideal {

SparsePoly SparsePoly::constant(std::size_t n, Field f, const Scalar& c) {
  SparsePoly p(n, f);
  p.add_term(Exponents(n, 0), f.embed(c));
  return p;
}

SparsePoly SparsePoly::variable(std::size_t n, Field f, std::size_t var) {
  if (var >= n) throw std::out_of_range("variable index out of range");
  SparsePoly p(n, f);
  Exponents e(n, 0);
  e[var] = 1;
  p.add_term(e, f.one());
  return p;
}

void SparsePoly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != n_) throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar SparsePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_.zero() : it->second;
}

int SparsePoly::degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto x : e) d += static_cast<int>(x);
    best = std::max(best, d);
  }
  return best;
}

std::uint32_t SparsePoly::degree_in(std::size_t var) const {
  std::uint32_t best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[var]);
  return best;
}

Scalar SparsePoly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != n_) throw std::invalid_argument("evaluation point has wrong arity");
  Scalar acc = field_.zero();
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] != 0) t *= point[i].pow(e[i]);
    }
    acc += t;
  }
  return acc;
}

SparsePoly SparsePoly::homogeneous_part(unsigned k) const {
  SparsePoly out(n_, field_);
  for (const auto& [e, c] : terms_) {
    unsigned d = 0;
    for (auto x : e) d += x;
    if (d == k) out.terms_.emplace(e, c);
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("variable count mismatch");
  SparsePoly out(a.n_, a.field_);
  Exponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    bool constant = true;
    for (auto x : e) constant = constant && x == 0;
    if (constant || !c.is_one()) os << c;
    bool need_star = !constant && !c.is_one();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Scalar exponent_factorial(const Exponents& e, const Field& f) {
  Scalar r = f.one();
  for (auto x : e) {
    for (std::uint32_t i = 2; i <= x; ++i) r *= f.from_int(i);
  }
  return r;
}

}  // namespace unideal
