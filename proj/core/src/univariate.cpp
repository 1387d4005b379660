#include "unideal/univariate.hpp"

#include <sstream>
#include <stdexcept>

namespace unideal {

UnivariatePoly::UnivariatePoly(Field f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = field_.embed(c);
  trim();
}

UnivariatePoly UnivariatePoly::from_ints(Field f, std::initializer_list<long long> coeffs) {
  return from_ints(f, std::vector<long long>(coeffs));
}

UnivariatePoly UnivariatePoly::from_ints(Field f, const std::vector<long long>& coeffs) {
  std::vector<Scalar> cs;
  cs.reserve(coeffs.size());
  for (auto c : coeffs) cs.push_back(f.from_int(c));
  return UnivariatePoly(f, std::move(cs));
}

UnivariatePoly UnivariatePoly::constant(Field f, const Scalar& c) { return UnivariatePoly(f, {c}); }

UnivariatePoly UnivariatePoly::monomial(Field f, const Scalar& c, std::size_t e) {
  std::vector<Scalar> cs(e + 1, f.zero());
  cs[e] = c;
  return UnivariatePoly(f, std::move(cs));
}

UnivariatePoly UnivariatePoly::linear_root(Field f, const Scalar& a) { return UnivariatePoly(f, {-a, f.one()}); }

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UnivariatePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

const Scalar& UnivariatePoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Scalar UnivariatePoly::eval(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return UnivariatePoly(field_);
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) cs.push_back(coeffs_[i] * field_.from_int(static_cast<long long>(i)));
  return UnivariatePoly(field_, std::move(cs));
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

UnivariatePoly UnivariatePoly::scaled(const Scalar& c) const {
  std::vector<Scalar> cs = coeffs_;
  for (auto& x : cs) x *= c;
  return UnivariatePoly(field_, std::move(cs));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const int dd = divisor.degree();
  std::vector<Scalar> rem = coeffs_;
  if (degree() < dd) return {UnivariatePoly(field_), *this};
  std::vector<Scalar> quot(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
  const Scalar inv_lc = divisor.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    const Scalar c = rem[static_cast<std::size_t>(i)] * inv_lc;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UnivariatePoly(field_, std::move(quot)), UnivariatePoly(field_, std::move(rem))};
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_.zero());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return UnivariatePoly(a.field_);
  std::vector<Scalar> cs(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePoly(a.field_, std::move(cs));
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || !coeffs_[i].is_one()) os << coeffs_[i];
    if (i > 0) {
      if (!coeffs_[i].is_one()) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
  while (!b.is_zero()) {
    UnivariatePoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const UnivariatePoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

Scalar resultant(const UnivariatePoly& a0, const UnivariatePoly& b0) {
  const Field f = a0.field();
  if (a0.is_zero() || b0.is_zero()) return f.zero();
  UnivariatePoly a = a0;
  UnivariatePoly b = b0;
  Scalar result = f.one();
  while (b.degree() > 0) {
    UnivariatePoly r = a % b;
    if (r.is_zero()) return f.zero();
    const int da = a.degree();
    const int db = b.degree();
    const int dr = r.degree();
    result *= b.leading().pow(static_cast<std::uint64_t>(da - dr));
    if ((da * db) % 2 == 1) result = -result;
    a = std::move(b);
    b = std::move(r);
  }
  return result * b.leading().pow(static_cast<std::uint64_t>(a.degree()));
}

Scalar discriminant(const UnivariatePoly& p) {
  const int d = p.degree();
  if (d < 1) throw std::domain_error("discriminant needs degree >= 1");
  Scalar r = resultant(p, p.derivative()) / p.leading();
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace unideal
