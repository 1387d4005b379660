#include "unideal/scalar.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

#include "unideal/errors.hpp"

namespace unideal {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit to stay exact for 64-bit moduli.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    const __int128 tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw std::domain_error("element is not invertible modulo p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "64-bit unsigned long required");
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t from_scalar(const Scalar& s, std::uint64_t p) {
  if (!s.is_rational()) {
    if (s.field().modulus() != p) throw FieldMismatch("residue modulo a different prime");
    return s.residue_value();
  }
  const mpq_class& q = s.rational();
  const std::uint64_t den = reduce(q.get_den(), p);
  if (den == 0) throw FieldMismatch("denominator vanishes modulo " + std::to_string(p));
  return mul(reduce(q.get_num(), p), inverse(den, p), p);
}

}  // namespace modp

namespace {

bool miller_rabin_round(std::uint64_t n, std::uint64_t d, unsigned s, std::uint64_t base) {
  std::uint64_t x = modp::pow(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = modp::mul(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

bool is_probable_prime(std::uint64_t n) {
  constexpr std::array<std::uint64_t, 12> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto q : kSmall) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  constexpr int kRounds = 40;
  std::uint64_t state = n;
  for (int round = 0; round < kRounds; ++round) {
    std::uint64_t base;
    if (round < static_cast<int>(kSmall.size())) {
      base = kSmall[round];
    } else {
      base = 2 + splitmix64(state) % (n - 3);
    }
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

std::uint64_t random_prime(unsigned bits, Rng& rng) {
  if (bits < 2 || bits > 64) throw std::invalid_argument("random_prime: bits must lie in [2, 64]");
  const std::uint64_t lo = bits == 64 ? (1ULL << 63) : (1ULL << (bits - 1));
  const std::uint64_t hi = bits == 64 ? UINT64_MAX : ((1ULL << bits) - 1);
  for (;;) {
    std::uint64_t candidate = uniform_u64(rng, lo, hi);
    if (bits > 2) candidate |= 1;
    if (is_probable_prime(candidate)) return candidate;
  }
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (!is_probable_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  const auto p = static_cast<__int128>(modulus_);
  __int128 r = static_cast<__int128>(v) % p;
  if (r < 0) r += p;
  return Scalar::residue(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  const std::uint64_t den = modp::reduce(q.get_den(), modulus_);
  if (den == 0) throw FieldMismatch("denominator " + q.get_den().get_str() + " vanishes in " + name());
  const std::uint64_t num = modp::reduce(q.get_num(), modulus_);
  return Scalar::residue(modp::mul(num, modp::inverse(den, modulus_), modulus_), modulus_);
}

Scalar Field::parse(std::string_view text) const {
  const std::string s(text);
  mpq_class q;
  try {
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("malformed scalar: '" + s + "'");
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed scalar: '" + s + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in scalar: '" + s + "'");
  q.canonicalize();
  return from_rational(q);
}

Scalar Field::embed(const Scalar& s) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (is_prime_field() && s.field() == *this) return s;
  throw FieldMismatch("cannot embed " + s.field().name() + " element into " + name());
}

std::string Field::name() const { return is_rational() ? std::string("Q") : "GF(" + std::to_string(modulus_) + ")"; }

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<Residue>(value_).modulus);
}

bool Scalar::is_zero() const noexcept {
  if (is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const noexcept {
  if (is_rational()) return std::get<mpq_class>(value_) == 1;
  const auto& r = std::get<Residue>(value_);
  return r.value == 1 % r.modulus;
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw FieldMismatch("scalar is a residue, not a rational");
  return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue_value() const {
  if (is_rational()) throw FieldMismatch("scalar is a rational, not a residue");
  return std::get<Residue>(value_).value;
}

namespace {

[[noreturn]] void mismatch(const char* op) { throw FieldMismatch(std::string("field mismatch in scalar ") + op); }

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mismatch("+");
  if (is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(o.value_);
    if (a.modulus != b.modulus) mismatch("+");
    a.value = modp::add(a.value, b.value, a.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mismatch("-");
  if (is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(o.value_);
    if (a.modulus != b.modulus) mismatch("-");
    a.value = modp::sub(a.value, b.value, a.modulus);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (value_.index() != o.value_.index()) mismatch("*");
  if (is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& a = std::get<Residue>(value_);
    const auto& b = std::get<Residue>(o.value_);
    if (a.modulus != b.modulus) mismatch("*");
    a.value = modp::mul(a.value, b.value, a.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  const auto& r = std::get<Residue>(value_);
  return residue(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_rational()) return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
  const auto& r = std::get<Residue>(value_);
  return residue(modp::inverse(r.value, r.modulus), r.modulus);
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (!is_rational()) {
    const auto& r = std::get<Residue>(value_);
    return residue(modp::pow(r.value, e, r.modulus), r.modulus);
  }
  const auto& q = std::get<mpq_class>(value_);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  return Scalar(mpq_class(num, den));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  const auto& x = std::get<Scalar::Residue>(a.value_);
  const auto& y = std::get<Scalar::Residue>(b.value_);
  return x.modulus == y.modulus && x.value == y.value;
}

std::string Scalar::to_string() const {
  if (is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace unideal
