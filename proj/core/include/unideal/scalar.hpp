#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "unideal/random.hpp"

namespace unideal {

class Scalar;

/// Miller-Rabin with 40 rounds. The first twelve bases are the primes up to
/// 37, which already make the test exact for every 64-bit input.
bool is_probable_prime(std::uint64_t n);

/// A random prime with exactly `bits` bits (2 <= bits <= 64).
std::uint64_t random_prime(unsigned bits, Rng& rng);

/// The coefficient field: either Q or GF(p) for a 64-bit prime p.
class Field {
 public:
  Field() = default;  // Q

  static Field rationals() noexcept { return Field{}; }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime_field() const noexcept { return modulus_ != 0; }
  /// 0 for Q.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Decimal integer or "a/b".
  Scalar parse(std::string_view text) const;

  /// Maps a scalar into this field. Q embeds into GF(p) by reduction (the
  /// denominator must be a unit); anything else must already live here.
  Scalar embed(const Scalar& s) const;

  /// True when the field has at least `count` elements.
  bool has_at_least(std::uint64_t count) const noexcept { return modulus_ == 0 || modulus_ >= count; }

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t m) : modulus_(m) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues lie in [0, p). Mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q) : value_(q) { std::get<mpq_class>(value_).canonicalize(); }
  explicit Scalar(mpq_class&& q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

  /// `value` must already be reduced below `modulus`.
  static Scalar residue(std::uint64_t value, std::uint64_t modulus) { return Scalar(Residue{value, modulus}); }

  Field field() const;
  bool is_rational() const noexcept { return value_.index() == 0; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws FieldMismatch when the scalar is a residue.
  const mpq_class& rational() const;
  /// Throws FieldMismatch when the scalar is rational.
  std::uint64_t residue_value() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Scalars from different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };
  explicit Scalar(Residue r) : value_(r) {}

  std::variant<mpq_class, Residue> value_;
};

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  return static_cast<std::uint64_t>(s >= p ? s - p : s);
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// a must be nonzero mod p.
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
/// Reduces an arbitrary-precision integer into [0, p).
std::uint64_t reduce(const mpz_class& z, std::uint64_t p);
/// Image of a rational (or of a residue modulo the same p) in [0, p).
/// Throws FieldMismatch when a denominator vanishes or the moduli differ.
std::uint64_t from_scalar(const Scalar& s, std::uint64_t p);

}  // namespace modp

}  // namespace unideal
