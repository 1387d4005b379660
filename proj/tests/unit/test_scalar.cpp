#include <gtest/gtest.h>

#include "test_util.hpp"
#include "unideal/errors.hpp"
#include "unideal/scalar.hpp"

namespace unideal {
namespace {

TEST(Scalar, RationalsStayInLowestTerms) {
  const Field q;
  const Scalar a = q.parse("6/-4");
  EXPECT_EQ(a.rational().get_num(), -3);
  EXPECT_EQ(a.rational().get_den(), 2);
  EXPECT_EQ(q.parse("10/5"), q.from_int(2));
}

TEST(Scalar, ParseRejectsGarbage) {
  const Field q;
  EXPECT_THROW(q.parse("1/0"), ParseError);
  EXPECT_THROW(q.parse("abc"), ParseError);
  EXPECT_THROW(q.parse(""), ParseError);
}

TEST(Scalar, PrimeFieldReducesIntoRange) {
  const Field f = Field::prime(7);
  EXPECT_EQ(f.from_int(-1).residue_value(), 6u);
  EXPECT_EQ(f.parse("1/3").residue_value(), 5u);  // 3 * 5 = 15 = 1
  EXPECT_EQ((f.from_int(3) * f.from_int(5)).residue_value(), 1u);
  EXPECT_TRUE((f.from_int(4) / f.from_int(4)).is_one());
}

TEST(Scalar, MismatchedFieldsAreRejected) {
  const Scalar a = Field::prime(7).from_int(1);
  const Scalar b = Field::prime(11).from_int(1);
  const Scalar c = Field{}.from_int(1);
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_THROW(a * c, FieldMismatch);
  EXPECT_FALSE(a == c);
}

TEST(Scalar, CompositeModulusRejected) {
  EXPECT_THROW(Field::prime(91), std::invalid_argument);
  EXPECT_THROW(Field::prime(1), std::invalid_argument);
  EXPECT_NO_THROW(Field::prime((1ULL << 61) - 1));
}

TEST(Scalar, MillerRabinAgreesWithTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_probable_prime(n), slow(n)) << n;
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_probable_prime(3215031751ULL));
  EXPECT_FALSE(is_probable_prime(3825123056546413051ULL));
  EXPECT_TRUE(is_probable_prime(18446744073709551557ULL));
}

TEST(Scalar, RandomPrimeHasRequestedWidth) {
  Rng rng(3);
  for (unsigned bits : {32u, 48u, 63u, 64u}) {
    const std::uint64_t p = random_prime(bits, rng);
    EXPECT_TRUE(is_probable_prime(p));
    EXPECT_EQ(64 - __builtin_clzll(p), static_cast<int>(bits));
  }
}

TEST(Scalar, DistributivityOnRandomTriples) {
  Rng rng(11);
  for (const Field& f : {Field{}, Field::prime(1000003), Field::prime(18446744073709551557ULL)}) {
    for (int i = 0; i < 1000; ++i) {
      const Scalar a = testing::random_scalar(f, rng, -1000000, 1000000);
      const Scalar b = testing::random_scalar(f, rng, -1000000, 1000000);
      const Scalar c = testing::random_scalar(f, rng, -1000000, 1000000);
      ASSERT_EQ((a + b) * c, a * c + b * c);
      ASSERT_EQ(a - a, f.zero());
      if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Scalar, ReductionCommutesWithArithmetic) {
  Rng rng(5);
  const Field q;
  const Field f = Field::prime(1000000007);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = testing::random_scalar(q, rng);
    const Scalar b = testing::random_scalar(q, rng);
    ASSERT_EQ(f.embed(a * b + a), f.embed(a) * f.embed(b) + f.embed(a));
    if (!b.is_zero()) ASSERT_EQ(f.embed(a / b), f.embed(a) / f.embed(b));
  }
}

TEST(Scalar, PowAndInverseMod) {
  EXPECT_EQ(modp::pow(2, 10, 1000), 24u);
  const std::uint64_t p = 18446744073709551557ULL;
  for (std::uint64_t a : {std::uint64_t{2}, std::uint64_t{3}, p - 1, std::uint64_t{123456789}}) EXPECT_EQ(modp::mul(a, modp::inverse(a, p), p), 1u);
}

}  // namespace
}  // namespace unideal
