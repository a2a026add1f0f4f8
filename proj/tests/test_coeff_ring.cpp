#include "msym/coeff_ring.hpp"
#include "msym/error.hpp"

#include <gtest/gtest.h>

#include <random>

using msym::Coeff;
using msym::Ring;

TEST(CoeffRing, IntegerAddition) {
  const Ring z = Ring::integers();
  EXPECT_EQ(z.add(z.embed(2), z.embed(3)), z.embed(5));
}

TEST(CoeffRing, PrimeFieldTwoKillsTwo) {
  const Ring f2 = Ring::prime_field(2);
  EXPECT_TRUE(Ring::is_zero(f2.embed(2)));
  EXPECT_EQ(f2.embed(-1), f2.one());
}

TEST(CoeffRing, RationalsLowestTerms) {
  const Ring q = Ring::rationals();
  const Coeff r = q.mul(q.embed(6), q.inverse(q.embed(4)));
  EXPECT_EQ(r.get_num(), 3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(Ring::format(r), "3/2");
}

TEST(CoeffRing, NonPrimeModulusRejected) {
  EXPECT_THROW(Ring::prime_field(4), std::invalid_argument);
  EXPECT_THROW(Ring::prime_field(1), std::invalid_argument);
  EXPECT_THROW(Ring::parse("Zmod:9"), msym::ParseError);
}

TEST(CoeffRing, ParseRoundTrip) {
  for (const char* s : {"Z", "Q", "Zmod:2", "Zmod:101"}) EXPECT_EQ(Ring::parse(s).to_string(), s);
  EXPECT_THROW(Ring::parse("R"), msym::ParseError);
  EXPECT_THROW(Ring::parse("Zmod:"), msym::ParseError);
  EXPECT_THROW(Ring::parse("Zmod:x"), msym::ParseError);
}

TEST(CoeffRing, ParseCoeff) {
  const Ring q = Ring::rationals();
  EXPECT_EQ(q.parse_coeff("-4/6"), Coeff(-2, 3));
  EXPECT_EQ(Ring::prime_field(5).parse_coeff("7"), Coeff(2));
  EXPECT_EQ(Ring::prime_field(5).parse_coeff("1/2"), Coeff(3));
  EXPECT_THROW(Ring::integers().parse_coeff("abc"), msym::ParseError);
  EXPECT_THROW(q.parse_coeff("1/0"), msym::ParseError);
}

TEST(CoeffRing, NormalizeRejectsOutsideValues) {
  EXPECT_THROW(Ring::integers().normalize(Coeff(1, 2)), std::domain_error);
  EXPECT_THROW(Ring::prime_field(3).normalize(Coeff(1, 3)), std::domain_error);
  EXPECT_EQ(Ring::prime_field(3).normalize(Coeff(-1)), Coeff(2));
}

TEST(CoeffRing, InverseOnlyInFields) {
  EXPECT_THROW(Ring::integers().inverse(Coeff(2)), std::domain_error);
  EXPECT_THROW(Ring::rationals().inverse(Coeff(0)), std::domain_error);
  const Ring f7 = Ring::prime_field(7);
  for (long a = 1; a < 7; ++a) EXPECT_EQ(f7.mul(f7.embed(a), f7.inverse(f7.embed(a))), f7.one());
}

TEST(CoeffRing, EmbedOfModulusIsZero) {
  for (long p : {2L, 3L, 5L, 7L, 101L}) EXPECT_TRUE(Ring::is_zero(Ring::prime_field(p).embed(p)));
}

TEST(CoeffRing, ArbitraryPrecision) {
  const Ring z = Ring::integers();
  const Coeff big = z.pow(z.embed(10), 40);
  EXPECT_EQ(Ring::format(big), "1" + std::string(40, '0'));
}

TEST(CoeffRing, RandomizedAxiomsAndEmbedHomomorphism) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (const Ring& r : {Ring::integers(), Ring::rationals(), Ring::prime_field(2), Ring::prime_field(13)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const long x = dist(rng), y = dist(rng), w = dist(rng);
      const Coeff a = r.embed(x), b = r.embed(y), c = r.embed(w);
      EXPECT_EQ(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
      EXPECT_EQ(r.mul(a, b), r.mul(b, a));
      EXPECT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
      EXPECT_EQ(r.add(a, r.neg(a)), r.zero());
      EXPECT_EQ(r.embed(x * y), r.mul(a, b));
      EXPECT_EQ(r.embed(x + y), r.add(a, b));
      EXPECT_TRUE(r.contains(r.mul(a, b)));
    }
  }
}
