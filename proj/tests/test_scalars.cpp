#include <gtest/gtest.h>

#include "hochcat/scalars.hpp"

using namespace hochcat;

TEST(Field, PrimalityGate) {
  EXPECT_NO_THROW(Field::prime(2));
  EXPECT_NO_THROW(Field::prime(2147483647));  // 2^31 - 1
  EXPECT_THROW(Field::prime(1), NotPrime);
  EXPECT_THROW(Field::prime(91), NotPrime);  // 7 * 13
  EXPECT_THROW(Field::prime(4294967291ull), NotPrime);  // prime but >= 2^31
}

TEST(Rat, Arithmetic) {
  EXPECT_EQ(Rat(1, 2) + Rat(1, 3), Rat(5, 6));
  EXPECT_EQ(Rat(1, 2) - Rat(1, 2), Rat(0));
  EXPECT_EQ(Rat(2, 3) * Rat(9, 4), Rat(3, 2));
  EXPECT_EQ(Rat(1) / Rat(-4, 7), Rat(-7, 4));
  EXPECT_THROW(Rat(1) / Rat(0), DivisionByZero);
}

TEST(Rat, CanonicalForm) {
  Rat a(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_GT(a.den(), 0);
  Rat b = Rat(1, 3) + Rat(2, 3);
  EXPECT_EQ(b.to_string(), "1");
  // gcd(num, den) = 1 after arithmetic
  Rat c = Rat(10, 4) * Rat(2, 5);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.num().get_mpz_t(), c.den().get_mpz_t());
  EXPECT_EQ(g, 1);
}

TEST(Rat, ParseAndPrintRoundTrip) {
  for (const char* s : {"3", "-7/4", "0", "12345678901234567890/7"}) {
    EXPECT_EQ(Rat::parse(s).to_string(), s);
  }
  // unicode minus accepted on input
  EXPECT_EQ(Rat::parse("\xE2\x88\x92" "7/4"), Rat(-7, 4));
  EXPECT_THROW(Rat::parse("1/0"), BadScalar);
  EXPECT_THROW(Rat::parse("a"), BadScalar);
  EXPECT_THROW(Rat::parse(""), BadScalar);
  EXPECT_THROW(Rat::parse("1.5"), BadScalar);
}

TEST(Fp, Arithmetic) {
  Fp three(3, 5), four(4, 5);
  EXPECT_EQ((three * four).residue(), 2u);  // 12 mod 5
  EXPECT_EQ((three + four).residue(), 2u);
  EXPECT_EQ((three - four).residue(), 4u);
  EXPECT_EQ((three / four).residue(), 2u);  // 3 * 4 = 12 = 2, so 2/4=3... check: 4*2=8=3 yes
  EXPECT_THROW(Fp(1, 5) / Fp(0, 5), DivisionByZero);
  EXPECT_THROW(Fp(1, 5) + Fp(1, 7), MixedFields);
}

TEST(Fp, InverseIsExact) {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 2147483647ull}) {
    for (std::uint64_t v = 1; v < std::min<std::uint64_t>(p, 20); ++v) {
      Fp x(v, p);
      EXPECT_EQ((x * x.inverse()).residue(), 1u) << "p=" << p << " v=" << v;
    }
  }
}

TEST(Fp, ParseReducesEagerly) {
  EXPECT_EQ(Fp::parse_in(5, "12").residue(), 2u);
  EXPECT_EQ(Fp::parse_in(5, "-1").residue(), 4u);
  EXPECT_EQ(Fp::parse_in(5, "3").to_string(), "3");
  EXPECT_EQ(Fp::parse_in(5, "1/2").residue(), 3u);  // 2*3 = 6 = 1
  EXPECT_THROW(Fp::parse_in(5, "1/5"), BadScalar);
}
