#include <gtest/gtest.h>

#include <random>

#include "laxforge/error.hpp"
#include "laxforge/qring.hpp"

using namespace laxforge;

namespace {

LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), num(-5, 5), den(1, 3), len(0, 4);
  LaurentPoly p;
  for (int i = len(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), make_rational(num(rng), den(rng)));
  return p;
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(format_rational(make_rational(-6, 4)), "-3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("abc"), InvalidInput);
}

TEST(LaurentPoly, CanonicalText) {
  EXPECT_EQ(P("3 + -1*s^-2 + 1/2*s^4").to_string(), "-1*s^-2 + 3 + 1/2*s^4");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(P("s + s").to_string(), "2*s^1");
  EXPECT_EQ(P("1*s^2 + -1*s^2").to_string(), "0");
  EXPECT_THROW(P("s^"), InvalidInput);
}

TEST(LaurentPoly, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random_poly(rng);
    EXPECT_EQ(LaurentPoly::parse(p.to_string()), p);
  }
}

TEST(LaurentPoly, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(LaurentPoly, QPowers) {
  EXPECT_EQ(LaurentPoly::q_power(make_rational(1, 2)), P("s"));
  EXPECT_EQ(LaurentPoly::q_power(-1), P("s^-2"));
  EXPECT_EQ(LaurentPoly::q_minus_qinv(), P("s^2 + -1*s^-2"));
  EXPECT_THROW(LaurentPoly::q_power(make_rational(1, 4)), InvalidInput);
}

TEST(LaurentPoly, Evaluation) {
  // q - 1/q at s = 2
  EXPECT_EQ(lp_eval(LaurentPoly::q_minus_qinv(), 2), make_rational(15, 4));
  EXPECT_EQ(lp_eval(P("s^-1 + 1"), make_rational(1, 3)), 4);
  EXPECT_EQ(lp_eval(P("1*s^5 + -3*s"), 1), -2);
  EXPECT_THROW(lp_eval(P("s^-1"), 0), InvalidInput);
}

TEST(ZPoly, DivisionByMonicDivisor) {
  const ZPoly z = ZPoly::z_power(1);
  const ZPoly a = (z - ZPoly(LaurentPoly(1))) * (z + ZPoly(P("s^2")));
  auto qr = a.divmod(z - ZPoly(LaurentPoly(1)));
  ASSERT_TRUE(qr.has_value());
  EXPECT_EQ(qr->first, z + ZPoly(P("s^2")));
  EXPECT_TRUE(qr->second.is_zero());
}

TEST(RatFunc, CancelsNonUnitCommonFactor) {
  // (q - 1/q) z (z - 1) / ((q - z/q)(z - 1)) = (q - 1/q) z / (q - z/q)
  const ZPoly z = ZPoly::z_power(1);
  const ZPoly one(LaurentPoly(1));
  const ZPoly d1 = ZPoly(P("s^2")) - z * ZPoly(P("s^-2"));
  const RatFunc f(ZPoly(LaurentPoly::q_minus_qinv()) * z * (z - one), d1 * (z - one));
  EXPECT_EQ(f.den().degree(), 1);
  EXPECT_EQ(f.num().degree(), 1);
  EXPECT_EQ(f, RatFunc(ZPoly(LaurentPoly::q_minus_qinv()) * z, d1));
  EXPECT_EQ(f.eval(2, 1), make_rational(15, 4) / (4 - make_rational(1, 4)));
}

TEST(RatFunc, CanonicalFormIsUnique) {
  const ZPoly z = ZPoly::z_power(1);
  const RatFunc a(z + ZPoly(LaurentPoly(1)), z - ZPoly(P("s^2")));
  const RatFunc b(ZPoly(P("3*s^-4 + 3")) * (z + ZPoly(LaurentPoly(1))), ZPoly(P("3*s^-4 + 3")) * (z - ZPoly(P("s^2"))));
  EXPECT_EQ(a.num(), b.num());
  EXPECT_EQ(a.den(), b.den());
}

TEST(RatFunc, Arithmetic) {
  const ZPoly z = ZPoly::z_power(1);
  const RatFunc x(z, z + ZPoly(LaurentPoly(1)));
  const RatFunc y(ZPoly(LaurentPoly(1)), z + ZPoly(LaurentPoly(1)));
  EXPECT_EQ(x + y, RatFunc(LaurentPoly(1)));
  EXPECT_EQ(x * x.reciprocal(), RatFunc(LaurentPoly(1)));
  EXPECT_TRUE((x - x).is_zero());
}

TEST(RatFunc, Poles) {
  const ZPoly z = ZPoly::z_power(1);
  const RatFunc f(ZPoly(LaurentPoly(1)), ZPoly(P("s^2")) - z * ZPoly(P("s^-2")));  // 1 / (q - z/q)
  EXPECT_THROW(f.eval(2, 16), PoleError);
  EXPECT_THROW(f.substitute(P("s^4")), PoleError);
  EXPECT_EQ(f.eval(2, 1), 1 / (4 - make_rational(1, 4)));
  EXPECT_THROW(RatFunc(z, ZPoly()), InvalidInput);
}
