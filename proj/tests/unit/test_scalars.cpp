#include <gtest/gtest.h>

#include "qnss/errors.hpp"
#include "qnss/oracle.hpp"
#include "qnss/scalars.hpp"
#include "support.hpp"

namespace qnss {
namespace {

using test::R;

TEST(Rational, CanonicalTextRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(parse_rational("0/7"), Rational(0));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("6/-4"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
}

TEST(GaussQ, Examples) {
  GaussQ i = GaussQ::i();
  EXPECT_EQ((GaussQ(1) + i) * (GaussQ(1) - i), GaussQ(2));
  EXPECT_EQ((GaussQ(2) * i).inverse(), GaussQ(0, R(-1, 2)));
  EXPECT_EQ(GaussQ(R(1, 2), R(1, 3)) + GaussQ(R(1, 2), R(-1, 3)), GaussQ(1));
}

TEST(GaussQ, ZeroHasNoInverse) { EXPECT_THROW(GaussQ(0).inverse(), DivisionByZero); }

TEST(QuatQ, MultiplicationTable) {
  const QuatQ I = QuatQ::I(), J = QuatQ::J(), K = QuatQ::K();
  EXPECT_EQ(I * J, K);
  EXPECT_EQ(J * K, I);
  EXPECT_EQ(K * I, J);
  EXPECT_EQ(J * I, -K);
  EXPECT_EQ(I * I, QuatQ(-1));
  EXPECT_EQ(I * J * K, QuatQ(-1));
  EXPECT_EQ((QuatQ(1) + I) * (QuatQ(1) + J), QuatQ(1, 1, 1, 1));
  QuatQ a(2, 3, -1, 5);
  EXPECT_EQ(a * QuatQ(1), a);
  EXPECT_EQ(QuatQ(1) * a, a);
}

TEST(QuatQ, ConjugateAndNorm) {
  QuatQ a(1, 2, 3, 4);
  EXPECT_EQ(a.conj(), QuatQ(1, -2, -3, -4));
  EXPECT_EQ(a.norm_sq(), Rational(30));
  EXPECT_EQ(QuatQ(1).conj(), QuatQ(1));
  EXPECT_EQ(QuatQ(1).norm_sq(), Rational(1));
  EXPECT_EQ(QuatQ::J().conj(), -QuatQ::J());
  EXPECT_EQ(QuatQ::J().norm_sq(), Rational(1));
}

TEST(QuatQ, ComponentsByConjugation) {
  using A = std::array<Rational, 4>;
  EXPECT_EQ(component_by_conjugation(QuatQ(2, 3, -1, 5)), (A{2, 3, -1, 5}));
  EXPECT_EQ(component_by_conjugation(QuatQ(1)), (A{1, 0, 0, 0}));
  EXPECT_EQ(component_by_conjugation(QuatQ::K()), (A{0, 0, 0, 1}));
}

TEST(QuatQ, ZeroHasNoInverse) { EXPECT_THROW(QuatQ(0).inverse(), DivisionByZero); }

TEST(QuatQ, TextRoundTrip) {
  for (const char* s : {"1", "-I", "1/2 + J", "2 + 3I - J + 5K"}) {
    QuatQ q = parse_quat(s);
    EXPECT_EQ(parse_quat(format_scalar(q)), q) << s;
  }
  EXPECT_EQ(parse_quat("2 + 3I - J + 5K"), QuatQ(2, 3, -1, 5));
}

TEST(QuatQProperty, AlgebraLawsOnRandomQuaternions) {
  Rng rng(7);
  for (int t = 0; t < 150; ++t) {
    QuatQ a = rng.quat(20), b = rng.quat(20), c = rng.quat(20);
    EXPECT_EQ((a * b).conj(), b.conj() * a.conj());
    EXPECT_EQ((a * b).norm_sq(), a.norm_sq() * b.norm_sq());
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    auto comps = component_by_conjugation(a);
    EXPECT_EQ(comps, a.components());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), QuatQ(1));
      EXPECT_EQ(a.inverse() * a, QuatQ(1));
    }
  }
}

TEST(GaussQProperty, FieldLawsOnRandomValues) {
  Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    GaussQ a = rng.gauss(20), b = rng.gauss(20);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a * b).norm_sq(), a.norm_sq() * b.norm_sq());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), GaussQ(1));
    EXPECT_EQ(QuatQ::from_complex(a) * QuatQ::from_complex(b), QuatQ::from_complex(a * b));
  }
}

}  // namespace
}  // namespace qnss
