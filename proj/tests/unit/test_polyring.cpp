#include <gtest/gtest.h>

#include "qnss/embed.hpp"
#include "qnss/errors.hpp"
#include "qnss/json_io.hpp"
#include "qnss/oracle.hpp"
#include "qnss/points.hpp"
#include "support.hpp"

namespace qnss {
namespace {

using test::M;
using test::P;
using test::Q;
using test::R;

const QuatQ kI = QuatQ::I(), kJ = QuatQ::J(), kK = QuatQ::K();

TEST(Arithmetic, QuaternionCoefficientsMultiplyInOrder) {
  EXPECT_EQ(Q("J") * Q("x1 - I"), Q("J*x1 + K"));
  EXPECT_EQ(Q("x1 - I") * Q("J"), Q("J*x1 - K"));
}

TEST(Arithmetic, GaussianProduct) { EXPECT_EQ(P("(x1 + i)*(x1 - i)"), P("x1^2 + 1")); }

TEST(Arithmetic, IdentityMatrixIsNeutral) {
  MatPoly F = M("[[x1, 2], [i*x1^2, 0]]");
  EXPECT_EQ(MatPoly::identity(2, 1) * F, F);
  EXPECT_EQ(F * MatPoly::identity(2, 1), F);
}

TEST(Arithmetic, ZeroTermsAreDropped) {
  EXPECT_TRUE((P("x1 + 1") - P("x1 + 1")).is_zero());
  EXPECT_EQ(P("x1 - x1 + 3").size(), 1u);
}

TEST(Arithmetic, ShapeMismatchThrows) {
  EXPECT_THROW(P("x1") + P("x1", 2), ShapeError);
  EXPECT_THROW(M("[[1]]") * M("[[1, 0], [0, 1]]"), ShapeError);
}

TEST(Conjugation, Examples) {
  EXPECT_EQ(quat_poly_conj(Q("J*x1 + K")), Q("-J*x1 - K"));
  EXPECT_EQ(quat_poly_conj(Q("x1^2 + 1")), Q("x1^2 + 1"));
}

TEST(Evaluation, QuaternionExamples) {
  GoodPoint a({kI});
  EXPECT_EQ(eval_quat(Q("J*x1"), a), -kK);
  GoodPoint b({kI, QuatQ(1) + QuatQ(2) * kI});
  EXPECT_EQ(eval_quat(Q("x1*x2", 2), b), QuatQ(-2) + kI);
  EXPECT_EQ(eval_quat(Q("3/2 - K"), GoodPoint({kJ + kI})), QuatQ(R(3, 2)) - kK);
}

TEST(Evaluation, NonCommutingCoordinatesAreRejected) {
  EXPECT_THROW(GoodPoint({kI, kJ}), InvalidInput);
  EXPECT_NO_THROW(GoodPoint({kI, QuatQ(3) - kI}));
}

TEST(Evaluation, ConjugatePoint) {
  GoodPoint a({kJ});
  EXPECT_EQ(conjugate_point(Q("1"), a), a);
  EXPECT_EQ(conjugate_point(Q("x1^2 + 3"), a), a);  // g(a) = 2 is central
  QPoly g = Q("x1 - I");
  QPoly f = Q("J");
  GoodPoint b = conjugate_point(g, a);
  const QuatQ lhs = eval_quat(f * g, a);
  EXPECT_EQ(lhs, QuatQ(-1) + kK);
  EXPECT_EQ(eval_quat(f, b) * eval_quat(g, a), lhs);
  EXPECT_THROW(conjugate_point(Q("x1 - J"), a), NotInvertible);
}

TEST(Evaluation, MatrixExamples) {
  DirectionalPoint p({GaussQ(3)}, {GaussQ(1), GaussQ::i()});
  EXPECT_EQ(eval_matrix(MatPoly::identity(2, 1), p), p.v());
  DirectionalPoint z({GaussQ(0)}, {GaussQ(1), GaussQ(0)});
  EXPECT_EQ(eval_matrix(M("[[x1, 0], [0, 1]]"), z), (GaussVector{0, 0}));
  DirectionalPoint e2({GaussQ(5)}, {GaussQ(0), GaussQ(1)});
  EXPECT_EQ(eval_matrix(M("[[0, 1], [0, 0]]"), e2), (GaussVector{1, 0}));
  EXPECT_THROW(DirectionalPoint({GaussQ(0)}, {GaussQ(0), GaussQ(0)}), InvalidInput);
}

TEST(Embedding, Examples) {
  EXPECT_EQ(phi_embed(Q("I")), M("[[i, 0], [0, -i]]", 1));
  EXPECT_EQ(phi_embed(Q("J")), M("[[0, -1], [1, 0]]", 1));
  EXPECT_EQ(phi_embed(Q("x1 + J*x2", 2)), M("[[x1, -x2], [x2, x1]]", 2));
}

TEST(Embedding, DecomposeExamples) {
  auto [z, w] = phi_decompose(MatPoly::identity(2, 1));
  EXPECT_EQ(z, Q("1"));
  EXPECT_TRUE(w.is_zero());
  auto [z2, w2] = phi_decompose(M("[[0, 1], [0, 0]]"));
  EXPECT_EQ(z2, Q("-1/2*J"));
  EXPECT_EQ(w2, Q("1/2*K"));
  EXPECT_EQ(phi_compose(z2, w2), M("[[0, 1], [0, 0]]"));
  EXPECT_THROW(phi_decompose(M("[[1]]")), ShapeError);
}

TEST(Embedding, ComponentsRoundTrip) {
  QPoly f = Q("2*x1^2 - 3*I*x1 + J - 1/2*K*x1");
  EXPECT_EQ(quat_from_components(quat_components(f)), f);
  for (std::size_t u = 0; u < 4; ++u) {
    EXPECT_EQ(quat_from_components(left_unit_multiple(u, quat_components(f))), f.scaled_left(QuatQ::unit(u)));
  }
}

class RandomPolys : public ::testing::Test {
 protected:
  Rng rng{2024};
  RandomShape shape{2, 3, 3, 5};
};

TEST_F(RandomPolys, TwistedProductRule) {
  int twisted = 0;
  for (int t = 0; t < 250; ++t) {
    QPoly f = random_qpoly(rng, shape), g = random_qpoly(rng, shape);
    GoodPoint a = sample_good_point(rng, 2, 5);
    QuatQ ga = eval_quat(g, a);
    QuatQ fga = eval_quat(f * g, a);
    if (ga.is_zero()) {
      EXPECT_TRUE(fga.is_zero());
    } else {
      EXPECT_EQ(fga, eval_quat(f, conjugate_point(g, a)) * ga);
      if (fga != eval_quat(f, a) * ga) ++twisted;
    }
    EXPECT_EQ(eval_quat(f + g, a), eval_quat(f, a) + ga);
  }
  EXPECT_GT(twisted, 0);
}

TEST(Evaluation, ProductRuleIsNotPlainMultiplication) {
  // (x1 * J)(I) = J I = -K, but x1(I) J(I) = I J = K.
  QPoly f = Q("x1"), g = Q("J");
  GoodPoint a({kI});
  EXPECT_EQ(eval_quat(f * g, a), -kK);
  EXPECT_EQ(eval_quat(f, a) * eval_quat(g, a), kK);
}

TEST_F(RandomPolys, EmbeddingIsARingHomomorphism) {
  EXPECT_EQ(phi_embed(QPoly::constant(2, QuatQ(1))), MatPoly::identity(2, 2));
  for (int t = 0; t < 250; ++t) {
    QPoly f = random_qpoly(rng, shape), g = random_qpoly(rng, shape);
    EXPECT_EQ(phi_embed(f + g), phi_embed(f) + phi_embed(g));
    EXPECT_EQ(phi_embed(f * g), phi_embed(f) * phi_embed(g));
  }
}

TEST_F(RandomPolys, DecompositionRoundTrip) {
  for (int t = 0; t < 250; ++t) {
    QPoly z = random_qpoly(rng, shape), w = random_qpoly(rng, shape);
    auto [z2, w2] = phi_decompose(phi_compose(z, w));
    EXPECT_EQ(z2, z);
    EXPECT_EQ(w2, w);
    MatPoly A = random_matpoly(rng, shape, 2);
    auto [za, wa] = phi_decompose(A);
    EXPECT_EQ(phi_compose(za, wa), A);
    EXPECT_TRUE(phi_decompose(phi_embed(z)).second.is_zero());
  }
}

TEST_F(RandomPolys, VariablesAreCentralAndRealPolynomialsCommute) {
  for (int t = 0; t < 100; ++t) {
    QPoly f = random_qpoly(rng, shape);
    for (std::size_t l = 0; l < 2; ++l) {
      QPoly x = QPoly::variable(2, l);
      EXPECT_EQ(x * f, f * x);
    }
    QPoly r = quat_from_real(random_mpoly(rng, shape, true));
    QPoly s = quat_from_real(random_mpoly(rng, shape, true));
    EXPECT_EQ(r * s, s * r);
    EXPECT_EQ(quat_poly_conj(quat_poly_conj(f)), f);
  }
}

TEST_F(RandomPolys, TextRoundTrip) {
  auto v = test::vars(2);
  for (int t = 0; t < 100; ++t) {
    MPoly p = random_mpoly(rng, shape);
    QPoly q = random_qpoly(rng, shape);
    MatPoly m = random_matpoly(rng, shape, 2);
    EXPECT_EQ(parse_mpoly(format_poly(p, v), v), p);
    EXPECT_EQ(parse_qpoly(format_poly(q, v), v), q);
    EXPECT_EQ(parse_matpoly(format_matrix(m, v), v), m);
  }
}

TEST_F(RandomPolys, JsonRoundTrip) {
  for (int t = 0; t < 50; ++t) {
    MPoly p = random_mpoly(rng, shape);
    QPoly q = random_qpoly(rng, shape);
    MatPoly m = random_matpoly(rng, shape, 2);
    VecPoly v = random_vecpoly(rng, shape, 3);
    EXPECT_EQ(json::mpoly_from_json(json::to_json(p)), p);
    EXPECT_EQ(json::qpoly_from_json(json::to_json(q)), q);
    EXPECT_EQ(json::matpoly_from_json(json::to_json(m)), m);
    EXPECT_EQ(json::vecpoly_from_json(json::to_json(v)), v);
  }
}

TEST(Text, CanonicalPrinting) {
  auto v = test::vars(1);
  EXPECT_EQ(format_poly(P("x1^2 + (1-2i)*x1 - 1/2i"), v), "x1^2 + (1-2i)*x1 - 1/2i");
  EXPECT_EQ(format_poly(Q("-x1 + I*x1^2 + 0"), v), "I*x1^2 - x1");
  EXPECT_EQ(format_poly(MPoly(1), v), "0");
  EXPECT_EQ(format_matrix(M("[[x1, 0], [0, 1]]"), v), "[[x1, 0], [0, 1]]");
}

TEST(Text, JuxtapositionAndPowers) {
  EXPECT_EQ(Q("2x1(x1 + J)"), Q("2*x1^2 + 2*J*x1"));
  EXPECT_EQ(P("(x1 + 1)^3"), P("x1^3 + 3*x1^2 + 3*x1 + 1"));
  EXPECT_EQ(P("x1^0"), P("1"));
}

TEST(Text, SyntaxErrorsCarryLocations) {
  try {
    P("(x1^^2)");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(P("x3"), SyntaxError);
  EXPECT_THROW(P("x1 +"), SyntaxError);
  EXPECT_THROW(P("J"), SyntaxError);  // only i/I exist over Q(i)
  EXPECT_THROW(P("x1^"), SyntaxError);
  EXPECT_THROW(P("1/0"), std::exception);
  EXPECT_THROW(M("[[1, 0], [0]]"), SyntaxError);
  EXPECT_THROW(parse_matpoly("[[1]]", test::vars(1), 2), SyntaxError);
}

TEST(Text, LongestVariableNameWins) {
  std::vector<std::string> v = {"u", "uv"};
  MPoly p = parse_mpoly("uv*u", v);
  EXPECT_EQ(p, MPoly::variable(2, 0) * MPoly::variable(2, 1));
}

}  // namespace
}  // namespace qnss
