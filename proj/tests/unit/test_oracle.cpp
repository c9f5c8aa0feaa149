#include <gtest/gtest.h>

#include "qnss/groebner.hpp"
#include "qnss/oracle.hpp"
#include "support.hpp"

namespace qnss {
namespace {

using test::M;
using test::P;
using test::R;
using test::V;

TEST(LinearAlgebra, KernelAndSolve) {
  GaussMatrix m = {{1, 2, 3}, {2, 4, 6}};
  auto k = linalg::kernel(m, 3);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(multiply(m, v), (GaussVector{0, 0}));
  auto x = linalg::solve({{1, GaussQ::i()}, {0, 2}}, {GaussQ(1), GaussQ(4)}, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[1], GaussQ(2));
  EXPECT_EQ((*x)[0], GaussQ(1) - GaussQ(2) * GaussQ::i());
  EXPECT_FALSE(linalg::solve({{1, 1}, {1, 1}}, {GaussQ(0), GaussQ(1)}, 2));
}

TEST(LinearMembership, Examples) {
  auto q = linear_membership(V({"x1^3"}), std::vector<VecPoly>{V({"x1^2"})}, 1);
  ASSERT_TRUE(q);
  EXPECT_EQ((*q)[0], P("x1"));

  std::vector<VecPoly> gens = {V({"x1^2"}, 2), V({"x2*x1 - 1"}, 2)};
  auto r = linear_membership(V({"1"}, 2), gens, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(expand_combination(*r, gens, 1, 2), V({"1"}, 2));
  EXPECT_FALSE(linear_membership(V({"1"}, 2), gens, 1));

  for (unsigned b = 0; b < 6; ++b) {
    EXPECT_FALSE(linear_membership(V({"1"}), std::vector<VecPoly>{V({"x1^2"})}, b));
  }
}

TEST(GoodPoints, Construction) {
  std::vector<Rational> alpha = {0, 1}, beta = {1, 2};
  GoodPoint a = make_good_point(QuatQ::I(), alpha, beta);
  EXPECT_EQ(a[0], QuatQ::I());
  EXPECT_EQ(a[1], QuatQ(1, 2, 0, 0));
  std::vector<Rational> zero = {0, 0}, al = {R(1, 2), -3};
  GoodPoint c = make_good_point(QuatQ(1, 2, 3, 4), al, zero);
  EXPECT_TRUE(c[0].is_real() && c[1].is_real());
  Rng rng(8);
  for (int t = 0; t < 50; ++t) {
    EXPECT_EQ(sample_good_point(rng, 1, 10).dimension(), 1u);
    GoodPoint p = sample_good_point(rng, 3, 10);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(p[i] * p[j], p[j] * p[i]);
    }
  }
}

TEST(DirectionalZeros, DiagonalIdeal) {
  std::vector<MatPoly> gens = {M("[[x1, 0], [0, 1]]")};
  auto zeros = sample_directional_zeros(gens, 2, 1, {});
  ASSERT_FALSE(zeros.empty());
  for (const auto& z : zeros) {
    EXPECT_EQ(z.a(), (GaussVector{0}));
    EXPECT_TRUE(z.v()[1].is_zero());
  }
}

TEST(DirectionalZeros, UnitAndZeroIdeals) {
  EXPECT_TRUE(sample_directional_zeros(std::vector<MatPoly>{MatPoly::identity(2, 1)}, 2, 1, {}).empty());
  SampleConfig cfg;
  cfg.trials = 10;
  auto all = sample_directional_zeros(std::vector<MatPoly>{}, 2, 1, cfg);
  EXPECT_EQ(all.size(), 20u);
  EXPECT_EQ(sample_points(1, cfg).size(), 10u);
  EXPECT_EQ(sample_points(0, cfg).size(), 1u);
}

TEST(DirectionalZeros, SamplePointsAreDistinct) {
  SampleConfig cfg;
  cfg.trials = 300;
  auto pts = sample_points(1, cfg);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) EXPECT_NE(pts[i], pts[j]);
  }
}

TEST(Refutation, Examples) {
  MatPoly F = M("[[0, 1], [0, 0]]");
  auto w = refute_by_sampling(F, std::vector<MatPoly>{}, {});
  ASSERT_TRUE(w);
  EXPECT_EQ(eval_matrix(F, *w), (GaussVector{1, 0}));
  EXPECT_EQ(w->a(), sample_points(1, {}).front());

  std::vector<MatPoly> diag = {M("[[x1, 0], [0, 1]]")};
  EXPECT_FALSE(refute_by_sampling(F, diag, {}));
  EXPECT_FALSE(refute_by_sampling(M("[[x1^2, 0], [3*x1, 0]]"), diag, {}));
}

TEST(Refutation, WitnessesVerifyByEvaluation) {
  Rng rng(4);
  RandomShape shape{1, 2, 2, 3};
  int found = 0;
  for (int t = 0; t < 30; ++t) {
    std::vector<MatPoly> gens = {MatPoly::scalar(2, P("x1^2 - 1")) + random_matpoly(rng, shape, 2) *
                                                                         MatPoly::scalar(2, P("x1^2 - 1"))};
    MatPoly F = random_matpoly(rng, shape, 2);
    SampleConfig cfg;
    cfg.trials = 40;
    if (auto w = refute_by_sampling(F, gens, cfg)) {
      ++found;
      for (const auto& g : gens) EXPECT_EQ(eval_matrix(g, *w), (GaussVector{0, 0}));
      auto fv = eval_matrix(F, *w);
      EXPECT_FALSE(fv[0].is_zero() && fv[1].is_zero());
    }
  }
  EXPECT_GT(found, 0);
}

TEST(Determinism, SameConfigSameOutput) {
  SampleConfig cfg;
  cfg.seed = 42;
  cfg.trials = 64;
  EXPECT_EQ(sample_points(2, cfg), sample_points(2, cfg));
  cfg.grid = false;
  auto a = sample_points(2, cfg);
  cfg.seed = 43;
  EXPECT_NE(a, sample_points(2, cfg));
  Rng r1(3), r2(3);
  RandomShape shape;
  for (int t = 0; t < 10; ++t) EXPECT_EQ(random_qpoly(r1, shape), random_qpoly(r2, shape));
}

TEST(Monomials, EnumerationUpToBound) {
  auto ms = monomials_up_to(2, 2);
  EXPECT_EQ(ms.size(), 6u);
  EXPECT_TRUE(ms.front().is_one());
  EXPECT_EQ(monomials_up_to(0, 3).size(), 1u);
}

}  // namespace
}  // namespace qnss
