#include <gtest/gtest.h>

#include "qnss/errors.hpp"
#include "qnss/quat_nss.hpp"
#include "support.hpp"

namespace qnss {
namespace {

using test::M;
using test::P;
using test::Q;
using test::V;

QuatLeftIdeal ideal(std::vector<QPoly> gens, std::size_t d = 1) { return QuatLeftIdeal(d, std::move(gens)); }

TEST(QuatMembership, CofactorsExpand) {
  auto I = ideal({Q("x1^2 + 1"), Q("J*x1 - K")});
  QPoly f = Q("(x1 + I)*(x1^2 + 1) + (2 - K)*(J*x1 - K)");
  auto h = quat_membership(f, I);
  ASSERT_TRUE(h);
  EXPECT_EQ((*h)[0] * I.generators()[0] + (*h)[1] * I.generators()[1], f);
  EXPECT_FALSE(quat_membership(Q("x1"), ideal({Q("x1^2 + 1")})));
  EXPECT_TRUE(ideal({Q("J")}).is_unit());
  EXPECT_FALSE(ideal({Q("x1 + I")}).is_unit());
}

TEST(QuatMembership, LeftNotRight) {
  // I * (x1 + J) is in the left ideal of x1 + J, (x1 + J) * I is not.
  auto I = ideal({Q("x1 + J")});
  EXPECT_TRUE(contains(I, Q("I") * Q("x1 + J")));
  EXPECT_FALSE(contains(I, Q("x1 + J") * Q("I")));
}

TEST(Embedding, LeftIdeals) {
  EXPECT_EQ(embed_left_ideal(ideal({Q("x1^2 + 1")})).generators(),
            (std::vector<MatPoly>{MatPoly::scalar(2, P("x1^2 + 1"))}));
  auto unit = embed_left_ideal(ideal({Q("J")}));
  EXPECT_EQ(unit.generators().front(), M("[[0, -1], [1, 0]]"));
  EXPECT_TRUE(unit.is_unit());
  auto zero = embed_left_ideal(ideal({QPoly(1)}));
  EXPECT_TRUE(zero.generators().front().is_zero());
  EXPECT_FALSE(zero.is_unit());
}

TEST(QuatDecision, Examples) {
  auto I = ideal({Q("x1^2 + 1")});
  EXPECT_EQ(decide_quat_vanishing(Q("x1^3 + x1"), I).verdict(), Verdict::ProvedVanishing);
  auto r = decide_quat_vanishing(Q("x1"), I);
  EXPECT_EQ(r.verdict(), Verdict::RefutedVanishing);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, GoodPoint({QuatQ::I()}));
  EXPECT_TRUE(eval_quat(Q("x1^2 + 1"), *r.witness).is_zero());
  EXPECT_FALSE(eval_quat(Q("x1"), *r.witness).is_zero());

  auto p = decide_quat_vanishing(Q("x1"), ideal({Q("x1^2")}));
  EXPECT_EQ(p.verdict(), Verdict::ProvedVanishing);
  ASSERT_TRUE(p.matrix.certificate);
  EXPECT_EQ(p.matrix.certificate->N, 2u);
  EXPECT_TRUE(p.matrix.certificate->verify());
}

TEST(QuatDecision, WitnessConversion) {
  // Direction (u, v) = (1, i): b = 1 + J i = 1 - K.
  EXPECT_EQ(direction_to_quaternion(GaussQ(1), GaussQ::i()), QuatQ(1, 0, 0, -1));
  DirectionalPoint p({GaussQ::i(), GaussQ(2)}, {GaussQ(1), GaussQ::i()});
  GoodPoint a = directional_to_good_point(p);
  QuatQ b(1, 0, 0, -1);
  EXPECT_EQ(a[0], b * QuatQ::I() * b.inverse());
  EXPECT_EQ(a[1], QuatQ(2));
}

TEST(QuatCertificate, Examples) {
  auto I = ideal({Q("x1^2")});
  auto c = quat_power_certificate(Q("x1"), QuatQ::J(), I);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->N, 2u);
  EXPECT_EQ(c->u[0], Q("-x1^2"));
  EXPECT_TRUE(c->u[1].is_zero());
  EXPECT_TRUE(c->u[2].is_zero());
  EXPECT_TRUE(c->verify());
  auto bad = *c;
  bad.u[0] = Q("x1^2");
  EXPECT_FALSE(bad.identity_holds());

  // b = 0: (0 f)^1 = 0 = u_0 with u_0 = 0.
  auto z = quat_power_certificate(Q("x1"), QuatQ(0), ideal({Q("x1^2 + 1")}));
  ASSERT_TRUE(z);
  EXPECT_EQ(z->N, 1u);
  for (const auto& u : z->u) EXPECT_TRUE(u.is_zero());

  auto m = quat_power_certificate(Q("x1^3 + x1"), QuatQ(1), ideal({Q("x1^2 + 1")}));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->N, 1u);
  EXPECT_TRUE(m->verify());

  EXPECT_FALSE(quat_power_certificate(Q("x1"), QuatQ(1), ideal({Q("x1^2 + 1")})));
}

TEST(QuatWitnesses, Semiprime) {
  EXPECT_EQ(semiprime_witness_quat(ideal({Q("x1^2")}), Q("x1")), Witness::Violation);
  EXPECT_EQ(semiprime_witness_quat(ideal({Q("x1^2")}), Q("x1^3")), Witness::NoViolation);
  EXPECT_EQ(semiprime_witness_quat(ideal({Q("x1^2 + 1")}), Q("x1 + I")), Witness::NoViolation);
}

TEST(QuatWitnesses, PrimePair) {
  auto I = ideal({Q("x1^2")});
  EXPECT_EQ(prime_pair_quat(I, P("x1"), Q("x1")), Witness::Violation);
  EXPECT_EQ(prime_pair_quat(I, P("1"), Q("x1")), Witness::NoViolation);
  EXPECT_THROW(prime_pair_quat(I, P("i*x1"), Q("x1")), InvalidInput);
  EXPECT_EQ(prime_pair_quat(ideal({Q("1")}), P("1"), Q("x1")), Witness::NoViolation);
}

TEST(QuatWitnesses, CompletelyPrime) {
  auto I = ideal({Q("x1^2 + 1")});
  EXPECT_EQ(completely_prime_pair_quat(I, Q("x1 + I"), Q("x1 - I")), Witness::Violation);
  EXPECT_EQ(completely_prime_pair_quat(I, Q("x1^2 + 1"), Q("x1")), Witness::NoViolation);
  EXPECT_EQ(completely_prime_pair_quat(I, Q("x1 + I"), Q("1")), Witness::NoViolation);
}

TEST(QuatWitnesses, CompletelySemiprime) {
  EXPECT_EQ(completely_semiprime_witness(ideal({Q("x1^2")}), Q("x1")), Witness::Violation);
  EXPECT_EQ(completely_semiprime_witness(ideal({Q("x1^2")}), Q("x1^2")), Witness::NoViolation);
  EXPECT_EQ(completely_semiprime_witness(ideal({Q("1")}), Q("x1 + J")), Witness::NoViolation);
}

std::vector<VecPoly> encoding(const QuatLeftIdeal& I) { return I.module_generators(); }

TEST(ConjugateIntersection, LeftIdealIsAFixpoint) {
  auto I = ideal({Q("x1 + I")});
  auto J = conjugate_intersection(encoding(I), 1);
  for (const auto& g : J.generators()) EXPECT_TRUE(contains(I, g));
  for (const auto& g : I.generators()) EXPECT_TRUE(contains(J, g));
  EXPECT_TRUE(closed_under_units(J.module_generators(), 1));
}

TEST(ConjugateIntersection, FirstComponentModule) {
  std::vector<VecPoly> N = {V({"x1", "0", "0", "0"}), V({"0", "1", "0", "0"}), V({"0", "0", "1", "0"}),
                            V({"0", "0", "0", "1"})};
  EXPECT_FALSE(closed_under_units(N, 1));
  auto J = conjugate_intersection(N, 1);
  auto X = ideal({Q("x1")});
  for (const auto& g : J.generators()) EXPECT_TRUE(contains(X, g));
  EXPECT_TRUE(contains(J, Q("x1")));
  EXPECT_TRUE(closed_under_units(J.module_generators(), 1));
}

TEST(ConjugateIntersection, FullModule) {
  std::vector<VecPoly> N = {V({"1", "0", "0", "0"}), V({"0", "1", "0", "0"}), V({"0", "0", "1", "0"}),
                            V({"0", "0", "0", "1"})};
  EXPECT_TRUE(conjugate_intersection(N, 1).is_unit());
}

TEST(ConjugateIntersection, EncodedIdealIntersection) {
  auto A = ideal({Q("x1 + I")});
  auto B = ideal({Q("x1 - I")});
  auto X = module_intersect(encoding(A), encoding(B), 4, 1);
  auto target = ideal({Q("x1^2 + 1")});
  std::vector<QPoly> gens;
  for (const auto& v : X) gens.push_back(quat_from_components(v));
  auto meet = ideal(gens);
  for (const auto& g : gens) EXPECT_TRUE(contains(target, g));
  EXPECT_TRUE(contains(meet, Q("x1^2 + 1")));
}

TEST(EmbeddingConsistency, RandomInstances) {
  Rng rng(404);
  RandomShape shape{1, 2, 2, 2};
  for (int t = 0; t < 10; ++t) {
    QPoly g = Q("x1^2 + 1") * random_qpoly(rng, shape);
    QPoly f = random_qpoly(rng, shape);
    auto I = ideal({g});
    DecisionConfig cfg;
    cfg.trials = 64;
    auto qd = decide_quat_vanishing(f, I, cfg);
    auto md = decide_directional_vanishing(phi_embed(f), embed_left_ideal(I), cfg);
    EXPECT_EQ(qd.verdict(), md.verdict);
    if (qd.witness) {
      EXPECT_TRUE(eval_quat(g, *qd.witness).is_zero());
      EXPECT_FALSE(eval_quat(f, *qd.witness).is_zero());
    }
    if (auto c = quat_power_certificate(f, rng.quat(3), I)) {
      EXPECT_TRUE(c->verify());
      for (const auto& u : c->u) EXPECT_TRUE(contains(I, u));
    }
  }
}

}  // namespace
}  // namespace qnss
