#include <gtest/gtest.h>

#include "qnss/errors.hpp"
#include "qnss/matrix_nss.hpp"
#include "support.hpp"

namespace qnss {
namespace {

using test::M;
using test::P;

MatLeftIdeal ideal(std::size_t n, std::size_t d, std::vector<MatPoly> gens) {
  return MatLeftIdeal(n, d, std::move(gens));
}

const GaussMatrix kId = {{1, 0}, {0, 1}};
const GaussMatrix kE21 = {{0, 0}, {1, 0}};

TEST(LeftIdealMembership, Examples) {
  MatPoly G = M("[[x1, 0], [0, 1]]");
  auto I = ideal(2, 1, {G, M("[[x1^2, 1], [0, 0]]")});
  auto H = left_ideal_membership(G, I);
  ASSERT_TRUE(H);
  EXPECT_EQ(combine(*H, I.generators(), 2, 1), G);

  auto J = ideal(2, 1, {G});
  auto H2 = left_ideal_membership(M("[[x1, 0], [x1, 5]]"), J);
  ASSERT_TRUE(H2);
  EXPECT_EQ((*H2)[0], M("[[1, 0], [1, 5]]"));
  EXPECT_FALSE(left_ideal_membership(MatPoly::identity(2, 1), J));
  EXPECT_FALSE(J.is_unit());
}

TEST(LeftIdealMembership, ShapeChecks) {
  EXPECT_THROW(ideal(2, 1, {M("[[1]]")}), ShapeError);
  auto I = ideal(2, 1, {M("[[x1, 0], [0, 1]]")});
  EXPECT_THROW(left_ideal_membership(M("[[1, 0, 0], [0, 1, 0], [0, 0, 1]]"), I), ShapeError);
}

TEST(LeftIdealMembership, PrecomputedBasisMustMatch) {
  auto I = ideal(2, 1, {M("[[x1, 0], [0, 1]]")});
  ModuleBasis B = I.row_basis();
  EXPECT_NO_THROW(MatLeftIdeal(2, 1, I.generators(), B));
  EXPECT_THROW(MatLeftIdeal(2, 1, {M("[[x1^2, 0], [0, 1]]")}, B), InvalidInput);
}

TEST(LeftIdealMembership, AgreesWithLinearOracle) {
  Rng rng(31);
  RandomShape shape{1, 2, 2, 3};
  for (int t = 0; t < 40; ++t) {
    std::vector<MatPoly> gens = {random_matpoly(rng, shape, 2)};
    MatPoly F = rng.coin() ? random_matpoly(rng, shape, 2) * gens[0] : random_matpoly(rng, shape, 2);
    auto I = ideal(2, 1, gens);
    auto H = left_ideal_membership(F, I);
    auto rows = I.row_generators();
    unsigned bound = gens[0].degree() + F.degree();
    if (H) {
      EXPECT_EQ(combine(*H, gens, 2, 1), F);
      for (const auto& h : *H) bound = std::max<unsigned>(bound, h.degree());
    }
    bool all_rows = true;
    for (std::size_t r = 0; r < 2; ++r) all_rows = all_rows && linear_membership(F.row(r), rows, bound).has_value();
    EXPECT_EQ(all_rows, H.has_value());
  }
}

TEST(Rabinowitsch, ScalarExtension) {
  auto I = ideal(1, 1, {M("[[x1^2]]")});
  auto ext = rabinowitsch_extend(M("[[x1]]"), I, GaussMatrix{{1}});
  EXPECT_EQ(ext.ring.nvars(), 2u);
  EXPECT_EQ(ext.ideal.generators(), (std::vector<MatPoly>{M("[[x1^2]]", 2), M("[[x2*x1 - 1]]", 2)}));
  EXPECT_TRUE(ext.ideal.is_unit());
}

TEST(Rabinowitsch, SymbolicRingLayout) {
  auto I = ideal(2, 1, {});
  auto ext = rabinowitsch_extend(M("[[0, 1], [0, 0]]"), I, std::nullopt);
  EXPECT_EQ(ext.ring.nvars(), 6u);
  EXPECT_EQ(ext.ring.y_index(), 1u);
  EXPECT_EQ(ext.ring.a_index(1, 0), 4u);
  EXPECT_EQ(ext.AF, symbolic_matrix(2, 5) * M("[[0, 1], [0, 0]]", 5));
}

TEST(Rabinowitsch, ZeroMatrixGivesUnitIdeal) {
  auto I = ideal(2, 1, {});
  auto ext = rabinowitsch_extend(M("[[x1, 1], [0, x1]]"), I, GaussMatrix{{0, 0}, {0, 0}});
  EXPECT_EQ(ext.ideal.generators().back(), -MatPoly::identity(2, 2));
  EXPECT_TRUE(ext.ideal.is_unit());
}

TEST(Telescoping, ClassicalIdentity) {
  auto I = ideal(1, 1, {M("[[x1^2]]")});
  auto ext = rabinowitsch_extend(M("[[x1]]"), I, GaussMatrix{{1}});
  std::vector<MatPoly> H = {M("[[x2^2]]", 2)};
  auto cert = telescope_certificate(H, M("[[-1 - x2*x1]]", 2), ext, I);
  EXPECT_EQ(cert.N, 2u);
  EXPECT_EQ(cert.L, (std::vector<MatPoly>{M("[[0]]"), M("[[0]]"), M("[[x1^2]]")}));
  EXPECT_TRUE(cert.verify());
  EXPECT_THROW(telescope_certificate(H, M("[[-x2*x1]]", 2), ext, I), InvalidInput);
}

TEST(PowerCertificate, Examples) {
  auto I = ideal(1, 1, {M("[[x1^2]]")});
  auto c = power_certificate(M("[[x1]]"), GaussMatrix{{1}}, I);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->N, 2u);
  EXPECT_EQ(c->L[2], M("[[x1^2]]"));
  EXPECT_TRUE(c->verify());

  auto J = ideal(2, 2, {MatPoly::scalar(2, P("x1", 2)), MatPoly::scalar(2, P("x2", 2))});
  auto d = power_certificate(M("[[x1, x2], [x1 + x2, x1*x2]]", 2), kId, J);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->N, 1u);
  EXPECT_TRUE(d->verify());

  EXPECT_FALSE(power_certificate(M("[[0, 1], [0, 0]]"), kE21, ideal(2, 1, {})));
}

TEST(PowerCertificate, TamperingIsDetected) {
  auto I = ideal(1, 1, {M("[[x1^2]]")});
  auto c = power_certificate(M("[[x1]]"), GaussMatrix{{1}}, I);
  ASSERT_TRUE(c);
  auto bad = *c;
  bad.L[2] = M("[[2*x1^2]]");
  EXPECT_FALSE(bad.identity_holds());
  EXPECT_FALSE(bad.verify());
  auto bad2 = *c;
  bad2.H[2][0] = M("[[2]]");
  EXPECT_TRUE(bad2.identity_holds());
  EXPECT_FALSE(bad2.verify());
}

TEST(PowerCertificate, UniformCertificateSpecializes) {
  auto I = ideal(2, 1, {MatPoly::scalar(2, P("x1^2"))});
  MatPoly F = M("[[x1, x1], [0, 2*x1]]");
  auto c = uniform_power_certificate(F, I);
  ASSERT_TRUE(c);
  EXPECT_TRUE(c->verify());
  EXPECT_FALSE(c->A.has_value());
  Rng rng(12);
  for (int t = 0; t < 6; ++t) {
    GaussMatrix A = {{rng.gauss(5), rng.gauss(5)}, {rng.gauss(5), rng.gauss(5)}};
    auto s = c->specialize(A);
    EXPECT_TRUE(s.verify());
    EXPECT_EQ(s.AF, constant_matrix(A, 1) * F);
  }
  EXPECT_THROW(c->specialize(kId).specialize(kId), InvalidInput);
}

TEST(Decision, ScalarRadicalMembership) {
  auto out = decide_directional_vanishing(M("[[x1]]"), ideal(1, 1, {M("[[x1^2]]")}));
  EXPECT_EQ(out.verdict, Verdict::ProvedVanishing);
  ASSERT_TRUE(out.certificate);
  EXPECT_EQ(out.certificate->N, 2u);
  EXPECT_TRUE(out.certificate->verify());
}

// A = 1 passes its probe although the vanishing claim is false: the probe
// family has to go on to other matrices.
TEST(Decision, IdentityProbeIsNotEnough) {
  MatPoly F = M("[[0, 1], [0, 0]]");
  auto I = ideal(2, 1, {});
  EXPECT_TRUE(rabinowitsch_extend(F, I, kId).ideal.is_unit());
  auto out = decide_directional_vanishing(F, I);
  EXPECT_EQ(out.verdict, Verdict::RefutedVanishing);
  ASSERT_FALSE(out.probes.empty());
  EXPECT_EQ(out.probes.front().A, kId);
  EXPECT_TRUE(out.probes.front().unit);
  ASSERT_TRUE(out.refuting_A);
  EXPECT_EQ(*out.refuting_A, kE21);
  EXPECT_FALSE(rabinowitsch_extend(F, I, *out.refuting_A).ideal.is_unit());
  ASSERT_TRUE(out.witness);
  auto fv = eval_matrix(F, *out.witness);
  EXPECT_FALSE(fv[0].is_zero() && fv[1].is_zero());
}

TEST(Decision, DiagonalIdealKillsNilpotent) {
  auto out = decide_directional_vanishing(M("[[0, 1], [0, 0]]"), ideal(2, 1, {M("[[x1, 0], [0, 1]]")}));
  EXPECT_EQ(out.verdict, Verdict::ProvedVanishing);
  ASSERT_TRUE(out.certificate);
  EXPECT_TRUE(out.certificate->verify());
}

TEST(Decision, MembersAreProvedDirectly) {
  auto I = ideal(2, 1, {M("[[x1, 0], [0, 1]]")});
  auto out = decide_directional_vanishing(M("[[x1^2, 0], [3*x1, 0]]"), I);
  EXPECT_EQ(out.verdict, Verdict::ProvedVanishing);
  EXPECT_EQ(out.phase, "direct");
  ASSERT_TRUE(out.certificate);
  EXPECT_EQ(out.certificate->N, 1u);
  EXPECT_TRUE(out.certificate->verify());
}

TEST(Decision, ConsistentWithSampledZeros) {
  Rng rng(77);
  RandomShape shape{1, 2, 2, 2};
  for (int t = 0; t < 12; ++t) {
    std::vector<MatPoly> gens = {MatPoly::scalar(2, P("x1^2 - 1")) * random_matpoly(rng, shape, 2),
                                 MatPoly::scalar(2, P("x1^3 - x1"))};
    MatPoly F = random_matpoly(rng, shape, 2);
    DecisionConfig cfg;
    cfg.trials = 40;
    auto I = ideal(2, 1, gens);
    auto out = decide_directional_vanishing(F, I, cfg);
    SampleConfig sc{cfg.seed, cfg.trials, cfg.height, true};
    if (out.verdict == Verdict::ProvedVanishing) {
      ASSERT_TRUE(out.certificate);
      EXPECT_TRUE(out.certificate->verify());
      for (const auto& z : sample_directional_zeros(gens, 2, 1, sc)) {
        auto fv = eval_matrix(F, z);
        EXPECT_TRUE(fv[0].is_zero() && fv[1].is_zero());
      }
    }
    if (out.witness) {
      EXPECT_EQ(out.verdict, Verdict::RefutedVanishing);
      EXPECT_FALSE(rabinowitsch_extend(F, I, special_A(*out.witness, F)).ideal.is_unit());
    }
    EXPECT_NE(out.verdict, Verdict::Unknown);
  }
}

TEST(Decision, ProbeFamilyOrder) {
  DecisionConfig cfg;
  auto fam = probe_family(2, cfg);
  ASSERT_EQ(fam.size(), 1u + 4u + cfg.extra_probes);
  EXPECT_EQ(fam[0], kId);
  EXPECT_EQ(fam[1], (GaussMatrix{{1, 0}, {0, 0}}));
  EXPECT_EQ(fam[3], kE21);
  EXPECT_EQ(probe_family(2, cfg), fam);
}

TEST(SpecialA, Examples) {
  DirectionalPoint e2({GaussQ(7)}, {GaussQ(0), GaussQ(1)});
  EXPECT_EQ(special_A(e2, M("[[0, 1], [0, 0]]")), kE21);
  DirectionalPoint e1({GaussQ(0)}, {GaussQ(1), GaussQ(0)});
  EXPECT_EQ(special_A(e1, M("[[x1, 0], [0, 1]]")), (GaussMatrix{{0, 0}, {0, 0}}));
  EXPECT_EQ(special_A(e1, MatPoly::identity(2, 1)), (GaussMatrix{{1, 0}, {0, 0}}));
}

TEST(Witnesses, Semiprime) {
  auto I = ideal(2, 1, {MatPoly::scalar(2, P("x1^2"))});
  EXPECT_EQ(semiprime_witness_matrix(I, MatPoly::scalar(2, P("x1"))), Witness::Violation);
  EXPECT_EQ(semiprime_witness_matrix(I, MatPoly::scalar(2, P("x1^3"))), Witness::NoViolation);
  auto unit = ideal(2, 1, {MatPoly::identity(2, 1)});
  EXPECT_EQ(semiprime_witness_matrix(unit, M("[[x1, 1], [0, 0]]")), Witness::NoViolation);
}

TEST(Witnesses, PrimePair) {
  auto I = ideal(2, 1, {MatPoly::scalar(2, P("x1^2"))});
  EXPECT_EQ(prime_pair_matrix(I, P("x1"), MatPoly::scalar(2, P("x1"))), Witness::Violation);
  EXPECT_EQ(prime_pair_matrix(I, P("1"), MatPoly::scalar(2, P("x1"))), Witness::NoViolation);
  EXPECT_EQ(prime_pair_matrix(I, P("x1"), MatPoly::scalar(2, P("x1^2"))), Witness::NoViolation);
}

TEST(Witnesses, CompletelySemiprime) {
  auto I = ideal(2, 1, {MatPoly::scalar(2, P("x1^2"))});
  EXPECT_EQ(completely_semiprime_matrix(I, MatPoly::scalar(2, P("x1"))), Witness::Violation);
  EXPECT_EQ(completely_semiprime_matrix(I, MatPoly::scalar(2, P("x1^2"))), Witness::NoViolation);
  EXPECT_EQ(to_string(Witness::Violation), "Violation");
  EXPECT_EQ(to_string(Verdict::RefutedVanishing), "RefutedVanishing");
}

}  // namespace
}  // namespace qnss
