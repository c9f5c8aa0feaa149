#include <gtest/gtest.h>

#include <algorithm>

#include "qnss/embed.hpp"
#include "qnss/errors.hpp"
#include "qnss/groebner.hpp"
#include "qnss/json_io.hpp"
#include "qnss/oracle.hpp"
#include "support.hpp"

namespace qnss {
namespace {

using test::P;
using test::V;

ModuleBasis plain(std::vector<VecPoly> gens, std::size_t rank, std::size_t nvars) {
  return ModuleBasis::from_generators(std::move(gens), rank, nvars);
}

ModuleBasis gb(const std::vector<VecPoly>& gens, std::size_t rank, std::size_t nvars, GroebnerOptions o = {}) {
  return buchberger_module(gens, rank, nvars, o);
}

bool same_set(std::vector<VecPoly> a, std::vector<VecPoly> b) {
  if (a.size() != b.size()) return false;
  for (const auto& v : a) {
    if (std::find(b.begin(), b.end(), v) == b.end()) return false;
  }
  return true;
}

TEST(Division, UnivariateQuotientAndRemainder) {
  Division d = divide_with_quotients(V({"x1^3 + x1"}), plain({V({"x1^2"})}, 1, 1));
  EXPECT_EQ(d.quotients, (std::vector<MPoly>{P("x1")}));
  EXPECT_EQ(d.remainder, V({"x1"}));
}

TEST(Division, VectorQuotients) {
  auto B = plain({V({"x1", "0"}), V({"0", "1"})}, 2, 1);
  Division d = divide_with_quotients(V({"x1^2", "x1"}), B);
  EXPECT_EQ(d.quotients, (std::vector<MPoly>{P("x1"), P("x1")}));
  EXPECT_TRUE(d.remainder.is_zero());
  Division e = divide_with_quotients(V({"1", "0"}), B);
  EXPECT_TRUE(e.quotients[0].is_zero());
  EXPECT_TRUE(e.quotients[1].is_zero());
  EXPECT_EQ(e.remainder, V({"1", "0"}));
}

TEST(Buchberger, ContainedGeneratorIsDropped) {
  auto B = gb({V({"x1^2"}), V({"x1^3"})}, 1, 1);
  EXPECT_EQ(B.generators(), (std::vector<VecPoly>{V({"x1^2"})}));
}

TEST(Buchberger, ReducesAgainstUnitRow) {
  auto B = gb({V({"x1", "1"}), V({"0", "1"})}, 2, 1);
  EXPECT_TRUE(same_set(B.generators(), {V({"x1", "0"}), V({"0", "1"})}));
  EXPECT_TRUE(B.reduced());
}

TEST(Buchberger, OutputIsMonicAndSatisfiesCriterion) {
  auto B = gb({V({"2*x1*x2 - 1", "x2"}, 2), V({"3*x1^2", "i*x1 + x2"}, 2), V({"x2^2", "0"}, 2)}, 2, 2);
  for (std::size_t j = 0; j < B.size(); ++j) {
    const VecPoly& g = B.generators()[j];
    MPoly lead = g[B.leading_position(j)];
    EXPECT_EQ(lead.coefficient(B.leading_monomial(j)), GaussQ(1));
  }
  EXPECT_TRUE(s_vectors_reduce_to_zero(B));
}

// Coprime leading terms in different positions can still give a
// non-trivial S-vector in rank > 1.
TEST(Buchberger, RankTwoCoprimeLeadsStillPair) {
  auto B = gb({V({"x1", "1"}, 2), V({"x2", "0"}, 2)}, 2, 2);
  EXPECT_NE(std::find(B.generators().begin(), B.generators().end(), V({"0", "x2"}, 2)), B.generators().end());
  EXPECT_TRUE(s_vectors_reduce_to_zero(B));
  EXPECT_TRUE(module_membership(V({"0", "x2"}, 2), B).has_value());
}

TEST(Buchberger, QuaternionEncodingIsAFixpoint) {
  QPoly g = test::Q("x1 + I");
  std::vector<VecPoly> gens;
  for (std::size_t u = 0; u < 4; ++u) gens.push_back(quat_components(g.scaled_left(QuatQ::unit(u))));
  auto B = gb(gens, 4, 1);
  auto again = gb(B.generators(), 4, 1);
  EXPECT_EQ(again.generators(), B.generators());
}

TEST(Buchberger, PermutedInputGivesIdenticalBasis) {
  Rng rng(5);
  RandomShape shape{2, 2, 3, 3};
  for (int t = 0; t < 20; ++t) {
    std::vector<VecPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_vecpoly(rng, shape, 2));
    auto a = gb(gens, 2, 2);
    std::reverse(gens.begin(), gens.end());
    auto b = gb(gens, 2, 2);
    EXPECT_EQ(a.generators(), b.generators());
  }
}

TEST(Buchberger, DegreeCapRaises) {
  GroebnerOptions o;
  o.degree_cap = 2;
  EXPECT_THROW(gb({V({"x1^2 + x2"}, 2), V({"x1*x2"}, 2)}, 1, 2, o), ResourceExceeded);
}

TEST(Buchberger, PairBudgetRaises) {
  GroebnerOptions o;
  o.pair_budget = 0;
  EXPECT_THROW(gb({V({"x1^2 + x2"}, 2), V({"x1*x2 + 1"}, 2)}, 1, 2, o), ResourceExceeded);
}

TEST(Buchberger, ZeroAndEmptyInput) {
  EXPECT_EQ(gb({}, 2, 1).size(), 0u);
  EXPECT_EQ(gb({V({"0", "0"})}, 2, 1).size(), 0u);
  EXPECT_FALSE(module_membership(V({"1", "0"}), gb({}, 2, 1)).has_value());
  EXPECT_TRUE(module_membership(V({"0", "0"}), gb({}, 2, 1)).has_value());
}

TEST(Buchberger, OrdersAgreeOnMembership) {
  std::vector<VecPoly> gens = {V({"x1^2 - x2", "x1"}, 2), V({"x2^2", "x1*x2 - 1"}, 2)};
  std::vector<GroebnerOptions> opts(4);
  opts[1].order.monomial = MonomialOrder::lex();
  opts[2].order.position = PositionOrder::TermOverPosition;
  opts[3].order = {MonomialOrder::lex(), PositionOrder::TermOverPosition};
  std::vector<VecPoly> probes = {V({"x1^3 - x1*x2", "x1^2"}, 2), V({"1", "0"}, 2), V({"0", "x1"}, 2),
                                 gens[0] + V({"x2", "0"}, 2)};
  for (const auto& p : probes) {
    std::vector<bool> answers;
    for (const auto& o : opts) {
      auto B = gb(gens, 2, 2, o);
      EXPECT_TRUE(s_vectors_reduce_to_zero(B));
      answers.push_back(module_membership(p, B).has_value());
    }
    EXPECT_TRUE(std::all_of(answers.begin(), answers.end(), [&](bool b) { return b == answers[0]; }));
  }
}

TEST(Membership, Examples) {
  auto one = gb({V({"x1^2 + 1"})}, 1, 1);
  auto c = module_membership(V({"x1^2 + 1"}), one);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->quotients, (std::vector<MPoly>{P("1")}));

  std::vector<VecPoly> gens = {V({"x1^2"}, 2), V({"x2*x1 - 1"}, 2)};
  auto r = module_membership(V({"1"}, 2), gb(gens, 1, 2));
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->wrt_original);
  EXPECT_EQ(r->quotients, (std::vector<MPoly>{P("x2^2", 2), P("-x1*x2 - 1", 2)}));
  EXPECT_EQ(expand_combination(r->quotients, gens, 1, 2), V({"1"}, 2));

  EXPECT_FALSE(module_membership(V({"1", "0"}), gb({V({"x1", "0"}), V({"0", "1"})}, 2, 1)));
}

TEST(Membership, CofactorsExpandExactly) {
  Rng rng(17);
  RandomShape shape{2, 2, 3, 4};
  for (int t = 0; t < 40; ++t) {
    std::vector<VecPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_vecpoly(rng, shape, 2));
    auto B = gb(gens, 2, 2);
    VecPoly target = random_mpoly(rng, shape) * gens[0] + random_mpoly(rng, shape) * gens[2];
    auto c = module_membership(target, B);
    ASSERT_TRUE(c);
    EXPECT_EQ(expand_combination(c->quotients, gens, 2, 2), target);
    for (std::size_t j = 0; j < B.size(); ++j) {
      EXPECT_EQ(expand_combination(B.cofactors(j), gens, 2, 2), B.generators()[j]);
    }
  }
}

TEST(Intersection, Examples) {
  auto x = std::vector<VecPoly>{V({"x1"})};
  auto x2 = std::vector<VecPoly>{V({"x1^2"})};
  EXPECT_EQ(module_intersect(x, x2, 1, 1), x2);
  std::vector<VecPoly> m = {V({"x1", "1"}), V({"0", "x1^2"})};
  auto mm = module_intersect(m, m, 2, 1);
  EXPECT_EQ(gb(mm, 2, 1).generators(), gb(m, 2, 1).generators());
}

TEST(Intersection, ElementsLieInBothModules) {
  std::vector<VecPoly> a = {V({"x1", "x2"}, 2)}, b = {V({"x2", "0"}, 2), V({"0", "x1"}, 2)};
  auto ab = module_intersect(a, b, 2, 2);
  auto Ba = gb(a, 2, 2), Bb = gb(b, 2, 2);
  ASSERT_FALSE(ab.empty());
  for (const auto& v : ab) {
    EXPECT_TRUE(module_membership(v, Ba));
    EXPECT_TRUE(module_membership(v, Bb));
  }
  // x1 x2 (x1, x2) is in both.
  EXPECT_TRUE(module_membership(V({"x1^2*x2", "x1*x2^2"}, 2), gb(ab, 2, 2)));
}

TEST(BasisDump, JsonRoundTrip) {
  auto B = gb({V({"x1^2 - x2", "x1"}, 2), V({"x2^2", "i*x1*x2 - 1"}, 2)}, 2, 2);
  auto back = json::basis_from_json(json::to_json(B));
  EXPECT_EQ(back, B);
  EXPECT_TRUE(back.has_cofactors());
  EXPECT_EQ(back.original(), B.original());
  EXPECT_THROW(json::basis_from_json(nlohmann::json::parse(R"({"rank": 2})")), InvalidInput);
}

TEST(OracleAgreement, SmallRandomModules) {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    RandomShape shape{static_cast<std::size_t>(rng.integer(1, 2)), 2, 2, 3};
    std::size_t rank = static_cast<std::size_t>(rng.integer(1, 2));
    std::vector<VecPoly> gens;
    for (long k = rng.integer(1, 3); k > 0; --k) gens.push_back(random_vecpoly(rng, shape, rank));
    VecPoly target = rng.coin() ? random_mpoly(rng, shape) * gens[0] : random_vecpoly(rng, shape, rank);
    auto B = gb(gens, rank, shape.nvars);
    auto c = module_membership(target, B);
    unsigned bound = 0;
    for (const auto& g : gens) bound = std::max<unsigned>(bound, g.degree());
    bound += target.degree();
    if (c) {
      for (const auto& q : c->quotients) bound = std::max<unsigned>(bound, q.degree());
      EXPECT_EQ(expand_combination(c->quotients, gens, rank, shape.nvars), target);
      EXPECT_TRUE(linear_membership(target, gens, bound).has_value());
    } else {
      EXPECT_FALSE(linear_membership(target, gens, bound).has_value());
      EXPECT_FALSE(linear_membership(target, gens, bound + 1).has_value());
    }
  }
}

}  // namespace
}  // namespace qnss
