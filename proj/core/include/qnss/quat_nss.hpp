#pragma once

// Left ideals of H[x] = H ⊗ Q[x_1..x_d] with central variables. Membership
// runs on the rank-4 component encoding over Q[x]: the ideal generated by
// g_1..g_m corresponds to the submodule spanned by the components of
// u g_i, u in {1, I, J, K}. Vanishing questions go through the embedding
// phi into M_2(Q(i)[x]).

#include <memory>
#include <optional>
#include <vector>

#include "qnss/embed.hpp"
#include "qnss/matrix_nss.hpp"

namespace qnss {

class QuatLeftIdeal {
 public:
  QuatLeftIdeal() = default;
  QuatLeftIdeal(std::size_t nvars, std::vector<QPoly> generators, GroebnerOptions options = {});
  /// Uses a precomputed basis whose original generators are module_generators().
  QuatLeftIdeal(std::size_t nvars, std::vector<QPoly> generators, ModuleBasis basis);

  std::size_t nvars() const { return nvars_; }
  const std::vector<QPoly>& generators() const { return gens_; }
  const GroebnerOptions& options() const { return options_; }

  /// Components of u g_i at index 4 i + u.
  std::vector<VecPoly> module_generators() const;
  const ModuleBasis& basis() const;
  bool basis_ready() const;
  /// True iff 1 lies in the ideal.
  bool is_unit() const;

 private:
  struct Cache;
  std::size_t nvars_ = 0;
  std::vector<QPoly> gens_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

/// h_1..h_m with sum h_i g_i == f, or nullopt.
std::optional<std::vector<QPoly>> quat_membership(const QPoly& f, const QuatLeftIdeal& I);
bool contains(const QuatLeftIdeal& I, const QPoly& f);

/// The left ideal of M_2(Q(i)[x]) generated by phi(g_1), ..., phi(g_m).
MatLeftIdeal embed_left_ideal(const QuatLeftIdeal& I);

/// b = u + J v for a direction (u, v) in Q(i)^2.
QuatQ direction_to_quaternion(const GaussQ& u, const GaussQ& v);
/// a_l = b c_l b^{-1} for the good point attached to a directional zero (c, (u, v)).
GoodPoint directional_to_good_point(const DirectionalPoint& p);

struct QuatDecision {
  DecisionOutcome matrix;          // the decision for phi(f) and the embedded ideal
  std::optional<GoodPoint> witness;  // g_i(a) = 0 for all i and f(a) != 0
  Verdict verdict() const { return matrix.verdict; }
};

QuatDecision decide_quat_vanishing(const QPoly& f, const QuatLeftIdeal& I, const DecisionConfig& config = {});

/// (bf)^N = sum_k u_k (bf)^k with u_k = sum_i h[k][i] g_i.
struct QuatPowerCertificate {
  QuatQ b;
  unsigned N = 0;
  std::vector<QPoly> u;                 // u_0 .. u_N
  std::vector<std::vector<QPoly>> h;    // h[k][i]
  std::vector<QPoly> generators;
  QPoly f;

  bool identity_holds() const;
  bool verify() const;
};

/// Runs the matrix certificate with A = phi(b) and keeps the phi-part of
/// each L_k. Throws InternalError if the projected identity fails.
std::optional<QuatPowerCertificate> quat_power_certificate(const QPoly& f, const QuatQ& b, const QuatLeftIdeal& I);

/// Violation iff a_u a lies in I for all four real components a_u of a while a does not.
Witness semiprime_witness_quat(const QuatLeftIdeal& I, const QPoly& a);
/// Violation iff r a lies in I while neither r nor a does. r must be real.
Witness prime_pair_quat(const QuatLeftIdeal& I, const MPoly& r, const QPoly& a);
/// Violation iff a b and every g_i b lie in I while neither a nor b does.
Witness completely_prime_pair_quat(const QuatLeftIdeal& I, const QPoly& a, const QPoly& b);
/// Violation iff a^2 and every g_i a lie in I while a does not.
Witness completely_semiprime_witness(const QuatLeftIdeal& I, const QPoly& a);

/// The largest left ideal inside the rank-4 module N, namely
/// N ∩ IN ∩ JN ∩ KN, as a quaternionic left ideal.
QuatLeftIdeal conjugate_intersection(std::span<const VecPoly> N, std::size_t nvars, const GroebnerOptions& options = {});

/// Left-ideal closure of an encoded module: I M, J M, K M are inside M.
bool closed_under_units(std::span<const VecPoly> module, std::size_t nvars);

}  // namespace qnss
