#pragma once

// Left ideals of M_n(R), R = Q(i)[x_1..x_d], through their row modules:
// F lies in M_n(R) G_1 + ... + M_n(R) G_m iff every row of F is an
// R-combination of the rows of the G_i. On top of that: the Rabinowitsch
// extension, telescoped power certificates and the vanishing decision.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qnss/groebner.hpp"
#include "qnss/oracle.hpp"
#include "qnss/points.hpp"

namespace qnss {

class MatLeftIdeal {
 public:
  MatLeftIdeal() = default;
  MatLeftIdeal(std::size_t n, std::size_t nvars, std::vector<MatPoly> generators, GroebnerOptions options = {});
  /// Uses a precomputed row basis (e.g. from a cache). Its original
  /// generators must be exactly row_generators().
  MatLeftIdeal(std::size_t n, std::size_t nvars, std::vector<MatPoly> generators, ModuleBasis basis);

  std::size_t n() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<MatPoly>& generators() const { return gens_; }
  const GroebnerOptions& options() const { return options_; }

  /// Row q of generator i sits at index i * n + q.
  std::vector<VecPoly> row_generators() const;
  /// Reduced Gröbner basis of the row module, computed once on first use.
  const ModuleBasis& row_basis() const;
  bool row_basis_ready() const;
  /// True iff the identity matrix lies in the ideal.
  bool is_unit() const;

 private:
  struct Cache;
  std::size_t n_ = 0;
  std::size_t nvars_ = 0;
  std::vector<MatPoly> gens_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

/// H_1..H_m with sum H_i G_i == F, or nullopt when F is not in the ideal.
std::optional<std::vector<MatPoly>> left_ideal_membership(const MatPoly& F, const MatLeftIdeal& I);
/// Convenience predicate.
bool contains(const MatLeftIdeal& I, const MatPoly& F);

/// sum_i H_i G_i.
MatPoly combine(std::span<const MatPoly> H, std::span<const MatPoly> G, std::size_t n, std::size_t nvars);

/// Ring layout after adjoining y (and, for symbolic A, the entries
/// a_11 .. a_nn): x_1..x_d, y, a_11, a_12, ..., a_nn.
struct ExtendedRing {
  std::size_t base_nvars = 0;
  std::size_t n = 0;
  bool symbolic = false;

  std::size_t y_index() const { return base_nvars; }
  std::size_t a_index(std::size_t p, std::size_t q) const { return base_nvars + 1 + p * n + q; }
  std::size_t nvars() const { return base_nvars + 1 + (symbolic ? n * n : 0); }
  /// Same ring with y removed: x_1..x_d followed by the a_pq.
  std::size_t nvars_without_y() const { return nvars() - 1; }
};

/// The matrix [a_pq] of symbolic entries in a ring of `nvars` variables
/// whose last n*n variables are a_11 .. a_nn.
MatPoly symbolic_matrix(std::size_t n, std::size_t nvars);
MatPoly constant_matrix(const GaussMatrix& A, std::size_t nvars);

struct RabinowitschExtension {
  ExtendedRing ring;
  std::optional<GaussMatrix> A;  // nullopt for symbolic A
  /// A F in the ring without y (x.. or x.., a..).
  MatPoly AF;
  /// Generators G_1..G_m and y (A F) - 1, in the extended ring.
  MatLeftIdeal ideal;
};

/// A == nullopt selects symbolic entries.
RabinowitschExtension rabinowitsch_extend(const MatPoly& F, const MatLeftIdeal& I,
                                          const std::optional<GaussMatrix>& A);

/// (AF)^N = sum_k L_k (AF)^{N-k} with L_k = sum_i H[k][i] G_i. Lives in the
/// ring without y; for symbolic A the a_pq are trailing variables.
struct PowerCertificate {
  ExtendedRing ring;
  unsigned N = 0;
  std::vector<MatPoly> L;                     // L_0 .. L_N
  std::optional<GaussMatrix> A;               // nullopt: uniform in A
  MatPoly AF;
  std::vector<MatPoly> generators;            // G_i lifted to the certificate ring
  std::vector<std::vector<MatPoly>> H;        // H[k][i]

  /// Checks the power identity and L_k == sum_i H[k][i] G_i exactly.
  bool verify() const;
  /// Only the power identity.
  bool identity_holds() const;
  /// Substitutes a concrete A into a uniform certificate.
  PowerCertificate specialize(const GaussMatrix& A) const;
};

/// Telescopes H_1 G_1 + ... + H_m G_m + K (y AF - 1) = 1, given over the
/// extended ring. Throws InvalidInput when that identity fails.
PowerCertificate telescope_certificate(std::span<const MatPoly> H, const MatPoly& K, const RabinowitschExtension& ext,
                                       const MatLeftIdeal& I);

/// Certificate for (AF)^N in I + I(AF) + ... + I(AF)^N, or nullopt when
/// 1 is not in the extended ideal. AF in I short-circuits to N = 1.
std::optional<PowerCertificate> power_certificate(const MatPoly& F, const GaussMatrix& A, const MatLeftIdeal& I);
/// The uniform version over symbolic A (nullopt: no uniform certificate).
std::optional<PowerCertificate> uniform_power_certificate(const MatPoly& F, const MatLeftIdeal& I);

enum class Verdict { ProvedVanishing, RefutedVanishing, Unknown };
std::string to_string(Verdict v);

struct DecisionConfig {
  std::uint64_t seed = 1;
  std::size_t extra_probes = 2;
  std::size_t trials = 256;
  long height = 10;
  GroebnerOptions groebner;
};

struct ProbeRecord {
  GaussMatrix A;
  bool unit = false;  // 1 lies in the extended ideal for this A
};

struct DecisionOutcome {
  Verdict verdict = Verdict::Unknown;
  /// "direct", "symbolic", "probe", "sampling" or "none".
  std::string phase = "none";
  std::optional<PowerCertificate> certificate;
  std::optional<GaussMatrix> refuting_A;
  std::optional<DirectionalPoint> witness;
  std::vector<ProbeRecord> probes;
  std::vector<std::string> notes;
};

/// The fixed probe family: identity, E_11, E_12, ..., E_nn, then seeded dense matrices.
std::vector<GaussMatrix> probe_family(std::size_t n, const DecisionConfig& config);

/// Proves or refutes "F(a) v = 0 at every common directional zero (a, v)".
DecisionOutcome decide_directional_vanishing(const MatPoly& F, const MatLeftIdeal& I,
                                             const DecisionConfig& config = {});

/// v v^* F(a)^*.
GaussMatrix special_A(const DirectionalPoint& p, const MatPoly& F);

enum class Witness { Violation, NoViolation };
std::string to_string(Witness w);

/// Violation iff a_pq A lies in I for every entry a_pq of A while A does not.
Witness semiprime_witness_matrix(const MatLeftIdeal& I, const MatPoly& A);
/// Violation iff a B lies in I while neither a 1 nor B does.
Witness prime_pair_matrix(const MatLeftIdeal& I, const MPoly& a, const MatPoly& B);
/// Violation iff A^2 and every G_i A lie in I while A does not.
Witness completely_semiprime_matrix(const MatLeftIdeal& I, const MatPoly& A);

}  // namespace qnss
