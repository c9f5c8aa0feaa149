#pragma once

// Brute-force validators that share no code with the Gröbner engine:
// degree-bounded membership by exact linear algebra, directional-zero
// sampling, refutation search and random instance generation.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "qnss/points.hpp"

namespace qnss {

/// Seeded generator with its own integer mapping so that streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with |p| <= height and 1 <= q <= height.
  Rational rational(long height);
  GaussQ gauss(long height);
  QuatQ quat(long height);
  bool coin() { return integer(0, 1) == 1; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct SampleConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 256;
  long height = 10;
  /// Leading portion of the trials spent on the small Gaussian grid
  /// {0, ±1, ±i, ±1±i, ±2, ±2i, ±1/2}^d.
  bool grid = true;
};

namespace linalg {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(GaussMatrix& m, std::size_t cols);
/// Basis of {x : m x = 0}.
std::vector<GaussVector> kernel(GaussMatrix m, std::size_t cols);
/// Some x with m x = b, or nullopt.
std::optional<GaussVector> solve(GaussMatrix m, const GaussVector& b, std::size_t cols);

}  // namespace linalg

/// Quotients q_j with deg q_j <= bound and sum q_j g_j = target, found by
/// coefficient matching. Nullopt means no solution at this bound.
std::optional<std::vector<MPoly>> linear_membership(const VecPoly& target, std::span<const VecPoly> gens,
                                                    unsigned bound);

/// a_l = alpha_l + beta_l q. Always good: the coordinates share one axis.
GoodPoint make_good_point(const QuatQ& q, std::span<const Rational> alpha, std::span<const Rational> beta);
GoodPoint sample_good_point(Rng& rng, std::size_t d, long height);

/// Points a (grid first, then seeded random) with a nonzero common kernel
/// of all G_i(a); one DirectionalPoint per kernel basis vector.
std::vector<DirectionalPoint> sample_directional_zeros(std::span<const MatPoly> gens, std::size_t n,
                                                       std::size_t nvars, const SampleConfig& cfg);
/// First sampled zero (a, v) with F(a) v != 0.
std::optional<DirectionalPoint> refute_by_sampling(const MatPoly& F, std::span<const MatPoly> gens,
                                                   const SampleConfig& cfg);

/// The sequence of sample points used by the functions above.
std::vector<GaussVector> sample_points(std::size_t nvars, const SampleConfig& cfg);

/// Random instances for property tests.
struct RandomShape {
  std::size_t nvars = 2;
  unsigned max_degree = 3;
  std::size_t max_terms = 3;
  long height = 5;
};
MPoly random_mpoly(Rng& rng, const RandomShape& shape, bool real = false);
QPoly random_qpoly(Rng& rng, const RandomShape& shape);
VecPoly random_vecpoly(Rng& rng, const RandomShape& shape, std::size_t rank);
MatPoly random_matpoly(Rng& rng, const RandomShape& shape, std::size_t n);

/// All monomials in nvars variables of total degree <= bound, ascending by degree.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound);

}  // namespace qnss
