#pragma once

// Buchberger's algorithm for submodules of free modules R^k over
// R = Q(i)[x_1..x_v], with cofactor tracking so that every basis element
// (and every membership answer) can be expressed through the original
// generators.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qnss/matpoly.hpp"

namespace qnss {

enum class PositionOrder {
  PositionOverTerm,  // compare positions first (position 0 is largest)
  TermOverPosition,  // compare monomials first, positions break ties
};

struct ModuleOrder {
  MonomialOrder monomial;
  PositionOrder position = PositionOrder::PositionOverTerm;

  /// Returns <0, 0, >0 for the module terms (pa, ma) and (pb, mb).
  int compare(std::size_t pa, const Monomial& ma, std::size_t pb, const Monomial& mb) const;
  std::string describe() const;
  friend bool operator==(const ModuleOrder&, const ModuleOrder&) = default;
};

struct GroebnerOptions {
  ModuleOrder order;
  /// S-pairs whose lcm exceeds this total degree raise ResourceExceeded.
  Monomial::Exponent degree_cap = 40;
  /// Upper bound on the number of S-pairs reduced.
  std::size_t pair_budget = 200000;
  bool track_cofactors = true;
};

namespace detail {
struct BasisData;
}

/// Immutable generating set of a submodule. Copies share storage.
class ModuleBasis {
 public:
  ModuleBasis() = default;

  /// Wraps arbitrary generators without running Buchberger. Division works,
  /// but membership answers are only decisive for Gröbner bases.
  static ModuleBasis from_generators(std::vector<VecPoly> generators, std::size_t rank, std::size_t nvars,
                                     ModuleOrder order = {});
  /// Reassembles a basis from dumped data. cofactors[j] expresses
  /// generators[j] through `original`; pass empty vectors when absent.
  static ModuleBasis assemble(std::vector<VecPoly> generators, std::size_t rank, std::size_t nvars,
                              ModuleOrder order, bool reduced, std::vector<VecPoly> original,
                              std::vector<std::vector<MPoly>> cofactors);

  std::size_t rank() const;
  std::size_t nvars() const;
  std::size_t size() const;
  const std::vector<VecPoly>& generators() const;
  const ModuleOrder& order() const;
  bool reduced() const;
  /// True when the basis contains every unit vector e_0 .. e_{k-1}.
  bool is_unit_module() const;

  bool has_cofactors() const;
  const std::vector<VecPoly>& original() const;
  /// generators()[j] == sum_k cofactors(j)[k] * original()[k].
  const std::vector<MPoly>& cofactors(std::size_t j) const;

  std::size_t leading_position(std::size_t j) const;
  const Monomial& leading_monomial(std::size_t j) const;

  const detail::BasisData& data() const { return *data_; }
  friend bool operator==(const ModuleBasis& a, const ModuleBasis& b);

 private:
  std::shared_ptr<const detail::BasisData> data_;
  friend ModuleBasis buchberger_module(std::span<const VecPoly>, std::size_t, std::size_t,
                                       const GroebnerOptions&);
};

/// Reduced Gröbner basis of the submodule generated by gens.
ModuleBasis buchberger_module(std::span<const VecPoly> gens, std::size_t rank, std::size_t nvars,
                              const GroebnerOptions& options = {});
ModuleBasis buchberger_module(std::span<const VecPoly> gens, const GroebnerOptions& options = {});

struct Division {
  std::vector<MPoly> quotients;  // one per basis generator
  VecPoly remainder;
};

/// v = sum_j quotients[j] * basis[j] + remainder, where no term of the
/// remainder is divisible by a leading term of the basis. Reduces with the
/// first basis element (in basis order) whose leading term divides.
Division divide_with_quotients(const VecPoly& v, const ModuleBasis& basis);

struct MembershipCertificate {
  std::vector<MPoly> quotients;
  bool wrt_original = false;  // quotients index original() rather than generators()
};

/// Nullopt when v is not in the submodule. With to_original, quotients are
/// composed through the cofactors back to the original generators.
std::optional<MembershipCertificate> module_membership(const VecPoly& v, const ModuleBasis& basis,
                                                       bool to_original = true);

/// sum_j quotients[j] * gens[j].
VecPoly expand_combination(std::span<const MPoly> quotients, std::span<const VecPoly> gens, std::size_t rank,
                           std::size_t nvars);

/// Generators of M1 ∩ M2 (reduced basis), via t*M1 + (1-t)*M2 and
/// elimination of the tag variable t.
std::vector<VecPoly> module_intersect(std::span<const VecPoly> m1, std::span<const VecPoly> m2, std::size_t rank,
                                      std::size_t nvars, const GroebnerOptions& options = {});

/// Buchberger's criterion: every S-vector of same-position leading terms
/// reduces to zero modulo the basis.
bool s_vectors_reduce_to_zero(const ModuleBasis& basis);

}  // namespace qnss
