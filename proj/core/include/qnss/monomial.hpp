#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qnss {

/// Exponent vector with one slot per ring variable. Commutative: the ring
/// variables are central in every coefficient domain used here.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t index) const { return exps_[index]; }
  Exponent degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  void set(std::size_t index, Exponent value);

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  boost::container::small_vector<Exponent, 8> exps_;
  Exponent degree_ = 0;
};

/// Graded reverse lexicographic comparison in declaration order
/// (x1 > x2 > ... ). Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// Monomial order over a (possibly permuted) variable list. When
/// elimination_block > 0 the first that many variables of `permutation`
/// form a block compared first (by degree, then reverse lex), and the
/// remaining variables are compared by `kind` only on ties.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex };

  Kind kind = Kind::Grevlex;
  std::vector<std::size_t> permutation;  // empty means declaration order
  std::size_t elimination_block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, {}, 0}; }
  /// Eliminates variable `var` (degree in `var` compared first) over nvars variables.
  static MonomialOrder eliminate(std::size_t nvars, std::size_t var);

  int compare(const Monomial& a, const Monomial& b) const;

  std::string describe() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

MonomialOrder::Kind parse_order_kind(const std::string& name);

}  // namespace qnss
