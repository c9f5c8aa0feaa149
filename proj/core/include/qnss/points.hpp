#pragma once

#include <vector>

#include "qnss/matpoly.hpp"

namespace qnss {

/// Tuple of pairwise commuting quaternions. Checked on construction.
class GoodPoint {
 public:
  /// Throws InvalidInput when two coordinates do not commute.
  explicit GoodPoint(std::vector<QuatQ> coordinates);

  std::size_t dimension() const { return a_.size(); }
  const QuatQ& operator[](std::size_t l) const { return a_[l]; }
  const std::vector<QuatQ>& coordinates() const { return a_; }

  friend bool operator==(const GoodPoint&, const GoodPoint&) = default;

 private:
  std::vector<QuatQ> a_;
};

/// Pair (a, v) with a in Q(i)^d and v in Q(i)^n nonzero.
class DirectionalPoint {
 public:
  /// Throws InvalidInput when v is zero.
  DirectionalPoint(GaussVector a, GaussVector v);

  const GaussVector& a() const { return a_; }
  const GaussVector& v() const { return v_; }

  friend bool operator==(const DirectionalPoint&, const DirectionalPoint&) = default;

 private:
  GaussVector a_;
  GaussVector v_;
};

/// f(a) = sum c_I a^I with coefficients multiplied on the left.
QuatQ eval_quat(const QPoly& f, const GoodPoint& a);

/// b_l = g(a) a_l g(a)^{-1}. Throws NotInvertible when g(a) = 0.
GoodPoint conjugate_point(const QPoly& g, const GoodPoint& a);

/// F(a) v.
GaussVector eval_matrix(const MatPoly& F, const DirectionalPoint& p);

}  // namespace qnss
