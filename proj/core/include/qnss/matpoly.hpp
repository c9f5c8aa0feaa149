#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qnss/polynomial.hpp"

namespace qnss {

/// Element of a free module R^k over R = Q(i)[x_1..x_v].
class VecPoly {
 public:
  VecPoly() = default;
  VecPoly(std::size_t rank, std::size_t nvars) : nvars_(nvars), c_(rank, MPoly(nvars)) {}
  explicit VecPoly(std::vector<MPoly> components);

  std::size_t rank() const { return c_.size(); }
  std::size_t nvars() const { return nvars_; }
  const MPoly& operator[](std::size_t k) const { return c_[k]; }
  MPoly& operator[](std::size_t k) { return c_[k]; }
  const std::vector<MPoly>& components() const { return c_; }
  bool is_zero() const;
  Monomial::Exponent degree() const;

  VecPoly& operator+=(const VecPoly& o);
  VecPoly& operator-=(const VecPoly& o);
  friend VecPoly operator+(VecPoly a, const VecPoly& b) { return a += b; }
  friend VecPoly operator-(VecPoly a, const VecPoly& b) { return a -= b; }
  friend VecPoly operator*(const MPoly& p, const VecPoly& v);
  friend bool operator==(const VecPoly& a, const VecPoly& b) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<MPoly> c_;
};

/// n x n matrix with MPoly entries, all in one ring.
class MatPoly {
 public:
  MatPoly() = default;
  MatPoly(std::size_t n, std::size_t nvars);
  /// Row-major entries; entries.size() must be n*n.
  MatPoly(std::size_t n, std::vector<MPoly> entries);
  static MatPoly from_rows(const std::vector<std::vector<MPoly>>& rows);

  static MatPoly identity(std::size_t n, std::size_t nvars);
  static MatPoly scalar(std::size_t n, const MPoly& s);
  /// Coordinate matrix E_pq (0-based).
  static MatPoly unit(std::size_t n, std::size_t nvars, std::size_t p, std::size_t q);
  static MatPoly constant(std::size_t n, std::size_t nvars, const std::vector<GaussQ>& row_major);

  std::size_t n() const { return n_; }
  std::size_t nvars() const { return nvars_; }
  const MPoly& operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }
  MPoly& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
  const std::vector<MPoly>& entries() const { return e_; }

  bool is_zero() const;
  bool is_constant() const;
  Monomial::Exponent degree() const;
  VecPoly row(std::size_t r) const;
  void set_row(std::size_t r, const VecPoly& v);

  MatPoly operator-() const;
  MatPoly& operator+=(const MatPoly& o);
  MatPoly& operator-=(const MatPoly& o);
  friend MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
  friend MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
  friend MatPoly operator*(const MatPoly& a, const MatPoly& b);
  friend MatPoly operator*(const MPoly& s, const MatPoly& a);
  MatPoly pow(unsigned exponent) const;
  /// Conjugate transpose; entries are conjugated coefficientwise.
  MatPoly adjoint() const;

  template <class F>
  MatPoly map_entries(F&& f) const {
    MatPoly r;
    r.n_ = n_;
    r.e_.reserve(e_.size());
    for (const auto& p : e_) r.e_.push_back(f(p));
    r.nvars_ = r.e_.empty() ? nvars_ : r.e_.front().nvars();
    return r;
  }

  friend bool operator==(const MatPoly& a, const MatPoly& b) = default;

 private:
  std::size_t n_ = 0;
  std::size_t nvars_ = 0;
  std::vector<MPoly> e_;
};

/// Complex matrix (constant entries) for evaluation results and probes.
using GaussMatrix = std::vector<std::vector<GaussQ>>;
using GaussVector = std::vector<GaussQ>;

GaussMatrix evaluate(const MatPoly& F, std::span<const GaussQ> point);
GaussVector multiply(const GaussMatrix& m, const GaussVector& v);

}  // namespace qnss
