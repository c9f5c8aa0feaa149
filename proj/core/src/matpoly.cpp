#include "qnss/matpoly.hpp"

#include <algorithm>

namespace qnss {

MPoly conj(const MPoly& p) {
  return p.map_coefficients([](const GaussQ& c) { return c.conj(); });
}

QPoly quat_poly_conj(const QPoly& p) {
  return p.map_coefficients([](const QuatQ& c) { return c.conj(); });
}

bool is_real(const MPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_real(); });
}

bool is_real(const QPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_real(); });
}

VecPoly::VecPoly(std::vector<MPoly> components) : c_(std::move(components)) {
  if (!c_.empty()) nvars_ = c_.front().nvars();
  for (const auto& p : c_) {
    if (p.nvars() != nvars_) throw ShapeError("vector components live in different rings");
  }
}

bool VecPoly::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const MPoly& p) { return p.is_zero(); });
}

Monomial::Exponent VecPoly::degree() const {
  Monomial::Exponent d = 0;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

VecPoly& VecPoly::operator+=(const VecPoly& o) {
  if (o.rank() != rank()) throw ShapeError("vector rank mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

VecPoly& VecPoly::operator-=(const VecPoly& o) {
  if (o.rank() != rank()) throw ShapeError("vector rank mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

VecPoly operator*(const MPoly& p, const VecPoly& v) {
  VecPoly r(v);
  for (auto& c : r.c_) c = p * c;
  return r;
}

MatPoly::MatPoly(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), e_(n * n, MPoly(nvars)) {}

MatPoly::MatPoly(std::size_t n, std::vector<MPoly> entries) : n_(n), e_(std::move(entries)) {
  if (e_.size() != n * n) throw ShapeError("matrix entry count is not n*n");
  nvars_ = e_.empty() ? 0 : e_.front().nvars();
  for (const auto& p : e_) {
    if (p.nvars() != nvars_) throw ShapeError("matrix entries live in different rings");
  }
}

MatPoly MatPoly::from_rows(const std::vector<std::vector<MPoly>>& rows) {
  std::size_t n = rows.size();
  std::vector<MPoly> entries;
  entries.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw ShapeError("matrix is not square");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return MatPoly(n, std::move(entries));
}

MatPoly MatPoly::identity(std::size_t n, std::size_t nvars) { return scalar(n, MPoly::constant(nvars, 1)); }

MatPoly MatPoly::scalar(std::size_t n, const MPoly& s) {
  MatPoly m(n, s.nvars());
  for (std::size_t k = 0; k < n; ++k) m(k, k) = s;
  return m;
}

MatPoly MatPoly::unit(std::size_t n, std::size_t nvars, std::size_t p, std::size_t q) {
  MatPoly m(n, nvars);
  m(p, q) = MPoly::constant(nvars, 1);
  return m;
}

MatPoly MatPoly::constant(std::size_t n, std::size_t nvars, const std::vector<GaussQ>& row_major) {
  if (row_major.size() != n * n) throw ShapeError("constant matrix entry count is not n*n");
  MatPoly m(n, nvars);
  for (std::size_t k = 0; k < n * n; ++k) m.e_[k] = MPoly::constant(nvars, row_major[k]);
  return m;
}

bool MatPoly::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const MPoly& p) { return p.is_zero(); });
}

bool MatPoly::is_constant() const {
  return std::all_of(e_.begin(), e_.end(), [](const MPoly& p) { return p.is_constant(); });
}

Monomial::Exponent MatPoly::degree() const {
  Monomial::Exponent d = 0;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

VecPoly MatPoly::row(std::size_t r) const {
  return VecPoly(std::vector<MPoly>(e_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                                    e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_)));
}

void MatPoly::set_row(std::size_t r, const VecPoly& v) {
  if (v.rank() != n_) throw ShapeError("row length mismatch");
  for (std::size_t c = 0; c < n_; ++c) (*this)(r, c) = v[c];
}

MatPoly MatPoly::operator-() const {
  MatPoly r(*this);
  for (auto& p : r.e_) p = -p;
  return r;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
  if (o.n_ != n_ || o.nvars_ != nvars_) throw ShapeError("matrix shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
  if (o.n_ != n_ || o.nvars_ != nvars_) throw ShapeError("matrix shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  if (a.n_ != b.n_ || a.nvars_ != b.nvars_) throw ShapeError("matrix shape mismatch");
  std::size_t n = a.n_;
  MatPoly r(n, a.nvars_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const MPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const MPoly& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

MatPoly operator*(const MPoly& s, const MatPoly& a) {
  if (s.nvars() != a.nvars_) throw ShapeError("scalar lives in a different ring");
  MatPoly r(a);
  for (auto& p : r.e_) p = s * p;
  return r;
}

MatPoly MatPoly::pow(unsigned exponent) const {
  MatPoly result = identity(n_, nvars_);
  MatPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

MatPoly MatPoly::adjoint() const {
  MatPoly r(n_, nvars_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) r(i, j) = conj((*this)(j, i));
  }
  return r;
}

GaussMatrix evaluate(const MatPoly& F, std::span<const GaussQ> point) {
  GaussMatrix m(F.n(), GaussVector(F.n()));
  for (std::size_t i = 0; i < F.n(); ++i) {
    for (std::size_t j = 0; j < F.n(); ++j) m[i][j] = evaluate<GaussQ, GaussQ>(F(i, j), point);
  }
  return m;
}

GaussVector multiply(const GaussMatrix& m, const GaussVector& v) {
  GaussVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw ShapeError("matrix-vector dimension mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!m[i][j].is_zero() && !v[j].is_zero()) out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

}  // namespace qnss
