#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "qnss/errors.hpp"
#include "qnss/monomial.hpp"
#include "qnss/scalars.hpp"

namespace qnss {

/// Sparse polynomial in central variables with coefficients written on the
/// left of monomials. Terms are kept in descending grevlex order, zero
/// coefficients are never stored. C may be noncommutative (QuatQ): products
/// multiply coefficients in operand order.
template <class C>
class Polynomial {
 public:
  using Coefficient = C;
  using Term = std::pair<Monomial, C>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, C c) { return term(Monomial(nvars), std::move(c)); }
  static Polynomial term(Monomial m, C c) {
    Polynomial p(m.nvars());
    if (!qnss::is_zero(c)) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t index) {
    return term(Monomial::variable(nvars, index), C(1));
  }
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    for (const auto& t : terms) {
      if (t.first.nvars() != nvars) throw ShapeError("term has wrong variable count");
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  Monomial::Exponent degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

  C coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grevlex_compare(t.first, key) > 0;
    });
    if (it != terms_.end() && it->first == m) return it->second;
    return C(0);
  }
  C constant_term() const { return coefficient(Monomial(nvars_)); }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars_);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
    }
    Polynomial r(a.nvars_);
    r.terms_ = std::move(products);
    r.normalize();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// c * this
  Polynomial scaled_left(const C& c) const { return scale(c, true); }
  /// this * c
  Polynomial scaled_right(const C& c) const { return scale(c, false); }
  /// m * this
  Polynomial shifted(const Monomial& m) const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.first = t.first * m;
    return r;
  }

  Polynomial pow(unsigned exponent) const {
    Polynomial result = constant(nvars_, C(1));
    Polynomial base = *this;
    while (exponent) {
      if (exponent & 1u) result *= base;
      exponent >>= 1u;
      if (exponent) base *= base;
    }
    return result;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> Polynomial<decltype(f(std::declval<const C&>()))> {
    using R = decltype(f(std::declval<const C&>()));
    std::vector<typename Polynomial<R>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      R v = f(c);
      if (!qnss::is_zero(v)) out.emplace_back(m, std::move(v));
    }
    return Polynomial<R>::from_sorted(nvars_, std::move(out));
  }

  /// Trusted constructor: terms already sorted, distinct and nonzero.
  static Polynomial from_sorted(std::size_t nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    p.terms_ = std::move(terms);
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw ShapeError("polynomials live in rings with different variable counts");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
      int c;
      if (ia == a.terms_.end()) {
        c = -1;
      } else if (ib == b.terms_.end()) {
        c = 1;
      } else {
        c = grevlex_compare(ia->first, ib->first);
      }
      if (c > 0) {
        r.terms_.push_back(*ia++);
      } else if (c < 0) {
        r.terms_.emplace_back(ib->first, subtract ? C(-ib->second) : ib->second);
        ++ib;
      } else {
        C s = subtract ? C(ia->second - ib->second) : C(ia->second + ib->second);
        if (!qnss::is_zero(s)) r.terms_.emplace_back(ia->first, std::move(s));
        ++ia;
        ++ib;
      }
    }
    return r;
  }

  Polynomial scale(const C& c, bool left) const {
    Polynomial r(nvars_);
    if (qnss::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, v] : terms_) {
      C p = left ? C(c * v) : C(v * c);
      if (!qnss::is_zero(p)) r.terms_.emplace_back(m, std::move(p));
    }
    return r;
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_compare(x.first, y.first) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && qnss::is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && qnss::is_zero(out.back().second)) out.pop_back();
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using MPoly = Polynomial<GaussQ>;
using QPoly = Polynomial<QuatQ>;

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// Complex conjugation of every coefficient.
MPoly conj(const MPoly& p);
/// Quaternion conjugation of every coefficient (involution, reverses products).
QPoly quat_poly_conj(const QPoly& p);

/// True if every coefficient has zero imaginary part.
bool is_real(const MPoly& p);
/// True if every coefficient is a real quaternion.
bool is_real(const QPoly& p);

/// Moves variable k to index new_index[k] in a ring with new_nvars variables.
template <class C>
Polynomial<C> remap_variables(const Polynomial<C>& p, std::size_t new_nvars,
                              std::span<const std::size_t> new_index) {
  if (new_index.size() != p.nvars()) throw ShapeError("variable map has wrong length");
  std::vector<typename Polynomial<C>::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Monomial out(new_nvars);
    for (std::size_t k = 0; k < m.nvars(); ++k) {
      if (m[k] != 0) out.set(new_index[k], out[new_index[k]] + m[k]);
    }
    terms.emplace_back(std::move(out), c);
  }
  return Polynomial<C>::from_terms(new_nvars, std::move(terms));
}

/// Appends `extra` fresh variables after the existing ones.
template <class C>
Polynomial<C> extend_variables(const Polynomial<C>& p, std::size_t extra) {
  std::vector<std::size_t> idx(p.nvars());
  std::iota(idx.begin(), idx.end(), 0);
  return remap_variables(p, p.nvars() + extra, idx);
}

/// Coefficients of var^0, var^1, ... with `var` removed from the ring.
template <class C>
std::vector<Polynomial<C>> split_by_variable(const Polynomial<C>& p, std::size_t var) {
  std::vector<std::vector<typename Polynomial<C>::Term>> buckets;
  for (const auto& [m, c] : p.terms()) {
    std::size_t e = m[var];
    if (buckets.size() <= e) buckets.resize(e + 1);
    std::vector<Monomial::Exponent> ex;
    ex.reserve(m.nvars() - 1);
    for (std::size_t k = 0; k < m.nvars(); ++k) {
      if (k != var) ex.push_back(m[k]);
    }
    buckets[e].emplace_back(Monomial(std::span<const Monomial::Exponent>(ex)), c);
  }
  std::vector<Polynomial<C>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial<C>::from_terms(p.nvars() - 1, std::move(b)));
  return out;
}

template <class T>
T power(const T& base, unsigned exponent) {
  T result(1);
  T b = base;
  while (exponent) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1u;
    if (exponent) b = b * b;
  }
  return result;
}

/// Substitutes the trailing values.size() variables by constants; the
/// result lives in the ring of the leading variables. Constants multiply
/// on the right of the coefficient.
template <class C>
Polynomial<C> specialize_trailing(const Polynomial<C>& p, std::span<const C> values) {
  if (values.size() > p.nvars()) throw ShapeError("too many substitution values");
  std::size_t keep = p.nvars() - values.size();
  std::vector<typename Polynomial<C>::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    C v = c;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (m[keep + k]) v = v * power(values[k], m[keep + k]);
    }
    if (is_zero(v)) continue;
    std::vector<Monomial::Exponent> ex(m.exponents().begin(), m.exponents().begin() + keep);
    terms.emplace_back(Monomial(std::span<const Monomial::Exponent>(ex)), std::move(v));
  }
  return Polynomial<C>::from_terms(keep, std::move(terms));
}

/// Evaluates sum c_I * a_1^{i_1} ... a_d^{i_d} with the coefficient on the left.
template <class C, class T>
T evaluate(const Polynomial<C>& p, std::span<const T> point) {
  if (point.size() != p.nvars()) throw ShapeError("evaluation point has wrong dimension");
  T sum(0);
  for (const auto& [m, c] : p.terms()) {
    T v = T(c);
    for (std::size_t k = 0; k < m.nvars(); ++k) {
      if (m[k]) v = v * power(point[k], m[k]);
    }
    sum += v;
  }
  return sum;
}

}  // namespace qnss
