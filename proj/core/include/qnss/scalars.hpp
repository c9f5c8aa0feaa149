#pragma once

// Exact scalars: arbitrary-precision rationals, Gaussian rationals Q(i) and
// rational quaternions with i^2 = j^2 = k^2 = ijk = -1.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <tuple>

namespace qnss {

using Rational = mpq_class;

/// Serializes as "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);
/// Parses "p" or "p/q" (optional leading '-'); result is canonical.
Rational parse_rational(std::string_view text);

class GaussQ {
 public:
  GaussQ() = default;
  GaussQ(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussQ(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussQ(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussQ i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussQ conj() const { return {re_, -im_}; }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero for zero.
  GaussQ inverse() const;

  GaussQ operator-() const { return {-re_, -im_}; }
  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  GaussQ& operator/=(const GaussQ& o) { return *this *= o.inverse(); }

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

class QuatQ {
 public:
  QuatQ() = default;
  QuatQ(long value) { c_[0] = value; }  // NOLINT(google-explicit-constructor)
  QuatQ(Rational real) { c_[0] = std::move(real); }  // NOLINT(google-explicit-constructor)
  QuatQ(Rational c0, Rational c1, Rational c2, Rational c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
  /// Embeds Q(i) into the quaternions via i -> I.
  static QuatQ from_complex(const GaussQ& z) { return {z.re(), z.im(), 0, 0}; }

  static QuatQ unit(std::size_t index);  // 0 -> 1, 1 -> I, 2 -> J, 3 -> K
  static QuatQ I() { return unit(1); }
  static QuatQ J() { return unit(2); }
  static QuatQ K() { return unit(3); }

  const Rational& operator[](std::size_t index) const { return c_[index]; }
  const std::array<Rational, 4>& components() const { return c_; }

  bool is_zero() const;
  bool is_real() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  bool is_one() const { return c_[0] == 1 && is_real(); }
  /// True when the value lies in the span of 1 and I.
  bool is_complex() const { return sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  GaussQ to_complex() const { return {c_[0], c_[1]}; }

  QuatQ conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  Rational norm_sq() const;
  /// conj(a) / |a|^2. Throws DivisionByZero for zero.
  QuatQ inverse() const;

  QuatQ operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  QuatQ& operator+=(const QuatQ& o);
  QuatQ& operator-=(const QuatQ& o);
  QuatQ& operator*=(const QuatQ& o);
  QuatQ& scale(const Rational& r);

  friend QuatQ operator+(QuatQ a, const QuatQ& b) { return a += b; }
  friend QuatQ operator-(QuatQ a, const QuatQ& b) { return a -= b; }
  friend QuatQ operator*(QuatQ a, const QuatQ& b) { return a *= b; }
  friend bool operator==(const QuatQ& a, const QuatQ& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QuatQ& a, const QuatQ& b) { return !(a == b); }

 private:
  std::array<Rational, 4> c_;
};

/// Recovers (a0, a1, a2, a3) from a using only products with the units:
///   a0 = (a - iai - jaj - kak)/4,   a1 = (jak - ai - ia - kaj)/4,
///   a2 = (kai - aj - ja - iak)/4,   a3 = (iaj - ak - ka - jai)/4.
std::array<Rational, 4> component_by_conjugation(const QuatQ& a);

std::string to_string(const GaussQ& z);
std::string to_string(const QuatQ& q);
std::ostream& operator<<(std::ostream& os, const GaussQ& z);
std::ostream& operator<<(std::ostream& os, const QuatQ& q);

// Small helpers used by the polynomial template.
inline bool is_zero(const GaussQ& z) { return z.is_zero(); }
inline bool is_zero(const QuatQ& q) { return q.is_zero(); }
inline bool is_one(const GaussQ& z) { return z.is_one(); }
inline bool is_one(const QuatQ& q) { return q.is_one(); }

std::size_t hash_value(const Rational& r);

}  // namespace qnss
