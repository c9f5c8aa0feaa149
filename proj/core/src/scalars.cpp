#include "qnss/scalars.hpp"

#include <ostream>
#include <sstream>

#include "qnss/errors.hpp"

namespace qnss {

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  auto bad = [&]() { return InvalidInput("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() <= start) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!digits_ok(text, true)) throw bad();
    return Rational(mpz_class(std::string(text), 10));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZero();
  Rational r(mpz_class(std::string(num), 10), d);
  r.canonicalize();
  return r;
}

GaussQ GaussQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_real()) return {Rational(1 / re_), Rational(0)};
  Rational n = norm_sq();
  return {re_ / n, -im_ / n};
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  // Real operands dominate in practice; skip the cross terms when possible.
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

QuatQ QuatQ::unit(std::size_t index) {
  QuatQ q;
  q.c_[index] = 1;
  return q;
}

bool QuatQ::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Rational QuatQ::norm_sq() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

QuatQ QuatQ::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm_sq();
  QuatQ r = conj();
  for (auto& c : r.c_) c /= n;
  return r;
}

QuatQ& QuatQ::operator+=(const QuatQ& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

QuatQ& QuatQ::operator-=(const QuatQ& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

QuatQ& QuatQ::scale(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

QuatQ& QuatQ::operator*=(const QuatQ& o) {
  if (o.is_real()) return scale(o.c_[0]);
  if (is_real()) {
    Rational r = c_[0];
    *this = o;
    return scale(r);
  }
  const auto& a = c_;
  const auto& b = o.c_;
  Rational r0 = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  Rational r1 = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  Rational r2 = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  Rational r3 = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  c_ = {std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
  return *this;
}

std::array<Rational, 4> component_by_conjugation(const QuatQ& a) {
  const QuatQ i = QuatQ::I();
  const QuatQ j = QuatQ::J();
  const QuatQ k = QuatQ::K();
  QuatQ a0 = a - i * a * i - j * a * j - k * a * k;
  QuatQ a1 = j * a * k - a * i - i * a - k * a * j;
  QuatQ a2 = k * a * i - a * j - j * a - i * a * k;
  QuatQ a3 = i * a * j - a * k - k * a - j * a * i;
  // Each combination is a real multiple of 4; read off the real part.
  for (const QuatQ* q : {&a0, &a1, &a2, &a3}) {
    if (!q->is_real()) throw InternalError("conjugation identity produced a non-real value");
  }
  const Rational quarter(1, 4);
  return {a0[0] * quarter, a1[0] * quarter, a2[0] * quarter, a3[0] * quarter};
}

std::string to_string(const GaussQ& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

std::string to_string(const QuatQ& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussQ& z) {
  if (z.is_real()) return os << to_string(z.re());
  if (sgn(z.re()) == 0) return os << to_string(z.im()) << 'i';
  os << '(' << to_string(z.re()) << (sgn(z.im()) > 0 ? "+" : "") << to_string(z.im()) << "i)";
  return os;
}

std::ostream& operator<<(std::ostream& os, const QuatQ& q) {
  static constexpr const char* kUnits[4] = {"", "I", "J", "K"};
  int nonzero = 0;
  for (std::size_t k = 0; k < 4; ++k) nonzero += sgn(q[k]) != 0;
  if (nonzero == 0) return os << "0";
  if (nonzero > 1) os << '(';
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(q[k]) == 0) continue;
    if (!first && sgn(q[k]) > 0) os << '+';
    os << to_string(q[k]) << kUnits[k];
    first = false;
  }
  if (nonzero > 1) os << ')';
  return os;
}

std::size_t hash_value(const Rational& r) {
  std::hash<std::string> h;
  return h(r.get_str(16));
}

}  // namespace qnss
