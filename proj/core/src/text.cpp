#include "qnss/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <type_traits>

namespace qnss {

std::vector<std::string> default_variable_names(std::size_t d) {
  std::vector<std::string> out;
  out.reserve(d);
  for (std::size_t k = 1; k <= d; ++k) out.push_back("x" + std::to_string(k));
  return out;
}

SourceOrigin locate(std::string_view text, std::size_t offset, SourceOrigin origin) {
  SourceOrigin at = origin;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++at.line;
      at.column = 1;
    } else {
      ++at.column;
    }
  }
  return at;
}

namespace {

constexpr Monomial::Exponent kMaxExponent = 100000;

template <class C>
class ExprParser {
 public:
  using Poly = Polynomial<C>;

  ExprParser(std::string_view text, std::span<const std::string> vars, SourceOrigin origin)
      : s_(text), origin_(origin), nvars_(vars.size()) {
    for (std::size_t k = 0; k < vars.size(); ++k) by_length_.emplace_back(vars[k], k);
    std::stable_sort(by_length_.begin(), by_length_.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  }

  Poly parse_whole() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

  MatPoly parse_matrix(std::optional<std::size_t> expected) {
    static_assert(std::is_same_v<C, GaussQ>);
    std::vector<std::vector<MPoly>> rows;
    expect('[');
    do {
      expect('[');
      std::vector<MPoly> row;
      do {
        row.push_back(expr());
      } while (accept(','));
      expect(']');
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(']');
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "' after matrix");
    const std::size_t n = rows.size();
    for (const auto& r : rows) {
      if (r.size() != n) fail_at(0, "matrix must be square");
    }
    if (expected && *expected != n) {
      fail_at(0, "expected a " + std::to_string(*expected) + " x " + std::to_string(*expected) + " matrix");
    }
    MatPoly m(n, nvars_);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    SourceOrigin loc = locate(s_, at, origin_);
    throw SyntaxError(msg, loc.line, loc.column);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly sum(nvars_);
    char c = peek();
    bool negate = false;
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    Poly t = term();
    sum = negate ? -t : t;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly u = term();
      if (c == '+') {
        sum += u;
      } else {
        sum -= u;
      }
    }
    return sum;
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '_';
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * factor();
      } else if (starts_factor(c)) {
        p = p * factor();
      } else {
        break;
      }
    }
    return p;
  }

  Poly factor() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      // No whitespace skipping here: exponents are written tight.
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) fail_at(start, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(nvars_, C(number()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string text(s_.substr(start, pos_ - start));
    if (pos_ < s_.size() && s_[pos_] == '/') {
      std::size_t slash = pos_++;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) fail_at(slash + 1, "expected a denominator");
      std::string den(s_.substr(dstart, pos_ - dstart));
      if (mpz_class(den, 10) == 0) fail_at(dstart, "zero denominator");
      text += "/" + den;
    }
    return parse_rational(text);
  }

  Poly identifier() {
    std::size_t start = pos_;
    std::string_view rest = s_.substr(pos_);
    for (const auto& [name, index] : by_length_) {
      if (!rest.starts_with(name)) continue;
      std::size_t end = pos_ + name.size();
      if (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) continue;
      pos_ = end;
      return Poly::variable(nvars_, index);
    }
    char u = s_[pos_];
    bool unit_like = u == 'i' || u == 'I' || u == 'J' || u == 'K';
    bool trailing_digit = pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
    if (unit_like && !trailing_digit) {
      ++pos_;
      if constexpr (std::is_same_v<C, GaussQ>) {
        if (u == 'J' || u == 'K') fail_at(start, std::string("quaternion unit ") + u + " is not allowed here");
        return Poly::constant(nvars_, GaussQ::i());
      } else {
        std::size_t idx = (u == 'i' || u == 'I') ? 1 : (u == 'J' ? 2 : 3);
        return Poly::constant(nvars_, QuatQ::unit(idx));
      }
    }
    std::size_t end = pos_;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    fail_at(start, "unknown variable '" + std::string(s_.substr(start, end - start)) + "'");
  }

  std::string_view s_;
  SourceOrigin origin_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, std::size_t>> by_length_;
};

// Sign and magnitude text of a coefficient. `unit` is true when the
// magnitude is exactly 1 (so it can be left out in front of a monomial).
struct CoefText {
  bool negative = false;
  std::string body;
  bool unit = false;
  bool compound = false;  // parenthesized
};

std::string abs_rational(const Rational& r) { return to_string(Rational(abs(r))); }

CoefText single_component(const Rational& r, const char* unit_name) {
  CoefText t;
  t.negative = sgn(r) < 0;
  bool magnitude_one = abs(r) == 1;
  if (unit_name[0] == '\0') {
    t.body = abs_rational(r);
    t.unit = magnitude_one;
  } else {
    t.body = magnitude_one ? std::string(unit_name) : abs_rational(r) + unit_name;
  }
  return t;
}

CoefText compound(std::span<const Rational> comps, std::span<const char* const> names) {
  CoefText t;
  t.compound = true;
  std::string s = "(";
  bool first = true;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (sgn(comps[k]) == 0) continue;
    if (sgn(comps[k]) < 0) {
      s += '-';
    } else if (!first) {
      s += '+';
    }
    bool one = abs(comps[k]) == 1;
    if (names[k][0] == '\0') {
      s += abs_rational(comps[k]);
    } else {
      if (!one) s += abs_rational(comps[k]);
      s += names[k];
    }
    first = false;
  }
  t.body = s + ")";
  return t;
}

CoefText coef_text(const GaussQ& z) {
  static constexpr const char* kNames[2] = {"", "i"};
  if (z.is_real()) return single_component(z.re(), kNames[0]);
  if (sgn(z.re()) == 0) return single_component(z.im(), kNames[1]);
  Rational comps[2] = {z.re(), z.im()};
  return compound(comps, kNames);
}

CoefText coef_text(const QuatQ& q) {
  static constexpr const char* kNames[4] = {"", "I", "J", "K"};
  int nonzero = 0;
  std::size_t which = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(q[k]) != 0) {
      ++nonzero;
      which = k;
    }
  }
  if (nonzero == 0) return single_component(Rational(0), kNames[0]);
  if (nonzero == 1) return single_component(q[which], kNames[which]);
  Rational comps[4] = {q[0], q[1], q[2], q[3]};
  return compound(comps, kNames);
}

template <class C>
std::string format_generic(const Polynomial<C>& p, std::span<const std::string> vars) {
  if (p.nvars() != vars.size()) throw ShapeError("variable names do not match the ring");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    CoefText t = coef_text(c);
    if (first) {
      if (t.negative) out += '-';
    } else {
      out += t.negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += t.body;
    } else if (t.unit) {
      out += format_monomial(m, vars);
    } else {
      out += t.body + "*" + format_monomial(m, vars);
    }
  }
  return out;
}

template <class C>
C parse_scalar(std::string_view text) {
  ExprParser<C> parser(text, {}, {});
  Polynomial<C> p = parser.parse_whole();
  return p.constant_term();
}

}  // namespace

MPoly parse_mpoly(std::string_view text, std::span<const std::string> vars, SourceOrigin origin) {
  return ExprParser<GaussQ>(text, vars, origin).parse_whole();
}

QPoly parse_qpoly(std::string_view text, std::span<const std::string> vars, SourceOrigin origin) {
  return ExprParser<QuatQ>(text, vars, origin).parse_whole();
}

MatPoly parse_matpoly(std::string_view text, std::span<const std::string> vars, std::optional<std::size_t> n,
                      SourceOrigin origin) {
  return ExprParser<GaussQ>(text, vars, origin).parse_matrix(n);
}

GaussQ parse_gauss(std::string_view text) { return parse_scalar<GaussQ>(text); }
QuatQ parse_quat(std::string_view text) { return parse_scalar<QuatQ>(text); }

std::string format_monomial(const Monomial& m, std::span<const std::string> vars) {
  if (m.nvars() != vars.size()) throw ShapeError("variable names do not match the monomial");
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

std::string format_poly(const MPoly& p, std::span<const std::string> vars) { return format_generic(p, vars); }
std::string format_poly(const QPoly& p, std::span<const std::string> vars) { return format_generic(p, vars); }

std::string format_matrix(const MatPoly& m, std::span<const std::string> vars) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.n(); ++r) {
    if (r) out += ", ";
    out += '[';
    for (std::size_t c = 0; c < m.n(); ++c) {
      if (c) out += ", ";
      out += format_poly(m(r, c), vars);
    }
    out += ']';
  }
  return out + "]";
}

std::string format_scalar(const GaussQ& z) { return format_poly(MPoly::constant(0, z), {}); }
std::string format_scalar(const QuatQ& q) { return format_poly(QPoly::constant(0, q), {}); }

}  // namespace qnss
