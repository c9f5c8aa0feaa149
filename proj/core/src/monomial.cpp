#include "qnss/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "qnss/errors.hpp"

namespace qnss {

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t index, Exponent value) {
  degree_ = degree_ - exps_[index] + value;
  exps_[index] = value;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw ShapeError("monomial variable count mismatch");
  Monomial r(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += other.exps_[k];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= other.exps_[k];
  r.degree_ -= other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] > other.exps_[k]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    if (exps_[k] != 0 && other.exps_[k] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    r.exps_[k] = std::max(exps_[k], other.exps_[k]);
    r.degree_ += r.exps_[k];
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t k = a.nvars(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
  }
  return 0;
}

MonomialOrder MonomialOrder::eliminate(std::size_t nvars, std::size_t var) {
  MonomialOrder order;
  order.permutation.push_back(var);
  for (std::size_t k = 0; k < nvars; ++k) {
    if (k != var) order.permutation.push_back(k);
  }
  order.elimination_block = 1;
  return order;
}

namespace {

int grevlex_on(const Monomial& a, const Monomial& b, std::span<const std::size_t> vars) {
  long da = 0;
  long db = 0;
  for (std::size_t v : vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = vars.size(); k-- > 0;) {
    std::size_t v = vars[k];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

int lex_on(const Monomial& a, const Monomial& b, std::span<const std::size_t> vars) {
  for (std::size_t v : vars) {
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (permutation.empty() && elimination_block == 0) {
    if (kind == Kind::Grevlex) return grevlex_compare(a, b);
    for (std::size_t k = 0; k < a.nvars(); ++k) {
      if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
    }
    return 0;
  }
  std::vector<std::size_t> identity;
  std::span<const std::size_t> vars(permutation);
  if (permutation.empty()) {
    identity.resize(a.nvars());
    std::iota(identity.begin(), identity.end(), 0);
    vars = identity;
  }
  std::size_t block = std::min(elimination_block, vars.size());
  if (block > 0) {
    int c = grevlex_on(a, b, vars.subspan(0, block));
    if (c != 0) return c;
  }
  auto rest = vars.subspan(block);
  return kind == Kind::Grevlex ? grevlex_on(a, b, rest) : lex_on(a, b, rest);
}

std::string MonomialOrder::describe() const {
  std::string s = kind == Kind::Grevlex ? "grevlex" : "lex";
  if (!permutation.empty()) {
    s += "[";
    for (std::size_t k = 0; k < permutation.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(permutation[k]);
    }
    s += "]";
  }
  if (elimination_block) s += "/elim" + std::to_string(elimination_block);
  return s;
}

MonomialOrder::Kind parse_order_kind(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::Kind::Grevlex;
  if (name == "lex") return MonomialOrder::Kind::Lex;
  throw InvalidInput("unknown monomial order '" + name + "'");
}

}  // namespace qnss
