#include "qnss/quat_nss.hpp"

#include <mutex>

namespace qnss {

struct QuatLeftIdeal::Cache {
  std::mutex mutex;
  std::optional<ModuleBasis> basis;
};

QuatLeftIdeal::QuatLeftIdeal(std::size_t nvars, std::vector<QPoly> generators, GroebnerOptions options)
    : nvars_(nvars), gens_(std::move(generators)), options_(std::move(options)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.nvars() != nvars_) throw ShapeError("generator lives in a different ring");
  }
  options_.track_cofactors = true;
}

QuatLeftIdeal::QuatLeftIdeal(std::size_t nvars, std::vector<QPoly> generators, ModuleBasis basis)
    : QuatLeftIdeal(nvars, std::move(generators), GroebnerOptions{basis.order()}) {
  if (!basis.has_cofactors() || basis.rank() != 4 || basis.nvars() != nvars_ ||
      basis.original() != module_generators()) {
    throw InvalidInput("precomputed basis does not belong to these generators");
  }
  cache_->basis = std::move(basis);
}

std::vector<VecPoly> QuatLeftIdeal::module_generators() const {
  std::vector<VecPoly> out;
  out.reserve(4 * gens_.size());
  for (const auto& g : gens_) {
    for (std::size_t u = 0; u < 4; ++u) out.push_back(quat_components(g.scaled_left(QuatQ::unit(u))));
  }
  return out;
}

const ModuleBasis& QuatLeftIdeal::basis() const {
  if (!cache_) throw InvalidInput("empty ideal handle");
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = buchberger_module(module_generators(), 4, nvars_, options_);
  return *cache_->basis;
}

bool QuatLeftIdeal::basis_ready() const {
  if (!cache_) return false;
  std::lock_guard lock(cache_->mutex);
  return cache_->basis.has_value();
}

bool QuatLeftIdeal::is_unit() const { return basis().is_unit_module(); }

std::optional<std::vector<QPoly>> quat_membership(const QPoly& f, const QuatLeftIdeal& I) {
  if (f.nvars() != I.nvars()) throw ShapeError("polynomial lives in a different ring");
  const std::size_t m = I.generators().size();
  std::vector<QPoly> h(m, QPoly(I.nvars()));
  if (f.is_zero()) return h;
  auto cert = module_membership(quat_components(f), I.basis(), true);
  if (!cert) return std::nullopt;
  // f = sum_{i,u} r_{iu} (u g_i) with real central r_{iu}, so h_i = sum_u r_{iu} u.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t u = 0; u < 4; ++u) {
      const MPoly& r = cert->quotients[4 * i + u];
      if (r.is_zero()) continue;
      if (!is_real(r)) throw InternalError("non-real quotient in the component encoding");
      h[i] += quat_from_real(r).scaled_right(QuatQ::unit(u));
    }
  }
  return h;
}

bool contains(const QuatLeftIdeal& I, const QPoly& f) { return quat_membership(f, I).has_value(); }

MatLeftIdeal embed_left_ideal(const QuatLeftIdeal& I) {
  std::vector<MatPoly> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(phi_embed(g));
  return MatLeftIdeal(2, I.nvars(), std::move(gens), I.options());
}

QuatQ direction_to_quaternion(const GaussQ& u, const GaussQ& v) {
  // J (v_re + v_im i) = v_re J - v_im K.
  return {u.re(), u.im(), v.re(), -v.im()};
}

GoodPoint directional_to_good_point(const DirectionalPoint& p) {
  if (p.v().size() != 2) throw ShapeError("direction must have length 2");
  QuatQ b = direction_to_quaternion(p.v()[0], p.v()[1]);
  QuatQ inv = b.inverse();
  std::vector<QuatQ> a;
  a.reserve(p.a().size());
  for (const auto& c : p.a()) a.push_back(b * QuatQ::from_complex(c) * inv);
  return GoodPoint(std::move(a));
}

QuatDecision decide_quat_vanishing(const QPoly& f, const QuatLeftIdeal& I, const DecisionConfig& config) {
  if (f.nvars() != I.nvars()) throw ShapeError("polynomial lives in a different ring");
  QuatDecision out;
  out.matrix = decide_directional_vanishing(phi_embed(f), embed_left_ideal(I), config);
  if (out.matrix.witness) {
    GoodPoint a = directional_to_good_point(*out.matrix.witness);
    for (const auto& g : I.generators()) {
      if (!eval_quat(g, a).is_zero()) throw InternalError("converted witness is not a zero of the ideal");
    }
    if (eval_quat(f, a).is_zero()) throw InternalError("converted witness does not refute f");
    out.witness = std::move(a);
  }
  return out;
}

bool QuatPowerCertificate::identity_holds() const {
  if (u.size() != static_cast<std::size_t>(N) + 1) return false;
  QPoly bf = f.scaled_left(b);
  QPoly power = QPoly::constant(f.nvars(), QuatQ(1));
  QPoly sum(f.nvars());
  for (unsigned k = 0; k <= N; ++k) {
    if (!u[k].is_zero()) sum += u[k] * power;
    if (k < N) power = power * bf;
  }
  return sum == power;
}

bool QuatPowerCertificate::verify() const {
  if (!identity_holds() || h.size() != u.size()) return false;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (h[k].size() != generators.size()) return false;
    QPoly s(f.nvars());
    for (std::size_t i = 0; i < generators.size(); ++i) s += h[k][i] * generators[i];
    if (s != u[k]) return false;
  }
  return true;
}

std::optional<QuatPowerCertificate> quat_power_certificate(const QPoly& f, const QuatQ& b, const QuatLeftIdeal& I) {
  if (f.nvars() != I.nvars()) throw ShapeError("polynomial lives in a different ring");
  MatPoly phib = phi_embed(QPoly::constant(0, b));
  GaussMatrix A = {{phib(0, 0).constant_term(), phib(0, 1).constant_term()},
                   {phib(1, 0).constant_term(), phib(1, 1).constant_term()}};
  auto mc = power_certificate(phi_embed(f), A, embed_left_ideal(I));
  if (!mc) return std::nullopt;
  QuatPowerCertificate out;
  out.b = b;
  out.N = mc->N;
  out.f = f;
  out.generators = I.generators();
  const std::size_t m = I.generators().size();
  // L_k multiplies (AF)^{N-k}; u_j multiplies (bf)^j.
  for (unsigned j = 0; j <= mc->N; ++j) {
    const unsigned k = mc->N - j;
    out.u.push_back(phi_decompose(mc->L[k]).first);
    std::vector<QPoly> row;
    for (std::size_t i = 0; i < m; ++i) row.push_back(phi_decompose(mc->H[k][i]).first);
    out.h.push_back(std::move(row));
  }
  if (!out.verify()) throw InternalError("projected quaternionic certificate failed verification");
  return out;
}

Witness semiprime_witness_quat(const QuatLeftIdeal& I, const QPoly& a) {
  if (contains(I, a)) return Witness::NoViolation;
  VecPoly comps = quat_components(a);
  for (std::size_t u = 0; u < 4; ++u) {
    if (comps[u].is_zero()) continue;
    if (!contains(I, quat_from_real(comps[u]) * a)) return Witness::NoViolation;
  }
  return Witness::Violation;
}

Witness prime_pair_quat(const QuatLeftIdeal& I, const MPoly& r, const QPoly& a) {
  if (!is_real(r)) throw InvalidInput("r must have real coefficients");
  QPoly rq = quat_from_real(r);
  if (!contains(I, rq * a)) return Witness::NoViolation;
  if (contains(I, rq) || contains(I, a)) return Witness::NoViolation;
  return Witness::Violation;
}

Witness completely_prime_pair_quat(const QuatLeftIdeal& I, const QPoly& a, const QPoly& b) {
  if (!contains(I, a * b)) return Witness::NoViolation;
  for (const auto& g : I.generators()) {
    if (!contains(I, g * b)) return Witness::NoViolation;
  }
  if (contains(I, a) || contains(I, b)) return Witness::NoViolation;
  return Witness::Violation;
}

Witness completely_semiprime_witness(const QuatLeftIdeal& I, const QPoly& a) {
  if (contains(I, a)) return Witness::NoViolation;
  if (!contains(I, a * a)) return Witness::NoViolation;
  for (const auto& g : I.generators()) {
    if (!contains(I, g * a)) return Witness::NoViolation;
  }
  return Witness::Violation;
}

QuatLeftIdeal conjugate_intersection(std::span<const VecPoly> N, std::size_t nvars, const GroebnerOptions& options) {
  for (const auto& v : N) {
    if (v.rank() != 4 || v.nvars() != nvars) throw ShapeError("expected rank-4 component vectors");
  }
  GroebnerOptions plain = options;
  plain.track_cofactors = false;
  std::vector<VecPoly> acc(N.begin(), N.end());
  for (std::size_t unit = 1; unit < 4; ++unit) {
    std::vector<VecPoly> shifted;
    for (const auto& v : N) shifted.push_back(left_unit_multiple(unit, v));
    acc = module_intersect(acc, shifted, 4, nvars, plain);
  }
  std::vector<QPoly> gens;
  for (const auto& v : acc) gens.push_back(quat_from_components(v));
  return QuatLeftIdeal(nvars, std::move(gens), options);
}

bool closed_under_units(std::span<const VecPoly> module, std::size_t nvars) {
  GroebnerOptions plain;
  plain.track_cofactors = false;
  std::vector<VecPoly> gens(module.begin(), module.end());
  ModuleBasis gb = buchberger_module(gens, 4, nvars, plain);
  for (const auto& v : module) {
    for (std::size_t unit = 1; unit < 4; ++unit) {
      if (!divide_with_quotients(left_unit_multiple(unit, v), gb).remainder.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace qnss
