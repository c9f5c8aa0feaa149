#include "qnss/matrix_nss.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace qnss {

struct MatLeftIdeal::Cache {
  std::mutex mutex;
  std::optional<ModuleBasis> basis;
};

MatLeftIdeal::MatLeftIdeal(std::size_t n, std::size_t nvars, std::vector<MatPoly> generators, GroebnerOptions options)
    : n_(n), nvars_(nvars), gens_(std::move(generators)), options_(std::move(options)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.n() != n_ || g.nvars() != nvars_) throw ShapeError("generator does not match the matrix ring");
  }
  // Certificates need the cofactors.
  options_.track_cofactors = true;
}

MatLeftIdeal::MatLeftIdeal(std::size_t n, std::size_t nvars, std::vector<MatPoly> generators, ModuleBasis basis)
    : MatLeftIdeal(n, nvars, std::move(generators), GroebnerOptions{basis.order()}) {
  if (!basis.has_cofactors() || basis.original() != row_generators() || basis.rank() != n_ ||
      basis.nvars() != nvars_) {
    throw InvalidInput("precomputed basis does not belong to these generators");
  }
  cache_->basis = std::move(basis);
}

std::vector<VecPoly> MatLeftIdeal::row_generators() const {
  std::vector<VecPoly> rows;
  rows.reserve(gens_.size() * n_);
  for (const auto& g : gens_) {
    for (std::size_t q = 0; q < n_; ++q) rows.push_back(g.row(q));
  }
  return rows;
}

const ModuleBasis& MatLeftIdeal::row_basis() const {
  if (!cache_) throw InvalidInput("empty ideal handle");
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = buchberger_module(row_generators(), n_, nvars_, options_);
  return *cache_->basis;
}

bool MatLeftIdeal::row_basis_ready() const {
  if (!cache_) return false;
  std::lock_guard lock(cache_->mutex);
  return cache_->basis.has_value();
}

bool MatLeftIdeal::is_unit() const { return row_basis().is_unit_module(); }

std::optional<std::vector<MatPoly>> left_ideal_membership(const MatPoly& F, const MatLeftIdeal& I) {
  if (F.n() != I.n() || F.nvars() != I.nvars()) throw ShapeError("matrix does not match the ideal's ring");
  const std::size_t n = I.n();
  const std::size_t m = I.generators().size();
  const ModuleBasis& basis = I.row_basis();
  std::vector<MatPoly> H(m, MatPoly(n, I.nvars()));
  for (std::size_t p = 0; p < n; ++p) {
    VecPoly row = F.row(p);
    if (row.is_zero()) continue;
    auto cert = module_membership(row, basis, true);
    if (!cert) return std::nullopt;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t q = 0; q < n; ++q) H[i](p, q) = cert->quotients[i * n + q];
    }
  }
  return H;
}

bool contains(const MatLeftIdeal& I, const MatPoly& F) { return left_ideal_membership(F, I).has_value(); }

MatPoly combine(std::span<const MatPoly> H, std::span<const MatPoly> G, std::size_t n, std::size_t nvars) {
  if (H.size() != G.size()) throw ShapeError("one coefficient matrix per generator is required");
  MatPoly sum(n, nvars);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!H[i].is_zero()) sum += H[i] * G[i];
  }
  return sum;
}

MatPoly symbolic_matrix(std::size_t n, std::size_t nvars) {
  if (nvars < n * n) throw ShapeError("ring has too few variables for symbolic entries");
  MatPoly A(n, nvars);
  const std::size_t first = nvars - n * n;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) A(p, q) = MPoly::variable(nvars, first + p * n + q);
  }
  return A;
}

MatPoly constant_matrix(const GaussMatrix& A, std::size_t nvars) {
  const std::size_t n = A.size();
  std::vector<GaussQ> flat;
  flat.reserve(n * n);
  for (const auto& r : A) {
    if (r.size() != n) throw ShapeError("constant matrix must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return MatPoly::constant(n, nvars, flat);
}

namespace {

MatPoly lift(const MatPoly& M, std::size_t extra) {
  return M.map_entries([extra](const MPoly& p) { return extend_variables(p, extra); });
}

// Ring without y -> extended ring: insert y at base_nvars.
MatPoly insert_y(const MatPoly& M, const ExtendedRing& ring) {
  std::vector<std::size_t> idx(ring.nvars_without_y());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t k = ring.base_nvars; k < idx.size(); ++k) idx[k] = k + 1;
  const std::size_t nv = ring.nvars();
  return M.map_entries([&](const MPoly& p) { return remap_variables(p, nv, idx); });
}

Monomial::Exponent degree_in(const MatPoly& M, std::size_t var) {
  Monomial::Exponent d = 0;
  for (const auto& e : M.entries()) {
    for (const auto& t : e.terms()) d = std::max(d, t.first[var]);
  }
  return d;
}

// Coefficient matrices of var^0 .. var^top, with var removed.
std::vector<MatPoly> split_matrix(const MatPoly& M, std::size_t var, std::size_t top) {
  std::vector<MatPoly> out(top + 1, MatPoly(M.n(), M.nvars() - 1));
  for (std::size_t r = 0; r < M.n(); ++r) {
    for (std::size_t c = 0; c < M.n(); ++c) {
      auto parts = split_by_variable(M(r, c), var);
      for (std::size_t k = 0; k < parts.size(); ++k) out[k](r, c) = std::move(parts[k]);
    }
  }
  return out;
}

std::vector<MatPoly> certificate_generators(const MatLeftIdeal& I, const ExtendedRing& ring) {
  std::vector<MatPoly> g;
  for (const auto& G : I.generators()) g.push_back(lift(G, ring.nvars_without_y() - ring.base_nvars));
  return g;
}

PowerCertificate direct_certificate(const MatLeftIdeal& I, const ExtendedRing& ring, const MatPoly& A,
                                    const MatPoly& AF, std::span<const MatPoly> H) {
  PowerCertificate cert;
  cert.ring = ring;
  cert.N = 1;
  cert.AF = AF;
  cert.generators = certificate_generators(I, ring);
  const std::size_t nv = ring.nvars_without_y();
  const std::size_t m = I.generators().size();
  cert.L = {MatPoly(I.n(), nv), AF};
  cert.H.assign(2, std::vector<MatPoly>(m, MatPoly(I.n(), nv)));
  for (std::size_t i = 0; i < m; ++i) cert.H[1][i] = A * lift(H[i], nv - ring.base_nvars);
  return cert;
}

}  // namespace

RabinowitschExtension rabinowitsch_extend(const MatPoly& F, const MatLeftIdeal& I,
                                          const std::optional<GaussMatrix>& A) {
  if (F.n() != I.n() || F.nvars() != I.nvars()) throw ShapeError("matrix does not match the ideal's ring");
  const std::size_t n = I.n();
  ExtendedRing ring{I.nvars(), n, !A.has_value()};
  if (A && (A->size() != n)) throw ShapeError("A must be n x n");

  MatPoly AF;
  if (A) {
    AF = constant_matrix(*A, I.nvars()) * F;
  } else {
    const std::size_t nv = ring.nvars_without_y();
    AF = symbolic_matrix(n, nv) * lift(F, n * n);
  }
  const std::size_t nv = ring.nvars();
  std::vector<MatPoly> gens;
  for (const auto& G : I.generators()) gens.push_back(lift(G, nv - I.nvars()));
  MatPoly y = MatPoly::scalar(n, MPoly::variable(nv, ring.y_index()));
  gens.push_back(y * insert_y(AF, ring) - MatPoly::identity(n, nv));
  return {ring, A, AF, MatLeftIdeal(n, nv, std::move(gens), I.options())};
}

PowerCertificate telescope_certificate(std::span<const MatPoly> H, const MatPoly& K, const RabinowitschExtension& ext,
                                       const MatLeftIdeal& I) {
  const std::size_t m = I.generators().size();
  const std::size_t n = I.n();
  const auto& egens = ext.ideal.generators();
  if (H.size() != m) throw InvalidInput("one H per generator is required");
  std::vector<MatPoly> all(H.begin(), H.end());
  all.push_back(K);
  if (combine(all, egens, n, ext.ring.nvars()) != MatPoly::identity(n, ext.ring.nvars())) {
    throw InvalidInput("sum H_i G_i + K (y AF - 1) is not the identity");
  }
  const std::size_t y = ext.ring.y_index();
  Monomial::Exponent N = degree_in(K, y) + 1;
  for (const auto& h : H) N = std::max(N, degree_in(h, y));

  PowerCertificate cert;
  cert.ring = ext.ring;
  cert.N = N;
  cert.A = ext.A;
  cert.AF = ext.AF;
  cert.generators = certificate_generators(I, ext.ring);
  const std::size_t nv = ext.ring.nvars_without_y();
  cert.H.assign(N + 1, std::vector<MatPoly>(m, MatPoly(n, nv)));
  for (std::size_t i = 0; i < m; ++i) {
    auto parts = split_matrix(H[i], y, N);
    for (std::size_t k = 0; k <= N; ++k) cert.H[k][i] = std::move(parts[k]);
  }
  for (std::size_t k = 0; k <= N; ++k) cert.L.push_back(combine(cert.H[k], cert.generators, n, nv));
  if (!cert.identity_holds()) throw InternalError("telescoped certificate failed its identity");
  return cert;
}

bool PowerCertificate::identity_holds() const {
  if (L.size() != static_cast<std::size_t>(N) + 1) return false;
  const std::size_t n = AF.n();
  const std::size_t nv = AF.nvars();
  std::vector<MatPoly> powers{MatPoly::identity(n, nv)};
  for (unsigned k = 1; k <= N; ++k) powers.push_back(powers.back() * AF);
  MatPoly sum(n, nv);
  for (unsigned k = 0; k <= N; ++k) {
    if (L[k].n() != n || L[k].nvars() != nv) return false;
    if (!L[k].is_zero()) sum += L[k] * powers[N - k];
  }
  return sum == powers[N];
}

bool PowerCertificate::verify() const {
  if (!identity_holds() || H.size() != L.size()) return false;
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (H[k].size() != generators.size()) return false;
    if (combine(H[k], generators, AF.n(), AF.nvars()) != L[k]) return false;
  }
  return true;
}

PowerCertificate PowerCertificate::specialize(const GaussMatrix& concrete) const {
  if (A) throw InvalidInput("certificate is already concrete");
  const std::size_t n = AF.n();
  if (concrete.size() != n) throw ShapeError("A must be n x n");
  std::vector<GaussQ> values;
  for (const auto& r : concrete) {
    if (r.size() != n) throw ShapeError("A must be n x n");
    values.insert(values.end(), r.begin(), r.end());
  }
  auto sub = [&](const MatPoly& M) {
    return M.map_entries([&](const MPoly& p) { return specialize_trailing<GaussQ>(p, values); });
  };
  PowerCertificate out;
  out.ring = {ring.base_nvars, n, false};
  out.N = N;
  out.A = concrete;
  out.AF = sub(AF);
  for (const auto& l : L) out.L.push_back(sub(l));
  for (const auto& g : generators) out.generators.push_back(sub(g));
  for (const auto& row : H) {
    std::vector<MatPoly> r;
    for (const auto& h : row) r.push_back(sub(h));
    out.H.push_back(std::move(r));
  }
  return out;
}

namespace {

// Looks for a smaller exponent: (AF)^M lies in I + I(AF) + ... + I(AF)^M
// iff it lies in the left ideal generated by the G_i (AF)^j, j <= M.
PowerCertificate tighten(PowerCertificate cert, const MatLeftIdeal& I) {
  const std::size_t n = I.n();
  const std::size_t m = cert.generators.size();
  const std::size_t nv = cert.AF.nvars();
  try {
    std::vector<MatPoly> powers{MatPoly::identity(n, nv)};
    for (unsigned M = 1; M < cert.N; ++M) {
      powers.push_back(powers.back() * cert.AF);
      std::vector<MatPoly> gens;
      for (unsigned j = 0; j <= M; ++j) {
        for (const auto& G : cert.generators) gens.push_back(G * powers[j]);
      }
      MatLeftIdeal J(n, nv, std::move(gens), I.options());
      auto mem = left_ideal_membership(powers[M], J);
      if (!mem) continue;
      PowerCertificate out = cert;
      out.N = M;
      out.H.assign(M + 1, std::vector<MatPoly>(m, MatPoly(n, nv)));
      out.L.clear();
      for (unsigned k = 0; k <= M; ++k) {
        for (std::size_t i = 0; i < m; ++i) out.H[k][i] = (*mem)[(M - k) * m + i];
        out.L.push_back(combine(out.H[k], out.generators, n, nv));
      }
      if (!out.identity_holds()) throw InternalError("tightened certificate failed its identity");
      return out;
    }
  } catch (const ResourceExceeded&) {
    // Keep the telescoped certificate.
  }
  return cert;
}

std::optional<PowerCertificate> certificate_from_extension(const RabinowitschExtension& ext, const MatLeftIdeal& I) {
  if (!ext.ideal.is_unit()) return std::nullopt;
  auto mem = left_ideal_membership(MatPoly::identity(I.n(), ext.ring.nvars()), ext.ideal);
  if (!mem) throw InternalError("unit row module without an identity certificate");
  std::vector<MatPoly> H(mem->begin(), mem->end() - 1);
  return tighten(telescope_certificate(H, mem->back(), ext, I), I);
}

}  // namespace

std::optional<PowerCertificate> power_certificate(const MatPoly& F, const GaussMatrix& A, const MatLeftIdeal& I) {
  if (F.n() != I.n() || F.nvars() != I.nvars()) throw ShapeError("matrix does not match the ideal's ring");
  if (A.size() != I.n()) throw ShapeError("A must be n x n");
  const MatPoly Am = constant_matrix(A, I.nvars());
  const MatPoly AF = Am * F;
  if (auto H = left_ideal_membership(AF, I)) {
    // AF = sum H_i G_i already, so L_1 = AF.
    ExtendedRing ring{I.nvars(), I.n(), false};
    PowerCertificate cert = direct_certificate(I, ring, MatPoly::identity(I.n(), I.nvars()), AF, *H);
    cert.A = A;
    return cert;
  }
  return certificate_from_extension(rabinowitsch_extend(F, I, A), I);
}

std::optional<PowerCertificate> uniform_power_certificate(const MatPoly& F, const MatLeftIdeal& I) {
  if (F.n() != I.n() || F.nvars() != I.nvars()) throw ShapeError("matrix does not match the ideal's ring");
  if (auto H = left_ideal_membership(F, I)) {
    ExtendedRing ring{I.nvars(), I.n(), true};
    const std::size_t nv = ring.nvars_without_y();
    MatPoly As = symbolic_matrix(I.n(), nv);
    return direct_certificate(I, ring, As, As * lift(F, nv - I.nvars()), *H);
  }
  return certificate_from_extension(rabinowitsch_extend(F, I, std::nullopt), I);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvedVanishing:
      return "ProvedVanishing";
    case Verdict::RefutedVanishing:
      return "RefutedVanishing";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Witness w) { return w == Witness::Violation ? "Violation" : "NoViolation"; }

std::vector<GaussMatrix> probe_family(std::size_t n, const DecisionConfig& config) {
  std::vector<GaussMatrix> out;
  GaussMatrix id(n, GaussVector(n, GaussQ(0)));
  for (std::size_t p = 0; p < n; ++p) id[p][p] = GaussQ(1);
  out.push_back(id);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      GaussMatrix e(n, GaussVector(n, GaussQ(0)));
      e[p][q] = GaussQ(1);
      out.push_back(std::move(e));
    }
  }
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t k = 0; k < config.extra_probes; ++k) {
    GaussMatrix r(n, GaussVector(n));
    for (auto& row : r) {
      for (auto& z : row) z = rng.gauss(config.height);
    }
    out.push_back(std::move(r));
  }
  return out;
}

GaussMatrix special_A(const DirectionalPoint& p, const MatPoly& F) {
  const std::size_t n = F.n();
  if (p.v().size() != n || p.a().size() != F.nvars()) throw ShapeError("directional point does not match F");
  GaussMatrix Fa = evaluate(F, p.a());
  const GaussVector& v = p.v();
  // (v v^*) (F(a)^*): entry (r, s) = v_r * sum_t conj(v_t) conj(F(a)_{s t}).
  GaussVector w(n, GaussQ(0));  // w_s = conj((F(a) v)_s)
  for (std::size_t s = 0; s < n; ++s) {
    GaussQ acc(0);
    for (std::size_t t = 0; t < n; ++t) acc += Fa[s][t] * v[t];
    w[s] = acc.conj();
  }
  GaussMatrix A(n, GaussVector(n, GaussQ(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) A[r][s] = v[r] * w[s];
  }
  return A;
}

DecisionOutcome decide_directional_vanishing(const MatPoly& F, const MatLeftIdeal& I, const DecisionConfig& config) {
  if (F.n() != I.n() || F.nvars() != I.nvars()) throw ShapeError("matrix does not match the ideal's ring");
  DecisionOutcome out;

  // P0: F in I gives N = 1 for every A.
  try {
    if (auto H = left_ideal_membership(F, I)) {
      out.verdict = Verdict::ProvedVanishing;
      out.phase = "direct";
      out.certificate = uniform_power_certificate(F, I);
      return out;
    }
  } catch (const ResourceExceeded& e) {
    out.notes.push_back(std::string("membership of F: ") + e.what());
  }

  // P1: uniform certificate over symbolic A.
  try {
    if (auto cert = certificate_from_extension(rabinowitsch_extend(F, I, std::nullopt), I)) {
      out.verdict = Verdict::ProvedVanishing;
      out.phase = "symbolic";
      out.certificate = std::move(cert);
      return out;
    }
    out.notes.push_back("identity is not in the extended ideal for symbolic A");
  } catch (const ResourceExceeded& e) {
    out.notes.push_back(std::string("symbolic phase: ") + e.what());
  }

  // P2: concrete probes in fixed order; the first failure refutes.
  for (auto& A : probe_family(I.n(), config)) {
    try {
      bool unit = rabinowitsch_extend(F, I, A).ideal.is_unit();
      out.probes.push_back({A, unit});
      if (!unit) {
        out.verdict = Verdict::RefutedVanishing;
        out.phase = "probe";
        out.refuting_A = A;
        break;
      }
    } catch (const ResourceExceeded& e) {
      out.notes.push_back(std::string("probe skipped: ") + e.what());
    }
  }

  // P3: look for an explicit directional zero with F(a) v != 0.
  SampleConfig sc{config.seed, config.trials, config.height, true};
  if (auto w = refute_by_sampling(F, I.generators(), sc)) {
    GaussMatrix As = special_A(*w, F);
    try {
      if (rabinowitsch_extend(F, I, As).ideal.is_unit()) {
        throw InternalError("sampled witness is not confirmed by its special A probe");
      }
    } catch (const ResourceExceeded& e) {
      out.notes.push_back(std::string("special A cross-check: ") + e.what());
    }
    out.witness = std::move(*w);
    if (out.verdict != Verdict::RefutedVanishing) {
      out.verdict = Verdict::RefutedVanishing;
      out.phase = "sampling";
    }
  }
  if (out.verdict == Verdict::Unknown) out.notes.push_back("no refuting probe or sampled witness found");
  return out;
}

Witness semiprime_witness_matrix(const MatLeftIdeal& I, const MatPoly& A) {
  if (contains(I, A)) return Witness::NoViolation;
  for (const auto& a : A.entries()) {
    if (a.is_zero()) continue;
    if (!contains(I, a * A)) return Witness::NoViolation;
  }
  return Witness::Violation;
}

Witness prime_pair_matrix(const MatLeftIdeal& I, const MPoly& a, const MatPoly& B) {
  if (!contains(I, a * B)) return Witness::NoViolation;
  if (contains(I, MatPoly::scalar(I.n(), a))) return Witness::NoViolation;
  if (contains(I, B)) return Witness::NoViolation;
  return Witness::Violation;
}

Witness completely_semiprime_matrix(const MatLeftIdeal& I, const MatPoly& A) {
  if (contains(I, A)) return Witness::NoViolation;
  if (!contains(I, A * A)) return Witness::NoViolation;
  for (const auto& G : I.generators()) {
    if (!contains(I, G * A)) return Witness::NoViolation;
  }
  return Witness::Violation;
}

}  // namespace qnss
