#include "qnss_cli/evidence.hpp"

#include <cstdio>

#include "qnss/errors.hpp"
#include "qnss/polynomial.hpp"
#include "qnss/text.hpp"

namespace qnss::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json ring_json(const RingHeader& ring) {
  json j;
  j["mode"] = ring.mode == Mode::Quat ? "quat" : "matrix";
  j["d"] = ring.d;
  if (ring.mode == Mode::Matrix) j["n"] = ring.n;
  j["vars"] = ring.vars;
  return j;
}

RingHeader ring_from_json(const json& j) {
  RingHeader r;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "quat") r.mode = Mode::Quat;
  else if (mode == "matrix") r.mode = Mode::Matrix;
  else throw InvalidInput("unknown ring mode '" + mode + "'");
  r.vars = j.at("vars").get<std::vector<std::string>>();
  r.d = r.vars.size();
  r.n = r.mode == Mode::Matrix ? j.at("n").get<std::size_t>() : 2;
  for (const auto& v : r.vars) {
    if (is_reserved_name(v, r.n)) throw InvalidInput("reserved variable name '" + v + "'");
  }
  return r;
}

std::vector<std::string> certificate_variables(const std::vector<std::string>& vars, std::size_t n, bool symbolic) {
  std::vector<std::string> out = vars;
  if (symbolic) {
    for (std::size_t p = 1; p <= n; ++p) {
      for (std::size_t q = 1; q <= n; ++q) out.push_back("a" + std::to_string(p) + std::to_string(q));
    }
  }
  return out;
}

std::string gauss_matrix_text(const GaussMatrix& A) {
  std::string s = "[";
  for (std::size_t r = 0; r < A.size(); ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < A[r].size(); ++c) s += (c ? ", " : "") + format_scalar(A[r][c]);
    s += "]";
  }
  return s + "]";
}

std::vector<std::string> texts(const std::vector<QPoly>& ps, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_poly(p, vars));
  return out;
}

std::vector<std::string> texts(const std::vector<MatPoly>& ms, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(format_matrix(m, vars));
  return out;
}

namespace {

std::vector<std::string> gauss_texts(const GaussVector& v) {
  std::vector<std::string> out;
  for (const auto& z : v) out.push_back(format_scalar(z));
  return out;
}

json matrix_ring(const std::vector<std::string>& vars, std::size_t n) {
  RingHeader r;
  r.mode = Mode::Matrix;
  r.n = n;
  r.d = vars.size();
  r.vars = vars;
  return ring_json(r);
}

json quat_ring(const std::vector<std::string>& vars) {
  RingHeader r;
  r.d = vars.size();
  r.vars = vars;
  return ring_json(r);
}

GaussMatrix constant_of(const MatPoly& M) {
  if (!M.is_constant()) throw InvalidInput("matrix must be constant");
  GaussMatrix A(M.n(), GaussVector(M.n()));
  for (std::size_t r = 0; r < M.n(); ++r) {
    for (std::size_t c = 0; c < M.n(); ++c) A[r][c] = M(r, c).constant_term();
  }
  return A;
}

// Parsing helpers bound to one ring.
struct Ring {
  RingHeader h;

  MatPoly mat(const json& j, const std::vector<std::string>& vars) const {
    return parse_matpoly(j.get<std::string>(), vars, h.n);
  }
  MatPoly mat(const json& j) const { return mat(j, h.vars); }
  QPoly quat(const json& j) const { return parse_qpoly(j.get<std::string>(), h.vars); }
  std::vector<MatPoly> mats(const json& j) const {
    std::vector<MatPoly> out;
    for (const auto& e : j) out.push_back(mat(e));
    return out;
  }
  std::vector<QPoly> quats(const json& j) const {
    std::vector<QPoly> out;
    for (const auto& e : j) out.push_back(quat(e));
    return out;
  }
  GaussVector gauss_vector(const json& j) const {
    GaussVector out;
    for (const auto& e : j) out.push_back(parse_gauss(e.get<std::string>()));
    return out;
  }
};

void require(Check& c, bool ok, const std::string& problem) {
  if (!ok) {
    c.valid = false;
    c.problems.push_back(problem);
  }
}

void verify_matrix_power(const json& e, Check& c) {
  Ring R{ring_from_json(e.at("ring"))};
  if (R.h.mode != Mode::Matrix) throw InvalidInput("matrix-power evidence needs a matrix ring");
  const std::size_t n = R.h.n;
  const bool symbolic = e.at("A").is_null();
  const auto cvars = certificate_variables(R.h.vars, n, symbolic);
  const std::size_t nv = cvars.size();
  const std::size_t extra = nv - R.h.d;

  MatPoly F = R.mat(e.at("F"));
  std::vector<MatPoly> G = R.mats(e.at("generators"));
  auto lift = [&](const MatPoly& M) {
    return M.map_entries([&](const MPoly& p) { return extend_variables(p, extra); });
  };
  MatPoly AF = symbolic ? symbolic_matrix(n, nv) * lift(F) : constant_matrix(constant_of(R.mat(e.at("A"))), nv) * F;

  const unsigned N = e.at("N").get<unsigned>();
  std::vector<MatPoly> L;
  for (const auto& l : e.at("L")) L.push_back(R.mat(l, cvars));
  const auto& H = e.at("H");
  require(c, L.size() == N + 1, "expected N+1 = " + std::to_string(N + 1) + " matrices L_k, got " +
                                    std::to_string(L.size()));
  require(c, H.size() == L.size(), "H must have one row per L_k");
  if (!c.valid) return;

  std::vector<MatPoly> lifted;
  for (const auto& g : G) lifted.push_back(lift(g));
  for (std::size_t k = 0; k < L.size(); ++k) {
    std::vector<MatPoly> Hk;
    for (const auto& h : H[k]) Hk.push_back(R.mat(h, cvars));
    if (Hk.size() != lifted.size()) {
      require(c, false, "H[" + std::to_string(k) + "] has the wrong length");
      continue;
    }
    require(c, combine(Hk, lifted, n, nv) == L[k],
            "L_" + std::to_string(k) + " != sum_i H[" + std::to_string(k) + "][i] G_i");
  }

  std::vector<MatPoly> powers{MatPoly::identity(n, nv)};
  for (unsigned k = 1; k <= N; ++k) powers.push_back(powers.back() * AF);
  MatPoly sum(n, nv);
  for (unsigned k = 0; k <= N; ++k) sum += L[k] * powers[N - k];
  if (sum != powers[N]) {
    require(c, false, "sum_k L_k (AF)^(N-k) != (AF)^N; difference " + format_matrix(sum - powers[N], cvars));
  }
  std::string hash = hex64(fnv1a64(format_matrix(powers[N], cvars)));
  require(c, e.at("verifiedAt").get<std::string>() == hash, "verifiedAt does not match the expansion of (AF)^N");
}

void verify_quat_power(const json& e, Check& c) {
  Ring R{ring_from_json(e.at("ring"))};
  const QuatQ b = parse_quat(e.at("b").get<std::string>());
  const unsigned N = e.at("N").get<unsigned>();
  QPoly f = R.quat(e.at("f"));
  std::vector<QPoly> G = R.quats(e.at("generators"));
  std::vector<QPoly> u = R.quats(e.at("u"));
  const auto& h = e.at("h");
  require(c, u.size() == N + 1, "expected N+1 = " + std::to_string(N + 1) + " entries u_k");
  require(c, h.size() == u.size(), "h must have one row per u_k");
  if (!c.valid) return;
  for (std::size_t k = 0; k < u.size(); ++k) {
    std::vector<QPoly> hk = R.quats(h[k]);
    if (hk.size() != G.size()) {
      require(c, false, "h[" + std::to_string(k) + "] has the wrong length");
      continue;
    }
    QPoly s(R.h.d);
    for (std::size_t i = 0; i < G.size(); ++i) s += hk[i] * G[i];
    require(c, s == u[k], "u_" + std::to_string(k) + " != sum_i h[" + std::to_string(k) + "][i] g_i");
  }
  QPoly bf = f.scaled_left(b);
  QPoly power = QPoly::constant(R.h.d, QuatQ(1));
  QPoly sum(R.h.d);
  for (unsigned k = 0; k <= N; ++k) {
    sum += u[k] * power;
    if (k < N) power = power * bf;
  }
  if (sum != power) {
    require(c, false, "sum_k u_k (bf)^k != (bf)^N; difference " + format_poly(sum - power, R.h.vars));
  }
  std::string hash = hex64(fnv1a64(format_poly(power, R.h.vars)));
  require(c, e.at("verifiedAt").get<std::string>() == hash, "verifiedAt does not match the expansion of (bf)^N");
}

void verify_matrix_witness(const json& e, Check& c) {
  Ring R{ring_from_json(e.at("ring"))};
  DirectionalPoint p(R.gauss_vector(e.at("a")), R.gauss_vector(e.at("v")));
  MatPoly F = R.mat(e.at("F"));
  const auto G = R.mats(e.at("generators"));
  for (std::size_t i = 0; i < G.size(); ++i) {
    GaussVector r = eval_matrix(G[i], p);
    bool zero = std::all_of(r.begin(), r.end(), [](const GaussQ& z) { return z.is_zero(); });
    require(c, zero, "G_" + std::to_string(i + 1) + "(a) v != 0");
  }
  GaussVector r = eval_matrix(F, p);
  bool zero = std::all_of(r.begin(), r.end(), [](const GaussQ& z) { return z.is_zero(); });
  require(c, !zero, "F(a) v = 0, so the point does not refute");
}

void verify_quat_witness(const json& e, Check& c) {
  Ring R{ring_from_json(e.at("ring"))};
  std::vector<QuatQ> coords;
  for (const auto& q : e.at("point")) coords.push_back(parse_quat(q.get<std::string>()));
  require(c, coords.size() == R.h.d, "point has the wrong dimension");
  if (!c.valid) return;
  GoodPoint a(std::move(coords));
  QPoly f = R.quat(e.at("f"));
  const auto G = R.quats(e.at("generators"));
  for (std::size_t i = 0; i < G.size(); ++i) {
    require(c, eval_quat(G[i], a).is_zero(), "g_" + std::to_string(i + 1) + "(a) != 0");
  }
  require(c, !eval_quat(f, a).is_zero(), "f(a) = 0, so the point does not refute");
}

void verify_probe(const json& e, Check& c, const GroebnerOptions& options) {
  Ring R{ring_from_json(e.at("ring"))};
  MatPoly F = R.mat(e.at("F"));
  GaussMatrix A = constant_of(R.mat(e.at("A")));
  MatLeftIdeal I(R.h.n, R.h.d, R.mats(e.at("generators")), options);
  require(c, !rabinowitsch_extend(F, I, A).ideal.is_unit(), "the extended ideal contains the identity for this A");
}

void verify_membership(const json& e, Check& c, const GroebnerOptions& options) {
  Ring R{ring_from_json(e.at("ring"))};
  const bool member = e.at("member").get<bool>();
  if (R.h.mode == Mode::Matrix) {
    MatPoly T = R.mat(e.at("target"));
    const auto G = R.mats(e.at("generators"));
    if (member) {
      const auto H = R.mats(e.at("cofactors"));
      require(c, H.size() == G.size(), "one cofactor per generator expected");
      if (c.valid) require(c, combine(H, G, R.h.n, R.h.d) == T, "sum_i H_i G_i != target");
    } else {
      require(c, !contains(MatLeftIdeal(R.h.n, R.h.d, G, options), T), "target lies in the ideal");
    }
  } else {
    QPoly t = R.quat(e.at("target"));
    const auto G = R.quats(e.at("generators"));
    if (member) {
      const auto h = R.quats(e.at("cofactors"));
      require(c, h.size() == G.size(), "one cofactor per generator expected");
      if (!c.valid) return;
      QPoly s(R.h.d);
      for (std::size_t i = 0; i < G.size(); ++i) s += h[i] * G[i];
      require(c, s == t, "sum_i h_i g_i != target");
    } else {
      require(c, !contains(QuatLeftIdeal(R.h.d, G, options), t), "target lies in the ideal");
    }
  }
}

void verify_predicate(const json& e, Check& c, const GroebnerOptions& options) {
  Ring R{ring_from_json(e.at("ring"))};
  const std::string pred = e.at("predicate").get<std::string>();
  const std::string claimed = e.at("result").get<std::string>();
  const auto& args = e.at("args");
  Witness w;
  if (R.h.mode == Mode::Matrix) {
    MatLeftIdeal I(R.h.n, R.h.d, R.mats(e.at("generators")), options);
    if (pred == "semiprime") w = semiprime_witness_matrix(I, R.mat(args.at(0)));
    else if (pred == "prime") w = prime_pair_matrix(I, parse_mpoly(args.at(0).get<std::string>(), R.h.vars), R.mat(args.at(1)));
    else if (pred == "completely-semiprime") w = completely_semiprime_matrix(I, R.mat(args.at(0)));
    else throw InvalidInput("unknown matrix predicate '" + pred + "'");
  } else {
    QuatLeftIdeal I(R.h.d, R.quats(e.at("generators")), options);
    if (pred == "semiprime") {
      w = semiprime_witness_quat(I, R.quat(args.at(0)));
    } else if (pred == "prime") {
      QPoly r = R.quat(args.at(0));
      w = prime_pair_quat(I, complex_split(r).first, R.quat(args.at(1)));
      if (!complex_split(r).second.is_zero()) throw InvalidInput("r must be real");
    } else if (pred == "completely-prime") {
      w = completely_prime_pair_quat(I, R.quat(args.at(0)), R.quat(args.at(1)));
    } else if (pred == "completely-semiprime") {
      w = completely_semiprime_witness(I, R.quat(args.at(0)));
    } else {
      throw InvalidInput("unknown quat predicate '" + pred + "'");
    }
  }
  require(c, to_string(w) == claimed, "predicate evaluates to " + to_string(w) + ", evidence claims " + claimed);
}

void verify_intersection(const json& e, Check& c, const GroebnerOptions& options) {
  Ring R{ring_from_json(e.at("ring"))};
  if (R.h.mode == Mode::Matrix) {
    MatLeftIdeal A(R.h.n, R.h.d, R.mats(e.at("generators")), options);
    MatLeftIdeal B(R.h.n, R.h.d, R.mats(e.at("other")), options);
    const auto X = R.mats(e.at("intersection"));
    for (std::size_t k = 0; k < X.size(); ++k) {
      require(c, contains(A, X[k]) && contains(B, X[k]), "generator " + std::to_string(k + 1) + " is not in both ideals");
    }
  } else {
    QuatLeftIdeal A(R.h.d, R.quats(e.at("generators")), options);
    QuatLeftIdeal B(R.h.d, R.quats(e.at("other")), options);
    const auto X = R.quats(e.at("intersection"));
    for (std::size_t k = 0; k < X.size(); ++k) {
      require(c, contains(A, X[k]) && contains(B, X[k]), "generator " + std::to_string(k + 1) + " is not in both ideals");
    }
  }
}

void verify_decomposition(const json& e, Check& c) {
  Ring R{ring_from_json(e.at("ring"))};
  MatPoly A = R.mat(e.at("A"));
  QPoly z = R.quat(e.at("z"));
  QPoly w = R.quat(e.at("w"));
  require(c, phi_compose(z, w) == A, "phi(z) + i phi(w) != A");
}

void verify_zeros(const json& e, Check& c) {
  Ring R{ring_from_json(e.at("ring"))};
  std::size_t k = 0;
  if (R.h.mode == Mode::Matrix) {
    const auto G = R.mats(e.at("generators"));
    for (const auto& pt : e.at("points")) {
      ++k;
      DirectionalPoint p(R.gauss_vector(pt.at("a")), R.gauss_vector(pt.at("v")));
      for (const auto& g : G) {
        GaussVector r = eval_matrix(g, p);
        bool zero = std::all_of(r.begin(), r.end(), [](const GaussQ& z) { return z.is_zero(); });
        require(c, zero, "point " + std::to_string(k) + " is not a common zero");
      }
    }
  } else {
    const auto G = R.quats(e.at("generators"));
    for (const auto& pt : e.at("points")) {
      ++k;
      std::vector<QuatQ> coords;
      for (const auto& q : pt) coords.push_back(parse_quat(q.get<std::string>()));
      GoodPoint a(std::move(coords));
      for (const auto& g : G) require(c, eval_quat(g, a).is_zero(), "point " + std::to_string(k) + " is not a common zero");
    }
  }
}

}  // namespace

json matrix_certificate_json(const PowerCertificate& cert, const MatPoly& F, const std::vector<MatPoly>& gens,
                             const std::vector<std::string>& vars) {
  const auto cvars = certificate_variables(vars, cert.ring.n, cert.ring.symbolic);
  json j;
  j["kind"] = "matrix-power";
  j["ring"] = matrix_ring(vars, cert.ring.n);
  j["N"] = cert.N;
  j["A"] = cert.A ? json(gauss_matrix_text(*cert.A)) : json(nullptr);
  j["F"] = format_matrix(F, vars);
  j["generators"] = texts(gens, vars);
  j["L"] = texts(cert.L, cvars);
  json H = json::array();
  for (const auto& row : cert.H) H.push_back(texts(row, cvars));
  j["H"] = H;
  j["verifiedAt"] = hex64(fnv1a64(format_matrix(cert.AF.pow(cert.N), cvars)));
  return j;
}

json quat_certificate_json(const QuatPowerCertificate& cert, const std::vector<std::string>& vars) {
  json j;
  j["kind"] = "quat-power";
  j["ring"] = quat_ring(vars);
  j["b"] = format_scalar(cert.b);
  j["N"] = cert.N;
  j["f"] = format_poly(cert.f, vars);
  j["generators"] = texts(cert.generators, vars);
  j["u"] = texts(cert.u, vars);
  json h = json::array();
  for (const auto& row : cert.h) h.push_back(texts(row, vars));
  j["h"] = h;
  j["verifiedAt"] = hex64(fnv1a64(format_poly(cert.f.scaled_left(cert.b).pow(cert.N), vars)));
  return j;
}

json matrix_witness_json(const DirectionalPoint& w, const MatPoly& F, const std::vector<MatPoly>& gens,
                         const std::vector<std::string>& vars) {
  json j;
  j["kind"] = "matrix-witness";
  j["ring"] = matrix_ring(vars, F.n());
  j["F"] = format_matrix(F, vars);
  j["generators"] = texts(gens, vars);
  j["a"] = gauss_texts(w.a());
  j["v"] = gauss_texts(w.v());
  return j;
}

json quat_witness_json(const GoodPoint& a, const QPoly& f, const std::vector<QPoly>& gens,
                       const std::vector<std::string>& vars) {
  json j;
  j["kind"] = "quat-witness";
  j["ring"] = quat_ring(vars);
  j["f"] = format_poly(f, vars);
  j["generators"] = texts(gens, vars);
  json pt = json::array();
  for (const auto& q : a.coordinates()) pt.push_back(format_scalar(q));
  j["point"] = pt;
  return j;
}

json probe_json(const GaussMatrix& A, const MatPoly& F, const std::vector<MatPoly>& gens,
                const std::vector<std::string>& vars) {
  json j;
  j["kind"] = "refuting-probe";
  j["ring"] = matrix_ring(vars, F.n());
  j["F"] = format_matrix(F, vars);
  j["generators"] = texts(gens, vars);
  j["A"] = gauss_matrix_text(A);
  return j;
}

Check verify_evidence(const json& e, const GroebnerOptions& options) {
  Check c;
  try {
    c.kind = e.at("kind").get<std::string>();
    if (c.kind == "matrix-power") verify_matrix_power(e, c);
    else if (c.kind == "quat-power") verify_quat_power(e, c);
    else if (c.kind == "matrix-witness") verify_matrix_witness(e, c);
    else if (c.kind == "quat-witness") verify_quat_witness(e, c);
    else if (c.kind == "refuting-probe") verify_probe(e, c, options);
    else if (c.kind == "membership") verify_membership(e, c, options);
    else if (c.kind == "witness") verify_predicate(e, c, options);
    else if (c.kind == "intersection") verify_intersection(e, c, options);
    else if (c.kind == "decomposition") verify_decomposition(e, c);
    else if (c.kind == "zeros") verify_zeros(e, c);
    else require(c, false, "unknown evidence kind '" + c.kind + "'");
  } catch (const ResourceExceeded&) {
    throw;
  } catch (const InternalError&) {
    throw;
  } catch (const std::exception& ex) {
    require(c, false, std::string("malformed evidence: ") + ex.what());
  }
  return c;
}

}  // namespace qnss::cli
