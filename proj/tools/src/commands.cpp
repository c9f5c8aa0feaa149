#include "qnss_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "qnss/errors.hpp"
#include "qnss/json_io.hpp"
#include "qnss/text.hpp"
#include "qnss_cli/evidence.hpp"

namespace qnss::cli {

namespace fs = std::filesystem;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"gb",     "member",     "nss-decide",    "nss-certify", "verify-cert",
                                                 "embed",  "decompose",  "witness-check", "intersect",   "sample"};
  return names;
}

GroebnerOptions groebner_options(const Flags& flags) {
  GroebnerOptions g;
  std::string name = flags.order;
  if (name.size() > 4 && name.ends_with("-top")) {
    g.order.position = PositionOrder::TermOverPosition;
    name.resize(name.size() - 4);
  }
  if (name == "grevlex") g.order.monomial = MonomialOrder::grevlex();
  else if (name == "lex") g.order.monomial = MonomialOrder::lex();
  else throw InvalidInput("unknown order '" + flags.order + "' (grevlex, lex, grevlex-top, lex-top)");
  g.degree_cap = flags.degree_cap;
  return g;
}

namespace {

constexpr long kHeight = 10;
constexpr std::size_t kMaxSamplePoints = 32;

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::ProvedVanishing: return kPositive;
    case Verdict::RefutedVanishing: return kNegative;
    case Verdict::Unknown: break;
  }
  return kUnknown;
}

json config_json(const Flags& f) {
  return {{"order", f.order}, {"degreeCap", f.degree_cap}, {"probes", f.probes},
          {"trials", f.trials}, {"seed", std::to_string(f.seed)}, {"height", kHeight}};
}

json error_json(const std::string& type, const std::string& message) { return {{"type", type}, {"message", message}}; }

// Runs `body`, mapping library exceptions to an error object and exit code.
int guarded(const std::function<int()>& body, json& error) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    error = error_json("SyntaxError", e.what());
    error["line"] = e.line();
    error["column"] = e.column();
    return kUsageError;
  } catch (const ShapeError& e) {
    error = error_json("ShapeError", e.what());
    return kUsageError;
  } catch (const InvalidInput& e) {
    error = error_json("InvalidInput", e.what());
    return kUsageError;
  } catch (const NotInvertible& e) {
    error = error_json("NotInvertible", e.what());
    return kUsageError;
  } catch (const DivisionByZero& e) {
    error = error_json("DivisionByZero", e.what());
    return kUsageError;
  } catch (const ResourceExceeded& e) {
    error = error_json("ResourceExceeded", e.what());
    return kResourceError;
  } catch (const InternalError& e) {
    error = error_json("InternalError", e.what());
    return kInternalError;
  }
}

std::string vec_text(const VecPoly& v, const std::vector<std::string>& vars) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.rank(); ++k) s += (k ? ", " : "") + format_poly(v[k], vars);
  return s + "]";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

class Session {
 public:
  Session(const std::string& command, const ProblemFile& p, const Flags& f)
      : command_(command), p_(p), f_(f), vars_(p.ring.vars), options_(groebner_options(f)) {
    decision_.seed = f.seed;
    decision_.extra_probes = f.probes;
    decision_.trials = f.trials;
    decision_.height = kHeight;
    decision_.groebner = options_;
  }

  Envelope run() {
    using Handler = void (Session::*)(const Query&, json&, int&);
    static const std::vector<std::pair<std::string, std::vector<std::string>>> kinds = {
        {"member", {"member"}},
        {"nss-decide", {"vanish"}},
        {"nss-certify", {"certify"}},
        {"witness-check", {"semiprime", "prime", "completely-prime", "completely-semiprime"}},
        {"intersect", {"intersect"}},
        {"embed", {"embed"}},
        {"decompose", {"decompose"}},
    };
    Handler handler = nullptr;
    if (command_ == "member") handler = &Session::member;
    else if (command_ == "nss-decide") handler = &Session::decide;
    else if (command_ == "nss-certify") handler = &Session::certify;
    else if (command_ == "witness-check") handler = &Session::witness;
    else if (command_ == "intersect") handler = &Session::intersect;
    else if (command_ == "embed") handler = &Session::embed;
    else if (command_ == "decompose") handler = &Session::decompose;

    const auto t0 = std::chrono::steady_clock::now();
    json results = json::array();
    int code = kPositive;
    if (command_ == "gb" || command_ == "sample") {
      json r = {{"kind", command_}};
      int c = timed(r, [&](json& rr) { return command_ == "gb" ? gb(rr) : sample(rr); });
      results.push_back(std::move(r));
      code = std::max(code, c);
    } else {
      const auto& wanted = std::find_if(kinds.begin(), kinds.end(), [&](const auto& k) { return k.first == command_; })->second;
      std::size_t index = 0;
      for (const auto& q : p_.queries) {
        ++index;
        if (std::find(wanted.begin(), wanted.end(), q.kind) == wanted.end()) continue;
        json r = {{"query", index}, {"kind", q.kind}, {"args", arg_texts(q)}};
        text_ += "[" + std::to_string(index) + "] " + q.kind + (q.args.empty() ? "" : " " + join(arg_texts(q), ", ")) + ": ";
        int c = timed(r, [&](json& rr) {
          int out = kPositive;
          (this->*handler)(q, rr, out);
          return out;
        });
        results.push_back(std::move(r));
        code = std::max(code, c);
      }
      if (results.empty()) {
        throw InvalidInput("no " + join(wanted, "/") + " queries in the problem file");
      }
    }
    const bool stored = save_caches();

    Envelope e;
    e.json = {{"command", command_}, {"ring", ring_json(p_.ring)}, {"config", config_json(f_)}, {"results", results}};
    if (f_.cache_dir) e.json["cache"] = loaded_ ? "hit" : stored ? "stored" : "unused";
    if (f_.timings) {
      e.json["timings"] = {{"totalMs", elapsed_ms(t0)}};
    }
    e.json["exit"] = code;
    e.exit_code = code;
    e.text = text_ + "exit " + std::to_string(code) + "\n";
    return e;
  }

 private:
  static double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }

  int timed(json& r, const std::function<int(json&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    json error;
    int c = guarded([&] { return body(r); }, error);
    if (!error.is_null()) {
      r["error"] = error;
      text_ += "error: " + error["message"].get<std::string>() + "\n";
    }
    r["exit"] = c;
    if (f_.timings) r["ms"] = elapsed_ms(t0);
    return c;
  }

  std::vector<std::string> arg_texts(const Query& q) const {
    std::vector<std::string> out;
    for (const auto& a : q.args) out.push_back((a.key ? *a.key + "=" : std::string()) + format_value(a.value, vars_));
    return out;
  }

  bool quat() const { return p_.ring.mode == Mode::Quat; }

  // --- ideals and the GB cache -------------------------------------------

  std::string cache_key() const {
    std::string key = quat() ? "quat" : "matrix n=" + std::to_string(p_.ring.n);
    key += " d=" + std::to_string(p_.ring.d) + " order=" + options_.order.describe() + "\n";
    for (const auto& g : p_.generators) key += format_value(g, vars_) + "\n";
    return key;
  }

  fs::path cache_path() const { return fs::path(*f_.cache_dir) / ("gb-" + hex64(fnv1a64(cache_key())) + ".json"); }

  std::optional<ModuleBasis> load_cached() {
    if (!f_.cache_dir) return std::nullopt;
    std::ifstream in(cache_path());
    if (!in) return std::nullopt;
    try {
      json j = json::parse(in);
      if (j.at("key").get<std::string>() != cache_key()) return std::nullopt;
      return qnss::json::basis_from_json(j.at("basis"));
    } catch (const std::exception&) {
      return std::nullopt;  // unreadable cache entries are recomputed
    }
  }

  const MatLeftIdeal& matrix_ideal() {
    if (!mat_) {
      auto gens = p_.matrix_generators();
      if (auto cached = load_cached()) {
        try {
          mat_ = MatLeftIdeal(p_.ring.n, p_.ring.d, gens, std::move(*cached));
          loaded_ = true;
        } catch (const InvalidInput&) {
        }
      }
      if (!mat_) mat_ = MatLeftIdeal(p_.ring.n, p_.ring.d, std::move(gens), options_);
    }
    return *mat_;
  }

  const QuatLeftIdeal& quat_ideal() {
    if (!quat_) {
      auto gens = p_.quat_generators();
      if (auto cached = load_cached()) {
        try {
          quat_ = QuatLeftIdeal(p_.ring.d, gens, std::move(*cached));
          loaded_ = true;
        } catch (const InvalidInput&) {
        }
      }
      if (!quat_) quat_ = QuatLeftIdeal(p_.ring.d, std::move(gens), options_);
    }
    return *quat_;
  }

  bool save_caches() {
    if (!f_.cache_dir || loaded_) return false;
    const ModuleBasis* basis = nullptr;
    if (mat_ && mat_->row_basis_ready()) basis = &mat_->row_basis();
    if (quat_ && quat_->basis_ready()) basis = &quat_->basis();
    if (!basis) return false;
    fs::create_directories(*f_.cache_dir);
    json j = {{"key", cache_key()}, {"basis", qnss::json::to_json(*basis)}};
    fs::path target = cache_path();
    fs::path tmp = target;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << j.dump() << "\n";
    }
    fs::rename(tmp, target);
    return true;
  }

  std::vector<MatPoly> embedded_generators() const {
    std::vector<MatPoly> out;
    for (const auto& g : p_.quat_generators()) out.push_back(phi_embed(g));
    return out;
  }

  // --- commands ----------------------------------------------------------

  int gb(json& r) {
    std::vector<std::string> lines;
    bool unit = false;
    if (quat()) {
      const ModuleBasis& B = quat_ideal().basis();
      for (const auto& v : B.generators()) lines.push_back(format_poly(quat_from_components(v), vars_));
      unit = B.is_unit_module();
    } else {
      const ModuleBasis& B = matrix_ideal().row_basis();
      for (const auto& v : B.generators()) lines.push_back(vec_text(v, vars_));
      unit = B.is_unit_module();
    }
    r["order"] = options_.order.describe();
    r["size"] = lines.size();
    r["unit"] = unit;
    r["basis"] = lines;
    text_ += "gb (" + std::to_string(lines.size()) + " elements" + (unit ? ", unit" : "") + ")\n";
    for (const auto& l : lines) text_ += "  " + l + "\n";
    return kPositive;
  }

  int sample(json& r) {
    std::vector<MatPoly> gens = quat() ? embedded_generators() : p_.matrix_generators();
    SampleConfig cfg{f_.seed, f_.trials, kHeight, true};
    auto zeros = sample_directional_zeros(gens, p_.ring.n, p_.ring.d, cfg);
    json points = json::array();
    json ev = {{"kind", "zeros"}, {"ring", ring_json(p_.ring)}};
    std::size_t found = zeros.size();
    if (quat()) {
      // Different directions can give the same good point.
      std::vector<GoodPoint> seen;
      for (const auto& z : zeros) {
        GoodPoint a = directional_to_good_point(z);
        if (std::find(seen.begin(), seen.end(), a) == seen.end()) seen.push_back(std::move(a));
      }
      found = seen.size();
      for (std::size_t k = 0; k < seen.size() && k < kMaxSamplePoints; ++k) {
        json pt = json::array();
        for (const auto& q : seen[k].coordinates()) pt.push_back(format_scalar(q));
        points.push_back(pt);
      }
    }
    for (std::size_t k = 0; !quat() && k < zeros.size() && k < kMaxSamplePoints; ++k) {
      {
        json a = json::array(), v = json::array();
        for (const auto& z : zeros[k].a()) a.push_back(format_scalar(z));
        for (const auto& z : zeros[k].v()) v.push_back(format_scalar(z));
        points.push_back({{"a", a}, {"v", v}});
      }
    }
    ev["generators"] = quat() ? json(texts(p_.quat_generators(), vars_)) : json(texts(p_.matrix_generators(), vars_));
    ev["points"] = points;
    r["found"] = found;
    r["evidence"] = json::array({ev});
    text_ += "sample: " + std::to_string(found) + " zeros found, " + std::to_string(points.size()) + " listed\n";
    for (const auto& pt : points) text_ += "  " + pt.dump() + "\n";
    return found == 0 ? kNegative : kPositive;
  }

  void member(const Query& q, json& r, int& code) {
    json ev = {{"kind", "membership"}, {"ring", ring_json(p_.ring)}};
    bool member = false;
    if (quat()) {
      const QPoly& t = std::get<QPoly>(q.args[0].value);
      auto h = quat_membership(t, quat_ideal());
      member = h.has_value();
      ev["generators"] = texts(p_.quat_generators(), vars_);
      ev["target"] = format_poly(t, vars_);
      if (h) ev["cofactors"] = texts(*h, vars_);
    } else {
      const MatPoly& T = std::get<MatPoly>(q.args[0].value);
      auto H = left_ideal_membership(T, matrix_ideal());
      member = H.has_value();
      ev["generators"] = texts(p_.matrix_generators(), vars_);
      ev["target"] = format_matrix(T, vars_);
      if (H) ev["cofactors"] = texts(*H, vars_);
    }
    ev["member"] = member;
    r["member"] = member;
    if (ev.contains("cofactors")) r["cofactors"] = ev["cofactors"];
    r["evidence"] = json::array({ev});
    text_ += member ? "member\n" : "not a member\n";
    if (member) text_ += "  cofactors: " + join(ev["cofactors"].get<std::vector<std::string>>(), "; ") + "\n";
    code = member ? kPositive : kNegative;
  }

  void decide(const Query& q, json& r, int& code) {
    DecisionOutcome out;
    std::optional<GoodPoint> point;
    MatPoly F;
    std::vector<MatPoly> gens;
    if (quat()) {
      const QPoly& f = std::get<QPoly>(q.args[0].value);
      QuatDecision qd = decide_quat_vanishing(f, quat_ideal(), decision_);
      out = std::move(qd.matrix);
      point = std::move(qd.witness);
      F = phi_embed(f);
      gens = embedded_generators();
    } else {
      F = std::get<MatPoly>(q.args[0].value);
      gens = p_.matrix_generators();
      out = decide_directional_vanishing(F, matrix_ideal(), decision_);
    }
    json evidence = json::array();
    json probes = json::array();
    for (const auto& pr : out.probes) probes.push_back({{"A", gauss_matrix_text(pr.A)}, {"unit", pr.unit}});
    r["verdict"] = to_string(out.verdict);
    r["phase"] = out.phase;
    r["probes"] = probes;
    r["notes"] = out.notes;
    std::string detail;
    if (out.certificate) {
      r["N"] = out.certificate->N;
      detail += ", N=" + std::to_string(out.certificate->N);
      evidence.push_back(matrix_certificate_json(*out.certificate, F, gens, vars_));
    }
    if (out.refuting_A) {
      r["refutingA"] = gauss_matrix_text(*out.refuting_A);
      detail += ", A=" + gauss_matrix_text(*out.refuting_A);
      evidence.push_back(probe_json(*out.refuting_A, F, gens, vars_));
    }
    if (out.witness) evidence.push_back(matrix_witness_json(*out.witness, F, gens, vars_));
    if (point) {
      json pt = json::array();
      for (const auto& c : point->coordinates()) pt.push_back(format_scalar(c));
      r["witness"] = pt;
      detail += ", witness a=" + join(pt.get<std::vector<std::string>>(), ",");
      evidence.push_back(quat_witness_json(*point, std::get<QPoly>(q.args[0].value), p_.quat_generators(), vars_));
    } else if (out.witness) {
      json a = json::array(), v = json::array();
      for (const auto& z : out.witness->a()) a.push_back(format_scalar(z));
      for (const auto& z : out.witness->v()) v.push_back(format_scalar(z));
      r["witness"] = {{"a", a}, {"v", v}};
      detail += ", witness a=" + join(a.get<std::vector<std::string>>(), ",") + " v=" +
                join(v.get<std::vector<std::string>>(), ",");
    }
    r["evidence"] = evidence;
    text_ += to_string(out.verdict) + " [" + out.phase + detail + "]\n";
    code = exit_for(out.verdict);
  }

  void certify(const Query& q, json& r, int& code) {
    const QueryArg* key = q.args.size() > 1 ? &q.args[1] : nullptr;
    json evidence = json::array();
    std::optional<unsigned> N;
    if (quat()) {
      const QPoly& f = std::get<QPoly>(q.args[0].value);
      if (key) {
        QuatQ b = std::get<QPoly>(key->value).constant_term();
        if (auto c = quat_power_certificate(f, b, quat_ideal())) {
          N = c->N;
          evidence.push_back(quat_certificate_json(*c, vars_));
        } else {
          MatPoly phib = phi_embed(QPoly::constant(0, b));
          GaussMatrix A = {{phib(0, 0).constant_term(), phib(0, 1).constant_term()},
                           {phib(1, 0).constant_term(), phib(1, 1).constant_term()}};
          evidence.push_back(probe_json(A, phi_embed(f), embedded_generators(), vars_));
        }
      } else if (auto c = uniform_power_certificate(phi_embed(f), embed_left_ideal(quat_ideal()))) {
        N = c->N;
        evidence.push_back(matrix_certificate_json(*c, phi_embed(f), embedded_generators(), vars_));
      }
    } else {
      const MatPoly& F = std::get<MatPoly>(q.args[0].value);
      const auto gens = p_.matrix_generators();
      if (key) {
        const MatPoly& Am = std::get<MatPoly>(key->value);
        GaussMatrix A(Am.n(), GaussVector(Am.n()));
        for (std::size_t i = 0; i < Am.n(); ++i) {
          for (std::size_t j = 0; j < Am.n(); ++j) A[i][j] = Am(i, j).constant_term();
        }
        if (auto c = power_certificate(F, A, matrix_ideal())) {
          N = c->N;
          evidence.push_back(matrix_certificate_json(*c, F, gens, vars_));
        } else {
          evidence.push_back(probe_json(A, F, gens, vars_));
        }
      } else if (auto c = uniform_power_certificate(F, matrix_ideal())) {
        N = c->N;
        evidence.push_back(matrix_certificate_json(*c, F, gens, vars_));
      }
    }
    r["certified"] = N.has_value();
    if (N) r["N"] = *N;
    r["evidence"] = evidence;
    text_ += N ? "certificate N=" + std::to_string(*N) + "\n" : std::string("no certificate\n");
    code = N ? kPositive : kNegative;
  }

  void witness(const Query& q, json& r, int& code) {
    Witness w;
    if (quat()) {
      const QuatLeftIdeal& I = quat_ideal();
      auto arg = [&](std::size_t k) -> const QPoly& { return std::get<QPoly>(q.args[k].value); };
      if (q.kind == "semiprime") w = semiprime_witness_quat(I, arg(0));
      else if (q.kind == "prime") w = prime_pair_quat(I, complex_split(arg(0)).first, arg(1));
      else if (q.kind == "completely-prime") w = completely_prime_pair_quat(I, arg(0), arg(1));
      else w = completely_semiprime_witness(I, arg(0));
    } else {
      const MatLeftIdeal& I = matrix_ideal();
      auto arg = [&](std::size_t k) -> const MatPoly& { return std::get<MatPoly>(q.args[k].value); };
      if (q.kind == "semiprime") w = semiprime_witness_matrix(I, arg(0));
      else if (q.kind == "prime") w = prime_pair_matrix(I, std::get<MPoly>(q.args[0].value), arg(1));
      else w = completely_semiprime_matrix(I, arg(0));
    }
    json ev = {{"kind", "witness"}, {"ring", ring_json(p_.ring)}, {"predicate", q.kind},
               {"args", arg_texts(q)}, {"result", to_string(w)}};
    ev["generators"] = quat() ? json(texts(p_.quat_generators(), vars_)) : json(texts(p_.matrix_generators(), vars_));
    r["witness"] = to_string(w);
    r["evidence"] = json::array({ev});
    text_ += to_string(w) + "\n";
    code = w == Witness::Violation ? kPositive : kNegative;
  }

  void intersect(const Query& q, json& r, int& code) {
    GroebnerOptions plain = options_;
    plain.track_cofactors = false;
    std::vector<std::string> out;
    json ev = {{"kind", "intersection"}, {"ring", ring_json(p_.ring)}};
    if (quat()) {
      std::vector<QPoly> other;
      for (const auto& a : q.args) other.push_back(std::get<QPoly>(a.value));
      QuatLeftIdeal J(p_.ring.d, other, options_);
      auto m1 = quat_ideal().module_generators();
      auto m2 = J.module_generators();
      for (const auto& v : module_intersect(m1, m2, 4, p_.ring.d, plain)) {
        out.push_back(format_poly(quat_from_components(v), vars_));
      }
      ev["generators"] = texts(p_.quat_generators(), vars_);
      ev["other"] = texts(other, vars_);
    } else {
      std::vector<MatPoly> other;
      for (const auto& a : q.args) other.push_back(std::get<MatPoly>(a.value));
      MatLeftIdeal J(p_.ring.n, p_.ring.d, other, options_);
      auto m1 = matrix_ideal().row_generators();
      auto m2 = J.row_generators();
      for (const auto& v : module_intersect(m1, m2, p_.ring.n, p_.ring.d, plain)) {
        // The row module determines the left ideal; v as the first row generates it.
        MatPoly M(p_.ring.n, p_.ring.d);
        M.set_row(0, v);
        out.push_back(format_matrix(M, vars_));
      }
      ev["generators"] = texts(p_.matrix_generators(), vars_);
      ev["other"] = texts(other, vars_);
    }
    ev["intersection"] = out;
    r["intersection"] = out;
    r["evidence"] = json::array({ev});
    text_ += std::to_string(out.size()) + " generators\n";
    for (const auto& s : out) text_ += "  " + s + "\n";
    code = kPositive;
  }

  void embed(const Query& q, json& r, int& code) {
    std::vector<std::string> out;
    if (q.args.empty()) {
      out = texts(embedded_generators(), vars_);
    } else {
      out.push_back(format_matrix(phi_embed(std::get<QPoly>(q.args[0].value)), vars_));
    }
    r["matrices"] = out;
    text_ += join(out, "; ") + "\n";
    code = kPositive;
  }

  void decompose(const Query& q, json& r, int& code) {
    const MatPoly& A = std::get<MatPoly>(q.args[0].value);
    auto [z, w] = phi_decompose(A);
    r["z"] = format_poly(z, vars_);
    r["w"] = format_poly(w, vars_);
    json ev = {{"kind", "decomposition"}, {"ring", ring_json(p_.ring)}, {"A", format_matrix(A, vars_)},
               {"z", r["z"]}, {"w", r["w"]}};
    r["evidence"] = json::array({ev});
    text_ += "z = " + r["z"].get<std::string>() + ", w = " + r["w"].get<std::string>() + "\n";
    code = kPositive;
  }

  std::string command_;
  const ProblemFile& p_;
  const Flags& f_;
  std::vector<std::string> vars_;
  GroebnerOptions options_;
  DecisionConfig decision_;
  std::optional<MatLeftIdeal> mat_;
  std::optional<QuatLeftIdeal> quat_;
  bool loaded_ = false;
  std::string text_;
};

Envelope error_envelope(const std::string& command, const json& error, int code) {
  Envelope e;
  e.json = {{"command", command}, {"error", error}, {"exit", code}};
  e.exit_code = code;
  e.text = "error: " + error["message"].get<std::string>() + "\nexit " + std::to_string(code) + "\n";
  return e;
}

}  // namespace

Envelope dispatch(const std::string& command, const ProblemFile& problem, const Flags& flags) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end() || command == "verify-cert") {
    return error_envelope(command, error_json("UsageError", "unknown command '" + command + "'"), kUsageError);
  }
  Envelope out;
  json error;
  int code = guarded(
      [&] {
        out = Session(command, problem, flags).run();
        return out.exit_code;
      },
      error);
  if (!error.is_null()) return error_envelope(command, error, code);
  return out;
}

Envelope verify_document(const json& doc, const Flags& flags) {
  json error;
  Envelope out;
  int code = guarded(
      [&] {
        GroebnerOptions options = groebner_options(flags);
        std::vector<json> items;
        if (doc.is_object() && doc.contains("kind")) {
          items.push_back(doc);
        } else if (doc.is_object() && doc.contains("results")) {
          for (const auto& r : doc.at("results")) {
            if (r.contains("evidence")) {
              for (const auto& e : r.at("evidence")) items.push_back(e);
            }
          }
        } else {
          throw InvalidInput("expected a certificate, an evidence object or an envelope");
        }
        json checks = json::array();
        bool valid = true;
        std::string text;
        for (const auto& item : items) {
          Check c = verify_evidence(item, options);
          valid = valid && c.valid;
          checks.push_back({{"kind", c.kind}, {"valid", c.valid}, {"problems", c.problems}});
          text += c.kind + ": " + (c.valid ? "valid" : "INVALID") + "\n";
          for (const auto& p : c.problems) text += "  " + p + "\n";
        }
        const int c = valid ? kPositive : kNegative;
        out.json = {{"command", "verify-cert"}, {"valid", valid}, {"checks", checks}, {"exit", c}};
        out.exit_code = c;
        out.text = text + "exit " + std::to_string(c) + "\n";
        return c;
      },
      error);
  if (!error.is_null()) return error_envelope("verify-cert", error, code);
  return out;
}

Envelope run_file(const std::string& command, const std::string& path, const Flags& flags) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return error_envelope(command, error_json("IOError", "cannot read '" + path + "'"), kUsageError);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (command == "verify-cert") {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) return error_envelope(command, error_json("JsonError", "'" + path + "' is not valid JSON"), kUsageError);
    return verify_document(doc, flags);
  }
  ProblemFile problem;
  json error;
  int code = guarded(
      [&] {
        problem = parse_problem(text);
        return kPositive;
      },
      error);
  if (!error.is_null()) return error_envelope(command, error, code);
  return dispatch(command, problem, flags);
}

std::string render(const Envelope& e, const std::string& format) {
  if (format == "text") return e.text;
  return e.json.dump(2) + "\n";
}

}  // namespace qnss::cli
