#include "qnss_cli/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qnss/errors.hpp"
#include "qnss/text.hpp"

namespace qnss::cli {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

// A slice of the file that remembers where it starts.
struct Piece {
  std::string_view text;
  std::size_t offset = 0;
};

Piece trim(Piece p) {
  std::size_t b = 0;
  std::size_t e = p.text.size();
  while (b < e && is_space(p.text[b])) ++b;
  while (e > b && is_space(p.text[e - 1])) --e;
  return {p.text.substr(b, e - b), p.offset + b};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(text), clean_(text) {
    // Comments become blanks so offsets keep pointing into the original.
    bool comment = false;
    for (char& c : clean_) {
      if (c == '\n') comment = false;
      else if (c == '#') comment = true;
      if (comment) c = ' ';
    }
  }

  ProblemFile run() {
    ProblemFile out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= clean_.size(); ++k) {
      if (k < clean_.size() && clean_[k] != ';') continue;
      Piece stmt = trim({std::string_view(clean_).substr(start, k - start), start});
      start = k + 1;
      if (!stmt.text.empty()) statement(stmt, out);
    }
    if (!have_ring_) throw SyntaxError("missing ring header", 1, 1);
    return out;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& msg) const {
    SourceOrigin at = locate(src_, offset);
    throw SyntaxError(msg, at.line, at.column);
  }

  SourceOrigin origin(std::size_t offset) const { return locate(src_, offset); }

  static std::pair<Piece, Piece> split_word(Piece p) {
    std::size_t e = 0;
    while (e < p.text.size() && !is_space(p.text[e]) && p.text[e] != '(' && p.text[e] != '[') ++e;
    return {{p.text.substr(0, e), p.offset}, trim({p.text.substr(e), p.offset + e})};
  }

  void statement(Piece stmt, ProblemFile& out) {
    auto [word, rest] = split_word(stmt);
    if (word.text == "ring") {
      if (have_ring_) fail(stmt.offset, "duplicate ring header");
      out.ring = ring_header(rest, stmt.offset);
      ring_ = out.ring;
      have_ring_ = true;
    } else if (word.text == "gen") {
      if (rest.text.empty()) fail(stmt.offset, "gen needs an expression");
      if (!have_ring_) {
        // Surface syntax errors first; a bare fragment still gets a location.
        std::vector<std::string> loose = default_variable_names(64);
        parse_qpoly(rest.text, loose, origin(rest.offset));
        fail(stmt.offset, "gen before ring header");
      }
      out.generators.push_back(positional(rest, false));
    } else if (word.text == "query") {
      if (!have_ring_) fail(stmt.offset, "query before ring header");
      out.queries.push_back(query(rest, stmt.offset));
    } else {
      fail(stmt.offset, "unknown statement '" + std::string(word.text) + "'");
    }
  }

  RingHeader ring_header(Piece rest, std::size_t at) {
    RingHeader h;
    std::vector<Piece> tokens;
    std::size_t k = 0;
    while (k < rest.text.size()) {
      while (k < rest.text.size() && is_space(rest.text[k])) ++k;
      std::size_t b = k;
      while (k < rest.text.size() && !is_space(rest.text[k])) ++k;
      if (k > b) tokens.push_back({rest.text.substr(b, k - b), rest.offset + b});
    }
    if (tokens.empty()) fail(at, "ring header needs a mode (quat or matrix)");
    if (tokens[0].text == "quat") h.mode = Mode::Quat;
    else if (tokens[0].text == "matrix") h.mode = Mode::Matrix;
    else fail(tokens[0].offset, "unknown ring mode '" + std::string(tokens[0].text) + "'");

    std::optional<std::size_t> d, n;
    std::optional<Piece> vars;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const Piece& tok = tokens[t];
      auto eq = tok.text.find('=');
      if (eq == std::string_view::npos) fail(tok.offset, "expected key=value");
      std::string_view key = tok.text.substr(0, eq);
      Piece value{tok.text.substr(eq + 1), tok.offset + eq + 1};
      if (key == "d" || key == "n") {
        auto& slot = key == "d" ? d : n;
        if (slot) fail(tok.offset, "duplicate '" + std::string(key) + "'");
        slot = number(value);
      } else if (key == "vars") {
        if (vars) fail(tok.offset, "duplicate 'vars'");
        vars = value;
      } else {
        fail(tok.offset, "unknown ring option '" + std::string(key) + "'");
      }
    }
    if (!d) fail(at, "ring header needs d=");
    h.d = *d;
    if (h.d > 64) fail(at, "at most 64 variables");
    if (h.mode == Mode::Quat) {
      if (n) fail(at, "quat rings take no n=");
      h.n = 2;
    } else {
      if (!n) fail(at, "matrix rings need n=");
      if (*n < 1 || *n > 9) fail(at, "n must be between 1 and 9");
      h.n = *n;
    }
    if (vars) {
      std::size_t b = 0;
      std::string_view v = vars->text;
      for (std::size_t k2 = 0; k2 <= v.size(); ++k2) {
        if (k2 < v.size() && v[k2] != ',') continue;
        std::string name(v.substr(b, k2 - b));
        std::size_t off = vars->offset + b;
        if (name.empty() || !is_ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), is_ident_char)) {
          fail(off, "bad variable name '" + name + "'");
        }
        if (is_reserved_name(name, h.n)) fail(off, "variable name '" + name + "' is reserved");
        if (std::find(h.vars.begin(), h.vars.end(), name) != h.vars.end()) {
          fail(off, "duplicate variable '" + name + "'");
        }
        h.vars.push_back(std::move(name));
        b = k2 + 1;
      }
      if (h.vars.size() != h.d) fail(vars->offset, "vars lists " + std::to_string(h.vars.size()) + " names, d is " +
                                                       std::to_string(h.d));
    } else {
      h.vars = default_variable_names(h.d);
    }
    return h;
  }

  std::size_t number(Piece p) const {
    if (p.text.empty() || p.text.size() > 4 ||
        !std::all_of(p.text.begin(), p.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(p.offset, "expected a small non-negative integer");
    }
    return std::stoul(std::string(p.text));
  }

  // Matrix mode: matrices, or scalar polynomials when `scalar` is set.
  Value positional(Piece p, bool scalar) const {
    if (p.text.empty()) fail(p.offset, "empty argument");
    SourceOrigin at = origin(p.offset);
    if (ring_.mode == Mode::Quat) return parse_qpoly(p.text, ring_.vars, at);
    if (scalar) return parse_mpoly(p.text, ring_.vars, at);
    return parse_matpoly(p.text, ring_.vars, ring_.n, at);
  }

  std::vector<Piece> split_args(Piece p) const {
    std::vector<Piece> out;
    if (p.text.empty()) return out;
    int depth = 0;
    std::size_t b = 0;
    for (std::size_t k = 0; k <= p.text.size(); ++k) {
      if (k < p.text.size()) {
        char c = p.text[k];
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c != ',' || depth != 0) continue;
      }
      Piece a = trim({p.text.substr(b, k - b), p.offset + b});
      if (a.text.empty()) fail(a.offset, "empty argument");
      out.push_back(a);
      b = k + 1;
    }
    return out;
  }

  Query query(Piece rest, std::size_t at) {
    auto [kind, args_text] = split_word(rest);
    if (kind.text.empty()) fail(at, "query needs a kind");
    const auto& kinds = query_kinds();
    Query q;
    q.kind = std::string(kind.text);
    q.line = origin(at).line;
    if (std::find(kinds.begin(), kinds.end(), q.kind) == kinds.end()) {
      fail(kind.offset, "unknown query kind '" + q.kind + "'");
    }
    const bool quat = ring_.mode == Mode::Quat;
    if (quat && q.kind == "decompose") fail(kind.offset, "decompose needs a matrix ring");
    if (!quat && (q.kind == "embed" || q.kind == "completely-prime")) {
      fail(kind.offset, q.kind + " needs a quat ring");
    }
    if (q.kind == "decompose" && ring_.n != 2) fail(kind.offset, "decompose needs n=2");

    std::size_t positional_count = 0;
    for (const Piece& a : split_args(args_text)) {
      std::size_t e = 0;
      while (e < a.text.size() && is_ident_char(a.text[e])) ++e;
      if (e > 0 && is_ident_start(a.text[0]) && e < a.text.size() && a.text[e] == '=') {
        std::string key(a.text.substr(0, e));
        Piece value = trim({a.text.substr(e + 1), a.offset + e + 1});
        const std::string want = quat ? "b" : "A";
        if (q.kind != "certify" || key != want) fail(a.offset, "unexpected option '" + key + "'");
        for (const auto& prev : q.args) {
          if (prev.key == key) fail(a.offset, "duplicate option '" + key + "'");
        }
        Value v = positional(value, false);
        bool constant = quat ? std::get<QPoly>(v).is_constant() : std::get<MatPoly>(v).is_constant();
        if (!constant) fail(value.offset, key + " must be constant");
        q.args.push_back({key, std::move(v)});
        continue;
      }
      if (std::any_of(q.args.begin(), q.args.end(), [](const QueryArg& x) { return x.key.has_value(); })) {
        fail(a.offset, "positional argument after an option");
      }
      const bool scalar = !quat && q.kind == "prime" && positional_count == 0;
      Value v = positional(a, scalar);
      if (quat && q.kind == "prime" && positional_count == 0 && !is_real_quat(std::get<QPoly>(v))) {
        fail(a.offset, "r must have real coefficients");
      }
      q.args.push_back({std::nullopt, std::move(v)});
      ++positional_count;
    }

    auto need = [&](std::size_t lo, std::size_t hi) {
      if (positional_count < lo || positional_count > hi) {
        std::string count = lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
        fail(kind.offset, q.kind + " takes " + count + " argument(s), got " + std::to_string(positional_count));
      }
    };
    if (q.kind == "prime" || q.kind == "completely-prime") need(2, 2);
    else if (q.kind == "intersect") need(1, 1000000);
    else if (q.kind == "embed") need(0, 1);
    else need(1, 1);
    return q;
  }

  static bool is_real_quat(const QPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_real(); });
  }

  std::string_view src_;
  std::string clean_;
  RingHeader ring_;
  bool have_ring_ = false;
};

}  // namespace

const std::vector<std::string>& query_kinds() {
  static const std::vector<std::string> kinds = {"vanish",   "member",           "certify",
                                                 "semiprime", "prime",           "completely-prime",
                                                 "completely-semiprime", "intersect", "decompose",
                                                 "embed"};
  return kinds;
}

bool is_reserved_name(const std::string& name, std::size_t n) {
  if (name == "y" || name == "i" || name == "I" || name == "J" || name == "K") return true;
  if (name.size() == 3 && name[0] == 'a') {
    auto in_range = [n](char c) { return c >= '1' && static_cast<std::size_t>(c - '0') <= n; };
    return in_range(name[1]) && in_range(name[2]);
  }
  return false;
}

std::vector<QPoly> ProblemFile::quat_generators() const {
  std::vector<QPoly> out;
  for (const auto& g : generators) out.push_back(std::get<QPoly>(g));
  return out;
}

std::vector<MatPoly> ProblemFile::matrix_generators() const {
  std::vector<MatPoly> out;
  for (const auto& g : generators) out.push_back(std::get<MatPoly>(g));
  return out;
}

ProblemFile parse_problem(std::string_view text) { return Parser(text).run(); }

std::string format_value(const Value& v, const std::vector<std::string>& vars) {
  if (const auto* q = std::get_if<QPoly>(&v)) return format_poly(*q, vars);
  if (const auto* m = std::get_if<MatPoly>(&v)) return format_matrix(*m, vars);
  return format_poly(std::get<MPoly>(v), vars);
}

std::string serialize_problem(const ProblemFile& p) {
  std::string out = "ring ";
  out += p.ring.mode == Mode::Quat ? "quat" : "matrix";
  if (p.ring.mode == Mode::Matrix) out += " n=" + std::to_string(p.ring.n);
  out += " d=" + std::to_string(p.ring.d);
  if (p.ring.vars != default_variable_names(p.ring.d)) {
    out += " vars=";
    for (std::size_t k = 0; k < p.ring.vars.size(); ++k) out += (k ? "," : "") + p.ring.vars[k];
  }
  out += ";\n";
  for (const auto& g : p.generators) out += "gen " + format_value(g, p.ring.vars) + ";\n";
  for (const auto& q : p.queries) {
    out += "query " + q.kind;
    for (std::size_t k = 0; k < q.args.size(); ++k) {
      out += k ? ", " : " ";
      if (q.args[k].key) out += *q.args[k].key + "=";
      out += format_value(q.args[k].value, p.ring.vars);
    }
    out += ";\n";
  }
  return out;
}

}  // namespace qnss::cli
