#pragma once

// Problem files:
//
//   ring quat d=1;                       (optional: vars=u,v)
//   ring matrix n=2 d=1;
//   gen <polynomial or matrix>;
//   query <kind> arg, arg, key=value;
//
// '#' starts a comment. Kinds: vanish, member, certify, semiprime, prime,
// completely-prime, completely-semiprime, intersect, decompose, embed.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qnss/matpoly.hpp"

namespace qnss::cli {

enum class Mode { Quat, Matrix };

struct RingHeader {
  Mode mode = Mode::Quat;
  std::size_t d = 0;
  std::size_t n = 2;  // fixed at 2 in quat mode (the embedding dimension)
  std::vector<std::string> vars;

  friend bool operator==(const RingHeader&, const RingHeader&) = default;
};

using Value = std::variant<QPoly, MatPoly, MPoly>;

struct QueryArg {
  std::optional<std::string> key;
  Value value;

  friend bool operator==(const QueryArg&, const QueryArg&) = default;
};

struct Query {
  std::string kind;
  std::vector<QueryArg> args;
  std::size_t line = 0;  // not part of equality

  friend bool operator==(const Query& a, const Query& b) { return a.kind == b.kind && a.args == b.args; }
};

struct ProblemFile {
  RingHeader ring;
  std::vector<Value> generators;
  std::vector<Query> queries;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;

  std::vector<QPoly> quat_generators() const;
  std::vector<MatPoly> matrix_generators() const;
};

/// Throws SyntaxError (with line and column) on malformed input.
ProblemFile parse_problem(std::string_view text);
/// Canonical text; parse_problem(serialize_problem(p)) == p.
std::string serialize_problem(const ProblemFile& p);

std::string format_value(const Value& v, const std::vector<std::string>& vars);
bool is_reserved_name(const std::string& name, std::size_t n);
const std::vector<std::string>& query_kinds();

}  // namespace qnss::cli
