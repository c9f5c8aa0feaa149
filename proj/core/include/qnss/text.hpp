#pragma once

// Text grammar for scalars, polynomials and matrices.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*          juxtaposition multiplies
//   factor := atom ['^' digits]
//   atom   := digits ['/' digits] | 'i' | 'I' | 'J' | 'K' | variable | '(' expr ')'
//   matrix := '[' row (',' row)* ']'   with   row := '[' expr (',' expr)* ']'
//
// Products keep their written order, which matters for quaternion
// coefficients. In matrix mode 'i' and 'I' both denote the imaginary unit
// and 'J', 'K' are rejected. Variable names match longest-first.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qnss/matpoly.hpp"

namespace qnss {

/// 1-based position of the first character of a fragment inside a larger file.
struct SourceOrigin {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// x1, x2, ..., xd.
std::vector<std::string> default_variable_names(std::size_t d);

MPoly parse_mpoly(std::string_view text, std::span<const std::string> vars, SourceOrigin origin = {});
QPoly parse_qpoly(std::string_view text, std::span<const std::string> vars, SourceOrigin origin = {});
/// Square matrix of expressions; when n is given the size must match.
MatPoly parse_matpoly(std::string_view text, std::span<const std::string> vars, std::optional<std::size_t> n = {},
                      SourceOrigin origin = {});
GaussQ parse_gauss(std::string_view text);
QuatQ parse_quat(std::string_view text);

/// Canonical forms, e.g. "x1^2 + (1-2i)*x1 - 1/2i". Parsing the output
/// reproduces the input exactly.
std::string format_poly(const MPoly& p, std::span<const std::string> vars);
std::string format_poly(const QPoly& p, std::span<const std::string> vars);
std::string format_matrix(const MatPoly& m, std::span<const std::string> vars);
std::string format_scalar(const GaussQ& z);
std::string format_scalar(const QuatQ& q);
std::string format_monomial(const Monomial& m, std::span<const std::string> vars);

/// Line and column of byte offset `offset` in `text`, counted from `origin`.
SourceOrigin locate(std::string_view text, std::size_t offset, SourceOrigin origin = {});

}  // namespace qnss
