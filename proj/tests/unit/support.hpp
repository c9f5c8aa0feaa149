#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qnss/text.hpp"

namespace qnss::test {

inline std::vector<std::string> vars(std::size_t d) { return default_variable_names(d); }

inline MPoly P(std::string_view s, std::size_t d = 1) { return parse_mpoly(s, vars(d)); }
inline QPoly Q(std::string_view s, std::size_t d = 1) { return parse_qpoly(s, vars(d)); }
inline MatPoly M(std::string_view s, std::size_t d = 1) { return parse_matpoly(s, vars(d)); }

inline VecPoly V(std::initializer_list<std::string_view> comps, std::size_t d = 1) {
  std::vector<MPoly> c;
  for (auto s : comps) c.push_back(P(s, d));
  return VecPoly(std::move(c));
}

inline Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace qnss::test
