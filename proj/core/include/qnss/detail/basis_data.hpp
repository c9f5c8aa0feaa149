#pragma once

#include <cstdint>
#include <vector>

#include "qnss/groebner.hpp"

namespace qnss::detail {

struct MTerm {
  std::uint32_t pos;
  Monomial mono;
  GaussQ coef;
};

/// Module terms sorted descending by the active module order.
using MVec = std::vector<MTerm>;

struct BasisData {
  std::size_t rank = 0;
  std::size_t nvars = 0;
  ModuleOrder order;
  bool reduced = false;
  std::vector<VecPoly> gens;
  std::vector<MVec> vecs;
  bool has_cofactors = false;
  std::vector<VecPoly> original;
  std::vector<std::vector<MPoly>> cofactors;
};

MVec to_mvec(const VecPoly& v, const ModuleOrder& order);
VecPoly from_mvec(const MVec& v, std::size_t rank, std::size_t nvars);

}  // namespace qnss::detail
