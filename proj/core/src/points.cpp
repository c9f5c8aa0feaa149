#include "qnss/points.hpp"

#include <algorithm>

namespace qnss {

GoodPoint::GoodPoint(std::vector<QuatQ> coordinates) : a_(std::move(coordinates)) {
  for (std::size_t l = 0; l < a_.size(); ++l) {
    for (std::size_t m = l + 1; m < a_.size(); ++m) {
      if (a_[l] * a_[m] != a_[m] * a_[l]) {
        throw InvalidInput("coordinates " + std::to_string(l + 1) + " and " + std::to_string(m + 1) +
                           " do not commute");
      }
    }
  }
}

DirectionalPoint::DirectionalPoint(GaussVector a, GaussVector v) : a_(std::move(a)), v_(std::move(v)) {
  if (std::all_of(v_.begin(), v_.end(), [](const GaussQ& z) { return z.is_zero(); })) {
    throw InvalidInput("direction vector must be nonzero");
  }
}

QuatQ eval_quat(const QPoly& f, const GoodPoint& a) {
  if (f.nvars() != a.dimension()) throw ShapeError("point dimension does not match the ring");
  return evaluate<QuatQ, QuatQ>(f, a.coordinates());
}

GoodPoint conjugate_point(const QPoly& g, const GoodPoint& a) {
  QuatQ ga = eval_quat(g, a);
  if (ga.is_zero()) throw NotInvertible("g(a) = 0; the conjugated point is undefined");
  QuatQ inv = ga.inverse();
  std::vector<QuatQ> b;
  b.reserve(a.dimension());
  for (const auto& al : a.coordinates()) b.push_back(ga * al * inv);
  return GoodPoint(std::move(b));
}

GaussVector eval_matrix(const MatPoly& F, const DirectionalPoint& p) {
  if (F.nvars() != p.a().size() || F.n() != p.v().size()) {
    throw ShapeError("directional point does not match the matrix shape");
  }
  return multiply(evaluate(F, p.a()), p.v());
}

}  // namespace qnss
