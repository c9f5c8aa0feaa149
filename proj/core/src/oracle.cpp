#include "qnss/oracle.hpp"

#include <algorithm>
#include <map>

namespace qnss {

long Rng::integer(long lo, long hi) {
  if (hi < lo) throw InvalidInput("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::rational(long height) {
  long p = integer(-height, height);
  long q = integer(1, std::max(1L, height));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

GaussQ Rng::gauss(long height) {
  Rational re = rational(height);
  Rational im = rational(height);
  return {re, im};
}

QuatQ Rng::quat(long height) {
  Rational c0 = rational(height);
  Rational c1 = rational(height);
  Rational c2 = rational(height);
  Rational c3 = rational(height);
  return {c0, c1, c2, c3};
}

namespace linalg {

std::vector<std::size_t> rref(GaussMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    GaussQ inv = m[row][col].inverse();
    for (std::size_t c = col; c < cols; ++c) {
      if (!m[row][c].is_zero()) m[row][c] *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      GaussQ f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!m[row][c].is_zero()) m[r][c] -= f * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<GaussVector> kernel(GaussMatrix m, std::size_t cols) {
  std::vector<std::size_t> pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<GaussVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    GaussVector v(cols, GaussQ(0));
    v[free] = GaussQ(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<GaussVector> solve(GaussMatrix m, const GaussVector& b, std::size_t cols) {
  if (b.size() != m.size()) throw ShapeError("right-hand side has the wrong length");
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  std::vector<std::size_t> pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  GaussVector x(cols, GaussQ(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

}  // namespace linalg

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned bound) {
  std::vector<Monomial> out;
  std::vector<Monomial> level{Monomial(nvars)};
  out.push_back(Monomial(nvars));
  for (unsigned d = 1; d <= bound && nvars > 0; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : level) {
      // Multiply only by variables at or after the last one used, so each
      // monomial appears once.
      std::size_t last = 0;
      for (std::size_t k = 0; k < nvars; ++k) {
        if (m[k] > 0) last = k;
      }
      for (std::size_t k = last; k < nvars; ++k) next.push_back(m * Monomial::variable(nvars, k));
    }
    for (const auto& m : next) out.push_back(m);
    level = std::move(next);
  }
  return out;
}

std::optional<std::vector<MPoly>> linear_membership(const VecPoly& target, std::span<const VecPoly> gens,
                                                    unsigned bound) {
  const std::size_t rank = target.rank();
  const std::size_t nvars = target.nvars();
  for (const auto& g : gens) {
    if (g.rank() != rank || g.nvars() != nvars) throw ShapeError("generator does not match the target module");
  }
  std::vector<Monomial> multipliers = monomials_up_to(nvars, bound);
  auto key_less = [](const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) {
    if (a.first != b.first) return a.first < b.first;
    return grevlex_compare(a.second, b.second) > 0;
  };
  std::map<std::pair<std::size_t, Monomial>, std::size_t, decltype(key_less)> rows(key_less);
  auto row_of = [&](std::size_t pos, const Monomial& m) {
    auto [it, inserted] = rows.try_emplace({pos, m}, rows.size());
    return it->second;
  };
  // Sparse column entries first; the dense matrix is built at the end.
  const std::size_t cols = gens.size() * multipliers.size();
  std::vector<std::vector<std::pair<std::size_t, GaussQ>>> columns(cols);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t u = 0; u < multipliers.size(); ++u) {
      auto& col = columns[j * multipliers.size() + u];
      for (std::size_t p = 0; p < rank; ++p) {
        for (const auto& [m, c] : gens[j][p].terms()) col.emplace_back(row_of(p, m * multipliers[u]), c);
      }
    }
  }
  std::vector<std::pair<std::size_t, GaussQ>> rhs;
  for (std::size_t p = 0; p < rank; ++p) {
    for (const auto& [m, c] : target[p].terms()) rhs.emplace_back(row_of(p, m), c);
  }
  GaussMatrix a(rows.size(), GaussVector(cols, GaussQ(0)));
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& [r, v] : columns[c]) a[r][c] += v;
  }
  GaussVector b(rows.size(), GaussQ(0));
  for (const auto& [r, v] : rhs) b[r] += v;
  auto x = linalg::solve(std::move(a), b, cols);
  if (!x) return std::nullopt;
  std::vector<MPoly> quotients;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    std::vector<MPoly::Term> terms;
    for (std::size_t u = 0; u < multipliers.size(); ++u) {
      const GaussQ& c = (*x)[j * multipliers.size() + u];
      if (!c.is_zero()) terms.emplace_back(multipliers[u], c);
    }
    quotients.push_back(MPoly::from_terms(nvars, std::move(terms)));
  }
  return quotients;
}

GoodPoint make_good_point(const QuatQ& q, std::span<const Rational> alpha, std::span<const Rational> beta) {
  if (alpha.size() != beta.size()) throw ShapeError("alpha and beta must have equal length");
  std::vector<QuatQ> a;
  a.reserve(alpha.size());
  for (std::size_t l = 0; l < alpha.size(); ++l) {
    QuatQ c = q;
    c.scale(beta[l]);
    c += QuatQ(alpha[l]);
    a.push_back(c);
  }
  return GoodPoint(std::move(a));
}

GoodPoint sample_good_point(Rng& rng, std::size_t d, long height) {
  QuatQ q = rng.quat(height);
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  for (std::size_t l = 0; l < d; ++l) {
    alpha.push_back(rng.rational(height));
    beta.push_back(rng.rational(height));
  }
  return make_good_point(q, alpha, beta);
}

namespace {

const std::vector<GaussQ>& grid_values() {
  static const std::vector<GaussQ> values = [] {
    const Rational half(1, 2);
    return std::vector<GaussQ>{GaussQ(0),
                               GaussQ(1),
                               GaussQ(-1),
                               GaussQ::i(),
                               -GaussQ::i(),
                               GaussQ(Rational(1), Rational(1)),
                               GaussQ(Rational(1), Rational(-1)),
                               GaussQ(Rational(-1), Rational(1)),
                               GaussQ(Rational(-1), Rational(-1)),
                               GaussQ(2),
                               GaussQ(-2),
                               GaussQ(Rational(0), Rational(2)),
                               GaussQ(Rational(0), Rational(-2)),
                               GaussQ(half),
                               GaussQ(-half)};
  }();
  return values;
}

// Grid tuples ordered by the largest value index they use, then lexicographically.
std::vector<GaussVector> grid_points(std::size_t nvars, std::size_t budget) {
  const auto& values = grid_values();
  std::vector<GaussVector> out;
  for (std::size_t level = 0; level < values.size() && out.size() < budget; ++level) {
    std::vector<std::size_t> idx(nvars, 0);
    while (out.size() < budget) {
      if (std::find(idx.begin(), idx.end(), level) != idx.end()) {
        GaussVector a;
        for (auto i : idx) a.push_back(values[i]);
        out.push_back(std::move(a));
      }
      bool carry = true;
      for (std::size_t k = nvars; k > 0 && carry;) {
        --k;
        if (idx[k] < level) {
          ++idx[k];
          carry = false;
        } else {
          idx[k] = 0;
        }
      }
      if (carry) break;
    }
  }
  return out;
}

GaussMatrix stacked(std::span<const MatPoly> gens, const GaussVector& a) {
  GaussMatrix rows;
  for (const auto& g : gens) {
    GaussMatrix v = evaluate(g, a);
    for (auto& r : v) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::vector<GaussVector> sample_points(std::size_t nvars, const SampleConfig& cfg) {
  if (nvars == 0) return cfg.trials ? std::vector<GaussVector>{GaussVector{}} : std::vector<GaussVector>{};
  std::vector<GaussVector> pts;
  if (cfg.grid) pts = grid_points(nvars, std::max<std::size_t>(cfg.trials / 2, cfg.trials ? 1 : 0));
  Rng rng(cfg.seed);
  // Repeats are skipped; the attempt cap keeps tiny heights from looping.
  for (std::size_t attempt = 0; pts.size() < cfg.trials && attempt < 20 * cfg.trials; ++attempt) {
    GaussVector a;
    for (std::size_t k = 0; k < nvars; ++k) {
      // Mix real and Gaussian coordinates.
      a.push_back(rng.coin() ? GaussQ(rng.rational(cfg.height)) : rng.gauss(cfg.height));
    }
    if (std::find(pts.begin(), pts.end(), a) == pts.end()) pts.push_back(std::move(a));
  }
  return pts;
}

std::vector<DirectionalPoint> sample_directional_zeros(std::span<const MatPoly> gens, std::size_t n,
                                                       std::size_t nvars, const SampleConfig& cfg) {
  for (const auto& g : gens) {
    if (g.n() != n || g.nvars() != nvars) throw ShapeError("generator does not match the ring");
  }
  std::vector<DirectionalPoint> out;
  for (const auto& a : sample_points(nvars, cfg)) {
    for (auto& v : linalg::kernel(stacked(gens, a), n)) out.emplace_back(a, std::move(v));
  }
  return out;
}

std::optional<DirectionalPoint> refute_by_sampling(const MatPoly& F, std::span<const MatPoly> gens,
                                                   const SampleConfig& cfg) {
  for (const auto& a : sample_points(F.nvars(), cfg)) {
    for (auto& v : linalg::kernel(stacked(gens, a), F.n())) {
      DirectionalPoint p(a, std::move(v));
      GaussVector fv = eval_matrix(F, p);
      if (std::any_of(fv.begin(), fv.end(), [](const GaussQ& z) { return !z.is_zero(); })) return p;
    }
  }
  return std::nullopt;
}

namespace {

Monomial random_monomial(Rng& rng, const RandomShape& shape) {
  Monomial m(shape.nvars);
  if (shape.nvars == 0) return m;
  long deg = rng.integer(0, shape.max_degree);
  for (long k = 0; k < deg; ++k) {
    auto v = static_cast<std::size_t>(rng.integer(0, static_cast<long>(shape.nvars) - 1));
    m.set(v, m[v] + 1);
  }
  return m;
}

}  // namespace

MPoly random_mpoly(Rng& rng, const RandomShape& shape, bool real) {
  std::vector<MPoly::Term> terms;
  long count = rng.integer(1, static_cast<long>(std::max<std::size_t>(shape.max_terms, 1)));
  for (long t = 0; t < count; ++t) {
    Monomial m = random_monomial(rng, shape);
    GaussQ c = real ? GaussQ(rng.rational(shape.height)) : rng.gauss(shape.height);
    terms.emplace_back(std::move(m), std::move(c));
  }
  return MPoly::from_terms(shape.nvars, std::move(terms));
}

QPoly random_qpoly(Rng& rng, const RandomShape& shape) {
  std::vector<QPoly::Term> terms;
  long count = rng.integer(1, static_cast<long>(std::max<std::size_t>(shape.max_terms, 1)));
  for (long t = 0; t < count; ++t) {
    Monomial m = random_monomial(rng, shape);
    terms.emplace_back(std::move(m), rng.quat(shape.height));
  }
  return QPoly::from_terms(shape.nvars, std::move(terms));
}

VecPoly random_vecpoly(Rng& rng, const RandomShape& shape, std::size_t rank) {
  std::vector<MPoly> comps;
  for (std::size_t p = 0; p < rank; ++p) {
    comps.push_back(rng.integer(0, 2) == 0 ? MPoly(shape.nvars) : random_mpoly(rng, shape));
  }
  if (rank == 0) return VecPoly(0, shape.nvars);
  return VecPoly(std::move(comps));
}

MatPoly random_matpoly(Rng& rng, const RandomShape& shape, std::size_t n) {
  std::vector<MPoly> entries;
  for (std::size_t k = 0; k < n * n; ++k) {
    entries.push_back(rng.integer(0, 2) == 0 ? MPoly(shape.nvars) : random_mpoly(rng, shape));
  }
  if (n == 0) return MatPoly(0, shape.nvars);
  return MatPoly(n, std::move(entries));
}

}  // namespace qnss
