#include "qnss/embed.hpp"

namespace qnss {

std::pair<MPoly, MPoly> complex_split(const QPoly& f) {
  MPoly p = f.map_coefficients([](const QuatQ& c) { return GaussQ(c[0], c[1]); });
  MPoly q = f.map_coefficients([](const QuatQ& c) { return GaussQ(c[2], -c[3]); });
  return {std::move(p), std::move(q)};
}

QPoly complex_join(const MPoly& p, const MPoly& q) {
  QPoly a = p.map_coefficients([](const GaussQ& z) { return QuatQ(z.re(), z.im(), 0, 0); });
  // J (u + v i) = u J - v K.
  QPoly b = q.map_coefficients([](const GaussQ& z) { return QuatQ(0, 0, z.re(), -z.im()); });
  return a + b;
}

MatPoly phi_embed(const QPoly& f) {
  auto [p, q] = complex_split(f);
  return MatPoly(2, {p, -conj(q), q, conj(p)});
}

std::pair<QPoly, QPoly> phi_decompose(const MatPoly& A) {
  if (A.n() != 2) throw ShapeError("phi_decompose requires a 2 x 2 matrix");
  const MPoly& a = A(0, 0);
  const MPoly& b = A(0, 1);
  const MPoly& c = A(1, 0);
  const MPoly& d = A(1, 1);
  const GaussQ half(Rational(1, 2));
  const GaussQ half_i(Rational(0), Rational(1, 2));
  // A = pi_0 phi(1) + pi_1 phi(I) + pi_2 phi(J) + pi_3 phi(K) over C[x].
  std::array<MPoly, 4> pi = {(a + d).scaled_left(half), (d - a).scaled_left(half_i), (c - b).scaled_left(half),
                             (b + c).scaled_left(half_i)};
  // Splitting each pi_u into real and imaginary parts lands in the basis
  // phi(u), i phi(u) of M_2(C[x]) over R[x].
  QPoly z(A.nvars());
  QPoly w(A.nvars());
  for (std::size_t u = 0; u < 4; ++u) {
    QPoly re = pi[u].map_coefficients([u](const GaussQ& x) { return QuatQ::unit(u).scale(x.re()); });
    QPoly im = pi[u].map_coefficients([u](const GaussQ& x) { return QuatQ::unit(u).scale(x.im()); });
    z += re;
    w += im;
  }
  return {std::move(z), std::move(w)};
}

MatPoly phi_compose(const QPoly& z, const QPoly& w) {
  MatPoly r = phi_embed(z);
  MatPoly iw = phi_embed(w).map_entries([](const MPoly& p) { return p.scaled_left(GaussQ::i()); });
  return r + iw;
}

VecPoly quat_components(const QPoly& f) {
  std::vector<MPoly> out;
  out.reserve(4);
  for (std::size_t u = 0; u < 4; ++u) {
    out.push_back(f.map_coefficients([u](const QuatQ& c) { return GaussQ(c[u]); }));
  }
  return VecPoly(std::move(out));
}

QPoly quat_from_components(const VecPoly& v) {
  if (v.rank() != 4) throw ShapeError("quaternion component vector must have rank 4");
  QPoly f(v.nvars());
  for (std::size_t u = 0; u < 4; ++u) {
    if (!is_real(v[u])) throw InvalidInput("quaternion components must be real polynomials");
    f += v[u].map_coefficients([u](const GaussQ& c) { return QuatQ::unit(u).scale(c.re()); });
  }
  return f;
}

VecPoly left_unit_multiple(std::size_t unit, const VecPoly& components) {
  QPoly f = quat_from_components(components);
  return quat_components(f.scaled_left(QuatQ::unit(unit)));
}

QPoly quat_from_real(const MPoly& r) {
  if (!is_real(r)) throw InvalidInput("expected a real polynomial");
  return r.map_coefficients([](const GaussQ& c) { return QuatQ(c.re()); });
}

}  // namespace qnss
