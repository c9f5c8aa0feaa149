#pragma once

#include <utility>

#include "qnss/matpoly.hpp"

namespace qnss {

/// Writes f = p + J q with p, q in Q(i)[x]; Q(i) sits inside the
/// quaternions as the span of 1 and I. Coefficientwise
/// c0 + c1 I + c2 J + c3 K = (c0 + c1 i) + J (c2 - c3 i).
std::pair<MPoly, MPoly> complex_split(const QPoly& f);
QPoly complex_join(const MPoly& p, const MPoly& q);

/// The ring homomorphism H[x] -> M_2(C[x]),  p + J q  |->  [[p, -conj(q)], [q, conj(p)]].
MatPoly phi_embed(const QPoly& f);

/// The unique (z, w) with A = phi(z) + i * phi(w), where i is the complex
/// scalar (not phi(I)). Throws ShapeError unless A is 2 x 2.
std::pair<QPoly, QPoly> phi_decompose(const MatPoly& A);

/// phi(z) + i * phi(w).
MatPoly phi_compose(const QPoly& z, const QPoly& w);

/// Real component vector (f_0, f_1, f_2, f_3) of f = f_0 + f_1 I + f_2 J + f_3 K.
VecPoly quat_components(const QPoly& f);
/// Inverse of quat_components; throws InvalidInput on non-real components.
QPoly quat_from_components(const VecPoly& v);

/// Component vector of u * f for the unit u (0 -> 1, 1 -> I, 2 -> J, 3 -> K).
VecPoly left_unit_multiple(std::size_t unit, const VecPoly& components);

/// Lifts a real polynomial r to the quaternionic ring.
QPoly quat_from_real(const MPoly& r);

}  // namespace qnss
