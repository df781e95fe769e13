#pragma once

#include "jbt/spectral.hpp"

namespace jbt {
inline namespace boundary {

// Canonical Hermitian pairing sum_j x_j conj(y_j): trace(y* x) in matrix
// factors, the Euclidean pairing in commutative ones, summed over parts.
// Coincides with the frame-based algebraic inner product.
Complex algebraic_inner(const Element& x, const Element& y);

// sqrt(<x,x>_a); satisfies ||x||^2 <= ||x||_a^2 <= rank ||x||^2.
double algebraic_norm(const Element& x);

// h(z) = (1 + <z,e>_a / rank) / 2 for a maximal tripotent e; |h| <= 1 on the
// closed ball with equality exactly at z = e.
Complex shilov_witness(const Element& e, const Element& z, double tol = 1e-8);

// Largest delta with norm_e (delta + sqrt(2 delta)) = epsilon.  Then
// |1 - <z,e>_a/<e,e>_a| < delta forces ||z - e||_a < epsilon whenever
// ||z||_a <= norm_e.
double delta_for_epsilon(double norm_e, double epsilon);

// eta in (0,1) with delta = 2 sqrt(2 eta - eta^2): |h(z)| > 1 - eta forces
// the pairing ratio into the delta-disc around 1.
double eta_for_delta(double delta);

} // namespace boundary
} // namespace jbt
