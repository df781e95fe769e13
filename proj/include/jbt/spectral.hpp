#pragma once

#include <vector>

#include "jbt/bergmann.hpp"
#include "jbt/linear_map.hpp"
#include "jbt/triple.hpp"

namespace jbt {
inline namespace spectral {

// x^(m) for odd m >= 1: x^(1) = x, x^(2n+1) = {x, x^(2n-1), x}.
Element odd_power(const Element& x, int m);

// x = sum_i lambda_i e_i over a frame of pairwise orthogonal minimal
// tripotents, lambdas sorted descending.  lambda_1 = ball_norm(x).
struct SpectralData {
    Element base;
    std::vector<double> lambdas;
    std::vector<Element> frame;
};

// Matrix factors use the SVD (e_i = u_i v_i*), commutative factors the
// componentwise polar split, direct sums merge part frames and re-sort.
// Singular values below 1e-12 ||x|| are dropped; x = 0 has an empty frame.
SpectralData spectral_decomposition(const Element& x);

// p(x) = sum_i p(lambda_i) e_i for an odd polynomial p.  Coefficients are
// indexed by degree (coeffs[k] multiplies t^k); any nonzero entry at an even
// index is rejected.
Element odd_calculus(const Element& x, const std::vector<double>& coeffs);

struct TripotentFlags {
    bool is_tripotent = false;
    bool is_minimal = false;
    bool is_maximal = false;
    bool is_unitary = false;
    double tripotent_residual = 0.0; // ||{e,e,e} - e||
    double maximal_residual = 0.0;   // ||B(e,e)||_F
    double unitary_residual = 0.0;   // ||Q_e Q_e - Id||_F
};

// Flags are false across the board when the tripotent test itself fails;
// the residuals are reported either way.
TripotentFlags classify_tripotent(const Element& e, double tol = 1e-9);

struct PeirceProjections {
    LinearMap p0;    // B(e,e)
    LinearMap phalf; // 2(D(e,e) - Q_e Q_e)
    LinearMap p1;    // Q_e Q_e
};

// The three spectral projections of D(e,e); requires e tripotent within tol.
PeirceProjections peirce_projections(const Element& e, double tol = 1e-9);

// Tripotent order: c <= e iff e - c is a tripotent orthogonal to c.
bool tripotent_leq(const Element& c, const Element& e, double tol = 1e-9);

// Number of distinct nonzero spectral values (separation 1e-9); the
// dimension of the subtriple generated by x.
int element_rank(const Element& x);

enum class BoundaryMethod { Iterate, Spectral };

// Limit tripotent of a unit-sphere element: repeated cubing until the
// iterates settle (Iterate), or the sum of frame members with
// lambda >= 1 - 1e-8 (Spectral).
Element boundary_tripotent(const Element& x,
                           BoundaryMethod method = BoundaryMethod::Iterate);

} // namespace spectral
} // namespace jbt
