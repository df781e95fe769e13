#pragma once

#include "jbt/linear_map.hpp"
#include "jbt/triple.hpp"

namespace jbt {
inline namespace operators {

// B(x,y) = Id - 2 D(x,y) + Q_x Q_y.
LinearMap bergmann(const Element& x, const Element& y);

// Principal square root of B(a,a) for ||a|| < 1, where the operator is
// Hermitian positive definite in coordinates.  Holds both B_a and B_a^{-1},
// the latter built from reciprocal roots.
struct BergmannSqrt {
    Element base;
    LinearMap map;
    LinearMap inverse_map;
};

BergmannSqrt bergmann_sqrt(const Element& a);

// Ratio of extreme singular values of B(x,y); infinity when singular.
double bergmann_condition(const Element& x, const Element& y);

enum class QuasiInverseSolver { Direct, Series };

struct QuasiInverseResult {
    Element value;
    QuasiInverseSolver solver;
    double residual;  // ||B(x,y) value - (x - Q_x y)||
    double condition; // singular value ratio of B(x,y)
};

// Quasi-inverse x^y = B(x,y)^{-1} (x - Q_x y) by direct dense solve.
// Throws NotQuasiInvertibleError when the condition exceeds 1e12.
QuasiInverseResult quasi_inverse(const Element& x, const Element& y);

// Neumann series sum_k D(x,y)^k x; independent slow evaluation of the
// quasi-inverse.  Requires ||x|| ||y|| < 1; caps at max_terms.
Element quasi_inverse_series(const Element& x, const Element& y, double tol = 1e-15,
                             int max_terms = 1000000);

// Transvection g_a(x) = a + B_a (x^{-a}): the Moebius translation of the
// unit ball with g_a(0) = a and inverse g_{-a}.  Defined whenever
// ||a|| ||x|| < 1 (extension past the closed ball included).
class Transvection {
  public:
    explicit Transvection(Element a);

    const Element& base() const { return sqrt_.base; }
    const BergmannSqrt& sqrt() const { return sqrt_; }

    Element apply(const Element& x) const;
    // Frechet derivative at x0: B_a B(x0,-a)^{-1}.
    LinearMap derivative(const Element& x0) const;

  private:
    BergmannSqrt sqrt_;
};

} // namespace operators
} // namespace jbt
