#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "jbt/factor.hpp"
#include "jbt/rng.hpp"

namespace jbt {
inline namespace factors {

using Complex = std::complex<double>;

/// A point of a factor, stored as a coordinate vector in the canonical basis.
/// Immutable after construction; all arithmetic returns fresh values.
class Element {
public:
    Element(Factor factor, Eigen::VectorXcd coords);

    static Element zero(const Factor& f);
    static Element basis(const Factor& f, int j);

    const Factor& factor() const { return factor_; }
    const Eigen::VectorXcd& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    /// Matrix-factor view of the coordinates (p x q, row-major entries).
    Eigen::MatrixXcd as_matrix() const;
    static Element from_matrix(const Factor& f, const Eigen::MatrixXcd& m);

    /// Slice belonging to part `i` of a direct sum, as an element of the part.
    Element part(std::size_t i) const;
    /// Embed an element of part `i` back into the sum (zero elsewhere).
    static Element embed_part(const Factor& sum, std::size_t i, const Element& x);

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator-() const;
    Element operator*(Complex scale) const;
    friend Element operator*(Complex scale, const Element& x) { return x * scale; }

    /// Euclidean length of the coordinate vector (not the triple norm).
    double coord_norm() const { return coords_.norm(); }

private:
    Factor factor_;
    Eigen::VectorXcd coords_;
};

/// Verify both arguments live in the same factor; throws FactorMismatchError.
void require_same_factor(const Element& a, const Element& b, const char* where);

/// The spectral norm of the factor: largest singular value for Matrix,
/// sup of moduli for Commutative, max over parts for DirectSum.
double ball_norm(const Element& x);

enum class RadiusMode {
    Scaled, ///< ball_norm = radius * u with u uniform in (0,1]
    Exact,  ///< ball_norm = radius exactly (up to roundoff)
};

/// Gaussian sample rescaled into the ball of the given radius.
Element random_element(const Factor& f, Rng& rng, double radius,
                       RadiusMode mode = RadiusMode::Scaled);
Element random_element(const Factor& f, std::uint64_t seed, double radius,
                       RadiusMode mode = RadiusMode::Scaled);

/// Sample with every coordinate uniform in the closed unit disc.
Element random_polydisc_element(const Factor& f, Rng& rng);

/// Unit-sphere sample: random_element with exact radius one.
Element random_boundary_element(const Factor& f, Rng& rng);

} // namespace factors
} // namespace jbt
