#pragma once

#include "jbt/bergmann.hpp"

namespace jbt {
inline namespace moebius {

// g_a(x) = a + B_a x^{-a}; valid while ||a|| ||x|| < 1.
Element transvection_apply(const Element& a, const Element& x);

// Derivative of g_a at x0: B_a B(x0,-a)^{-1}.
LinearMap transvection_derivative(const Element& a, const Element& x0);

// Haar-distributed n x n unitary (QR of a Ginibre matrix with the phase of
// the R diagonal folded back in).
Eigen::MatrixXcd haar_unitary(int n, Rng& rng);

// Random surjective linear isometry from the connected component of the
// isometry group: Matrix factor x -> U x V* with Haar unitaries, Commutative
// factor componentwise phases, direct sums blockwise.
LinearMap random_isometry(const Factor& f, Rng& rng);
LinearMap random_isometry(const Factor& f, std::uint64_t seed);

// The cocycle k(a,b) = B_{g_a(b)}^{-1} B_a B(b,-a)^{-1} B_b from the
// composition law g_a g_b = g_{g_a(b)} k(a,b).  The result is certified to
// preserve ball_norm on a handful of fixed probes.
LinearMap k_isometry(const Element& a, const Element& b);

// Automorphism of the open unit ball in the canonical form g = T o g_a
// (transvection first, isometry second).  The pair (T, a) is unique.
class BallAutomorphism {
  public:
    BallAutomorphism(LinearMap isometry, Element base);

    static BallAutomorphism identity(const Factor& f);
    static BallAutomorphism from_transvection(Element a);
    static BallAutomorphism from_isometry(LinearMap t);

    const Factor& factor() const { return base_.factor(); }
    const LinearMap& isometry() const { return isometry_; }
    const Element& base() const { return base_; }

    Element apply(const Element& x) const;
    LinearMap derivative(const Element& x0) const;

    // g^{-1} = (T^{-1}, -T a).
    BallAutomorphism inverse() const;
    // this after other, renormalized to canonical form.
    BallAutomorphism compose(const BallAutomorphism& other) const;

  private:
    LinearMap isometry_;
    Element base_;
    Transvection trans_;
};

// Isometry with a random transvection base of norm < base_radius.
BallAutomorphism random_automorphism(const Factor& f, Rng& rng,
                                     double base_radius = 0.6);

} // namespace moebius
} // namespace jbt
