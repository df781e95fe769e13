#include "jbt/moebius.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace moebius {

Element transvection_apply(const Element& a, const Element& x) {
    return Transvection(a).apply(x);
}

LinearMap transvection_derivative(const Element& a, const Element& x0) {
    return Transvection(a).derivative(x0);
}

Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
    Eigen::MatrixXcd g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity of QR so the distribution is Haar.
    for (int j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        q.col(j) *= std::abs(d) == 0.0 ? Complex(1.0) : d / std::abs(d);
    }
    return q;
}

LinearMap random_isometry(const Factor& f, Rng& rng) {
    switch (f.kind()) {
    case FactorKind::Matrix: {
        const Eigen::MatrixXcd u = haar_unitary(f.rows(), rng);
        const Eigen::MatrixXcd v = haar_unitary(f.cols(), rng);
        Eigen::MatrixXcd m(f.dim(), f.dim());
        for (int j = 0; j < f.dim(); ++j) {
            const Element img = Element::from_matrix(
                f, u * Element::basis(f, j).as_matrix() * v.adjoint());
            m.col(j) = img.coords();
        }
        return LinearMap(f, std::move(m));
    }
    case FactorKind::Commutative: {
        Eigen::VectorXcd phases(f.dim());
        for (int j = 0; j < f.dim(); ++j) phases[j] = rng.unit_phase();
        return LinearMap(f, phases.asDiagonal());
    }
    case FactorKind::DirectSum: {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(f.dim(), f.dim());
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            const Factor& sub = f.parts()[i];
            const int off = f.part_offset(i);
            m.block(off, off, sub.dim(), sub.dim()) =
                random_isometry(sub, rng).matrix();
        }
        return LinearMap(f, std::move(m));
    }
    }
    throw DomainError("random_isometry: unknown factor kind");
}

LinearMap random_isometry(const Factor& f, std::uint64_t seed) {
    Rng rng(seed);
    return random_isometry(f, rng);
}

LinearMap k_isometry(const Element& a, const Element& b) {
    require_same_factor(a, b, "k_isometry");
    const BergmannSqrt sa = bergmann_sqrt(a);
    const BergmannSqrt sb = bergmann_sqrt(b);
    const Element gab = a + sa.map.apply(quasi_inverse(b, -a).value);
    const LinearMap k = bergmann_sqrt(gab)
                            .inverse_map.compose(sa.map)
                            .compose(bergmann(b, -a).inverse())
                            .compose(sb.map);
    // Cheap certificate that the cocycle really is a ball_norm isometry.
    Rng probe(0x6b2e);
    for (int t = 0; t < 8; ++t) {
        const Element x = random_element(a.factor(), probe, 1.0, RadiusMode::Exact);
        const double drift = std::abs(ball_norm(k.apply(x)) - ball_norm(x));
        if (drift > 1e-8)
            throw NumericalError("k_isometry: probe moved the norm by " +
                                 std::to_string(drift));
    }
    return k;
}

BallAutomorphism::BallAutomorphism(LinearMap isometry, Element base)
    : isometry_(std::move(isometry)), base_(std::move(base)), trans_(base_) {
    if (isometry_.factor() != base_.factor())
        throw FactorMismatchError("BallAutomorphism: isometry and base disagree");
}

BallAutomorphism BallAutomorphism::identity(const Factor& f) {
    return BallAutomorphism(LinearMap::identity(f), Element::zero(f));
}

BallAutomorphism BallAutomorphism::from_transvection(Element a) {
    const Factor f = a.factor();
    return BallAutomorphism(LinearMap::identity(f), std::move(a));
}

BallAutomorphism BallAutomorphism::from_isometry(LinearMap t) {
    const Factor f = t.factor();
    return BallAutomorphism(std::move(t), Element::zero(f));
}

Element BallAutomorphism::apply(const Element& x) const {
    return isometry_.apply(trans_.apply(x));
}

LinearMap BallAutomorphism::derivative(const Element& x0) const {
    return isometry_.compose(trans_.derivative(x0));
}

BallAutomorphism BallAutomorphism::inverse() const {
    return BallAutomorphism(isometry_.inverse(), -isometry_.apply(base_));
}

BallAutomorphism BallAutomorphism::compose(const BallAutomorphism& other) const {
    // T1 g_{a1} T2 g_{a2} = (T1 T2) g_{a} g_{a2} with a = T2^{-1} a1, then
    // g_a g_{a2} = g_{g_a(a2)} k(a,a2), and the trailing isometry is folded
    // back into the base: g_c k = k g_{k^{-1}c}.
    const LinearMap t2inv = other.isometry_.inverse();
    const Element a = t2inv.apply(base_);
    if (ball_norm(a) == 0.0 && ball_norm(other.base_) == 0.0)
        return BallAutomorphism(isometry_.compose(other.isometry_),
                                Element::zero(factor()));
    const Element c = transvection_apply(a, other.base_);
    const LinearMap k = k_isometry(a, other.base_);
    const LinearMap t = isometry_.compose(other.isometry_).compose(k);
    return BallAutomorphism(t, k.inverse().apply(c));
}

BallAutomorphism random_automorphism(const Factor& f, Rng& rng, double base_radius) {
    LinearMap t = random_isometry(f, rng);
    Element a = random_element(f, rng, base_radius);
    return BallAutomorphism(std::move(t), std::move(a));
}

} // namespace moebius
} // namespace jbt
