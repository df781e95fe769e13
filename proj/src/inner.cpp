#include "jbt/inner.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace boundary {

Complex algebraic_inner(const Element& x, const Element& y) {
    require_same_factor(x, y, "algebraic_inner");
    return y.coords().dot(x.coords()); // Eigen's dot conjugates the left side
}

double algebraic_norm(const Element& x) {
    return std::sqrt(std::abs(algebraic_inner(x, x)));
}

Complex shilov_witness(const Element& e, const Element& z, double tol) {
    require_same_factor(e, z, "shilov_witness");
    if (!classify_tripotent(e, tol).is_maximal)
        throw DomainError("shilov_witness: base point must be a maximal tripotent");
    const double n = static_cast<double>(e.factor().rank());
    return 0.5 * (1.0 + algebraic_inner(z, e) / n);
}

double delta_for_epsilon(double norm_e, double epsilon) {
    if (norm_e <= 0.0 || epsilon <= 0.0)
        throw DomainError("delta_for_epsilon: both arguments must be positive");
    // With u = sqrt(delta): u^2 + sqrt(2) u - epsilon/norm_e = 0.
    const double c = epsilon / norm_e;
    const double u = 0.5 * (-std::sqrt(2.0) + std::sqrt(2.0 + 4.0 * c));
    return u * u;
}

double eta_for_delta(double delta) {
    if (delta <= 0.0 || delta > 2.0)
        throw DomainError("eta_for_delta: delta must lie in (0, 2]");
    return 1.0 - std::sqrt(1.0 - 0.25 * delta * delta);
}

} // namespace boundary
} // namespace jbt
