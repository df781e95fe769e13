#include "jbt/bergmann.hpp"

#include <limits>
#include <sstream>

#include "jbt/errors.hpp"

namespace jbt {
inline namespace operators {

LinearMap bergmann(const Element& x, const Element& y) {
    require_same_factor(x, y, "bergmann");
    LinearMap qq = q_operator(x).compose(q_operator(y));
    return LinearMap::identity(x.factor()) - d_operator(x, y) * Complex(2.0, 0.0) + qq;
}

BergmannSqrt bergmann_sqrt(const Element& a) {
    if (ball_norm(a) >= 1.0)
        throw DomainError("bergmann_sqrt: base point must lie in the open unit ball");
    const Eigen::MatrixXcd m = bergmann(a, a).matrix();
    const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
    if ((m - herm).norm() > 1e-10 * std::max(1.0, herm.norm()))
        throw NumericalError("bergmann_sqrt: B(a,a) is not Hermitian in coordinates");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
    if (es.info() != Eigen::Success)
        throw NumericalError("bergmann_sqrt: eigendecomposition failed");
    const Eigen::VectorXd lam = es.eigenvalues();
    if (lam.minCoeff() < 1e-12) {
        std::ostringstream msg;
        msg << "bergmann_sqrt: eigenvalue " << lam.minCoeff()
            << " of B(a,a) below the positivity floor 1e-12";
        throw NumericalError(msg.str());
    }
    const Eigen::VectorXcd root = lam.cwiseSqrt().cast<Complex>();
    const Eigen::VectorXcd recip = lam.cwiseSqrt().cwiseInverse().cast<Complex>();
    const Eigen::MatrixXcd v = es.eigenvectors();
    return BergmannSqrt{a, LinearMap(a.factor(), v * root.asDiagonal() * v.adjoint()),
                        LinearMap(a.factor(), v * recip.asDiagonal() * v.adjoint())};
}

double bergmann_condition(const Element& x, const Element& y) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(bergmann(x, y).matrix());
    const auto& sv = svd.singularValues();
    const double smin = sv(sv.size() - 1);
    if (smin == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smin;
}

QuasiInverseResult quasi_inverse(const Element& x, const Element& y) {
    require_same_factor(x, y, "quasi_inverse");
    const LinearMap b = bergmann(x, y);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(b.matrix());
    const auto& sv = svd.singularValues();
    const double smax = sv(0), smin = sv(sv.size() - 1);
    const double cond =
        smin == 0.0 ? std::numeric_limits<double>::infinity() : smax / smin;
    if (smin == 0.0 || cond > 1e12)
        throw NotQuasiInvertibleError("quasi_inverse: B(x,y) is singular for this pair",
                                      cond);
    const Element rhs = x - q_operator(x).apply(y);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(b.matrix());
    Element value(x.factor(), lu.solve(rhs.coords()));
    const double residual = (b.matrix() * value.coords() - rhs.coords()).norm();
    return QuasiInverseResult{std::move(value), QuasiInverseSolver::Direct, residual,
                              cond};
}

Element quasi_inverse_series(const Element& x, const Element& y, double tol,
                             int max_terms) {
    require_same_factor(x, y, "quasi_inverse_series");
    if (ball_norm(x) * ball_norm(y) >= 1.0)
        throw DomainError("quasi_inverse_series: needs ||x|| ||y|| < 1");
    const LinearMap d = d_operator(x, y);
    Eigen::VectorXcd term = x.coords();
    Eigen::VectorXcd sum = term;
    for (int k = 1; k <= max_terms; ++k) {
        term = d.matrix() * term;
        sum += term;
        if (term.norm() <= tol * std::max(1.0, sum.norm()))
            return Element(x.factor(), std::move(sum));
    }
    throw SlowConvergenceError("quasi_inverse_series: no convergence after " +
                               std::to_string(max_terms) + " terms");
}

Transvection::Transvection(Element a) : sqrt_(bergmann_sqrt(std::move(a))) {}

Element Transvection::apply(const Element& x) const {
    const double prod = ball_norm(base()) * ball_norm(x);
    if (prod >= 1.0)
        throw DomainError("Transvection::apply: ||a|| ||x|| = " + std::to_string(prod) +
                          " outside the extension domain");
    return base() + sqrt_.map.apply(quasi_inverse(x, -base()).value);
}

LinearMap Transvection::derivative(const Element& x0) const {
    return sqrt_.map.compose(bergmann(x0, -base()).inverse());
}

} // namespace operators
} // namespace jbt
