#include "jbt/linear_map.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace factors {

LinearMap::LinearMap(Factor factor, Eigen::MatrixXcd m)
    : factor_(std::move(factor)), matrix_(std::move(m)) {
    if (matrix_.rows() != factor_.dim() || matrix_.cols() != factor_.dim())
        throw DomainError("operator matrix shape does not match " + factor_.to_string());
}

LinearMap LinearMap::identity(const Factor& f) {
    return LinearMap(f, Eigen::MatrixXcd::Identity(f.dim(), f.dim()));
}

LinearMap LinearMap::zero(const Factor& f) {
    return LinearMap(f, Eigen::MatrixXcd::Zero(f.dim(), f.dim()));
}

Element LinearMap::apply(const Element& x) const {
    if (x.factor() != factor_)
        throw FactorMismatchError("LinearMap::apply: element lives in " +
                                  x.factor().to_string() + ", operator on " +
                                  factor_.to_string());
    return Element(factor_, matrix_ * x.coords());
}

LinearMap LinearMap::compose(const LinearMap& other) const {
    if (other.factor_ != factor_)
        throw FactorMismatchError("LinearMap::compose: factors differ");
    return LinearMap(factor_, matrix_ * other.matrix_);
}

LinearMap LinearMap::inverse() const {
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(matrix_);
    // PartialPivLU has no rank query; sniff singularity from the residual.
    Eigen::MatrixXcd inv = lu.inverse();
    const double resid =
        (matrix_ * inv - Eigen::MatrixXcd::Identity(matrix_.rows(), matrix_.cols()))
            .norm();
    if (!inv.allFinite() || resid > 1e-6 * std::max(1.0, matrix_.norm()))
        throw NumericalError("LinearMap::inverse: matrix is singular or near-singular");
    return LinearMap(factor_, std::move(inv));
}

double LinearMap::operator_norm_bound() const {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix_);
    return svd.singularValues()(0);
}

LinearMap LinearMap::operator+(const LinearMap& other) const {
    if (other.factor_ != factor_)
        throw FactorMismatchError("LinearMap::operator+: factors differ");
    return LinearMap(factor_, matrix_ + other.matrix_);
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
    if (other.factor_ != factor_)
        throw FactorMismatchError("LinearMap::operator-: factors differ");
    return LinearMap(factor_, matrix_ - other.matrix_);
}

LinearMap LinearMap::operator*(Complex scale) const {
    return LinearMap(factor_, scale * matrix_);
}

ConjugateLinearMap::ConjugateLinearMap(Factor factor, Eigen::MatrixXcd m)
    : factor_(std::move(factor)), matrix_(std::move(m)) {
    if (matrix_.rows() != factor_.dim() || matrix_.cols() != factor_.dim())
        throw DomainError("operator matrix shape does not match " + factor_.to_string());
}

Element ConjugateLinearMap::apply(const Element& x) const {
    if (x.factor() != factor_)
        throw FactorMismatchError("ConjugateLinearMap::apply: element lives in " +
                                  x.factor().to_string() + ", operator on " +
                                  factor_.to_string());
    return Element(factor_, matrix_ * x.coords().conjugate());
}

LinearMap ConjugateLinearMap::compose(const ConjugateLinearMap& other) const {
    if (other.factor_ != factor_)
        throw FactorMismatchError("ConjugateLinearMap::compose: factors differ");
    return LinearMap(factor_, matrix_ * other.matrix_.conjugate());
}

} // namespace factors
} // namespace jbt
