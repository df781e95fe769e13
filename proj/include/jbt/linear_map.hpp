#pragma once

#include <Eigen/Dense>

#include "jbt/element.hpp"
#include "jbt/factor.hpp"

namespace jbt {
inline namespace factors {

// Linear operator on a factor, stored as a dense matrix in the coordinate
// basis.  Composition, inversion and norms all go through Eigen.
class LinearMap {
  public:
    LinearMap(Factor factor, Eigen::MatrixXcd m);

    static LinearMap identity(const Factor& f);
    static LinearMap zero(const Factor& f);

    const Factor& factor() const { return factor_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

    Element apply(const Element& x) const;
    LinearMap compose(const LinearMap& other) const; // this after other
    LinearMap inverse() const;                       // throws NumericalError if singular

    double frobenius_norm() const { return matrix_.norm(); }
    double operator_norm_bound() const; // largest singular value of the matrix

    LinearMap operator+(const LinearMap& other) const;
    LinearMap operator-(const LinearMap& other) const;
    LinearMap operator*(Complex scale) const;

  private:
    Factor factor_;
    Eigen::MatrixXcd matrix_;
};

// Conjugate-linear operator z -> M * conj(z).  Composing two of these gives a
// LinearMap with matrix M1 * conj(M2).
class ConjugateLinearMap {
  public:
    ConjugateLinearMap(Factor factor, Eigen::MatrixXcd m);

    const Factor& factor() const { return factor_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }

    Element apply(const Element& x) const;
    LinearMap compose(const ConjugateLinearMap& other) const; // this after other

  private:
    Factor factor_;
    Eigen::MatrixXcd matrix_;
};

} // namespace factors
} // namespace jbt
