#include "jbt/element.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace factors {

Element::Element(Factor factor, Eigen::VectorXcd coords)
    : factor_(std::move(factor)), coords_(std::move(coords)) {
    if (coords_.size() != factor_.dim())
        throw DomainError("coordinate vector of length " +
                          std::to_string(coords_.size()) + " does not match " +
                          factor_.to_string());
}

Element Element::zero(const Factor& f) {
    return Element(f, Eigen::VectorXcd::Zero(f.dim()));
}

Element Element::basis(const Factor& f, int j) {
    if (j < 0 || j >= f.dim())
        throw DomainError("basis index " + std::to_string(j) + " out of range for " +
                          f.to_string());
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(f.dim());
    c[j] = 1.0;
    return Element(f, std::move(c));
}

Eigen::MatrixXcd Element::as_matrix() const {
    const int p = factor_.rows(), q = factor_.cols();
    return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                          Eigen::RowMajor>>(coords_.data(), p, q);
}

Element Element::from_matrix(const Factor& f, const Eigen::MatrixXcd& m) {
    const int p = f.rows(), q = f.cols();
    if (m.rows() != p || m.cols() != q)
        throw DomainError("matrix shape does not match " + f.to_string());
    Eigen::VectorXcd c(p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) c[i * q + j] = m(i, j);
    return Element(f, std::move(c));
}

Element Element::part(std::size_t i) const {
    const Factor& sub = factor_.parts().at(i);
    return Element(sub, coords_.segment(factor_.part_offset(i), sub.dim()));
}

Element Element::embed_part(const Factor& sum, std::size_t i, const Element& x) {
    if (x.factor() != sum.parts().at(i))
        throw FactorMismatchError("embed_part: element does not belong to part " +
                                  std::to_string(i) + " of " + sum.to_string());
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(sum.dim());
    c.segment(sum.part_offset(i), x.dim()) = x.coords();
    return Element(sum, std::move(c));
}

void require_same_factor(const Element& a, const Element& b, const char* where) {
    if (a.factor() != b.factor())
        throw FactorMismatchError(std::string(where) + ": operands live in " +
                                  a.factor().to_string() + " vs " +
                                  b.factor().to_string());
}

Element Element::operator+(const Element& other) const {
    require_same_factor(*this, other, "operator+");
    return Element(factor_, coords_ + other.coords_);
}

Element Element::operator-(const Element& other) const {
    require_same_factor(*this, other, "operator-");
    return Element(factor_, coords_ - other.coords_);
}

Element Element::operator-() const { return Element(factor_, -coords_); }

Element Element::operator*(Complex scale) const {
    return Element(factor_, scale * coords_);
}

double ball_norm(const Element& x) {
    const Factor& f = x.factor();
    switch (f.kind()) {
    case FactorKind::Matrix: {
        if (x.coords().isZero(0.0)) return 0.0;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x.as_matrix());
        return svd.singularValues()(0);
    }
    case FactorKind::Commutative:
        return x.coords().cwiseAbs().maxCoeff();
    case FactorKind::DirectSum: {
        double best = 0.0;
        for (std::size_t i = 0; i < f.parts().size(); ++i)
            best = std::max(best, ball_norm(x.part(i)));
        return best;
    }
    }
    return 0.0;
}

Element random_element(const Factor& f, Rng& rng, double radius, RadiusMode mode) {
    if (radius <= 0.0) throw DomainError("random_element needs radius > 0");
    Eigen::VectorXcd c(f.dim());
    for (int j = 0; j < f.dim(); ++j) c[j] = rng.gaussian_complex();
    Element raw(f, std::move(c));
    const double nrm = ball_norm(raw);
    if (nrm == 0.0) return Element::zero(f); // probability-zero fallback
    const double target =
        mode == RadiusMode::Exact ? radius : radius * rng.uniform_positive();
    return raw * Complex(target / nrm, 0.0);
}

Element random_element(const Factor& f, std::uint64_t seed, double radius,
                       RadiusMode mode) {
    Rng rng(seed);
    return random_element(f, rng, radius, mode);
}

Element random_polydisc_element(const Factor& f, Rng& rng) {
    Eigen::VectorXcd c(f.dim());
    for (int j = 0; j < f.dim(); ++j) c[j] = rng.unit_disc();
    return Element(f, std::move(c));
}

Element random_boundary_element(const Factor& f, Rng& rng) {
    return random_element(f, rng, 1.0, RadiusMode::Exact);
}

} // namespace factors
} // namespace jbt
