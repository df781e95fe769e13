#include "jbt/triple.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace factors {

Element triple_product(const Element& x, const Element& y, const Element& z) {
    require_same_factor(x, y, "triple_product");
    require_same_factor(x, z, "triple_product");
    const Factor& f = x.factor();
    switch (f.kind()) {
    case FactorKind::Matrix: {
        const Eigen::MatrixXcd xm = x.as_matrix(), ym = y.as_matrix(),
                               zm = z.as_matrix();
        const Eigen::MatrixXcd ys = ym.adjoint();
        return Element::from_matrix(f, 0.5 * (xm * ys * zm + zm * ys * xm));
    }
    case FactorKind::Commutative:
        return Element(f, (x.coords().array() * y.coords().conjugate().array() *
                           z.coords().array())
                              .matrix());
    case FactorKind::DirectSum: {
        Eigen::VectorXcd c(f.dim());
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            Element pi = triple_product(x.part(i), y.part(i), z.part(i));
            c.segment(f.part_offset(i), pi.dim()) = pi.coords();
        }
        return Element(f, std::move(c));
    }
    }
    throw DomainError("triple_product: unknown factor kind");
}

LinearMap d_operator(const Element& x, const Element& y) {
    require_same_factor(x, y, "d_operator");
    const Factor& f = x.factor();
    Eigen::MatrixXcd m(f.dim(), f.dim());
    for (int j = 0; j < f.dim(); ++j)
        m.col(j) = triple_product(x, y, Element::basis(f, j)).coords();
    return LinearMap(f, std::move(m));
}

ConjugateLinearMap q_operator(const Element& x) {
    const Factor& f = x.factor();
    // Q_x z = {x, z, x} is conjugate-linear in z, so probing with basis
    // vectors (which are real) yields the matrix of z -> M conj(z) directly.
    Eigen::MatrixXcd m(f.dim(), f.dim());
    for (int j = 0; j < f.dim(); ++j)
        m.col(j) = triple_product(x, Element::basis(f, j), x).coords();
    return ConjugateLinearMap(f, std::move(m));
}

} // namespace factors
} // namespace jbt
