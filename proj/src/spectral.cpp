#include "jbt/spectral.hpp"

#include <algorithm>
#include <numeric>

#include "jbt/errors.hpp"

namespace jbt {
inline namespace spectral {

Element odd_power(const Element& x, int m) {
    if (m < 1 || m % 2 == 0)
        throw DomainError("odd_power: exponent must be odd and positive, got " +
                          std::to_string(m));
    Element p = x;
    for (int k = 1; k < m; k += 2) p = triple_product(x, p, x);
    return p;
}

namespace {

void sort_descending(SpectralData& sd) {
    std::vector<std::size_t> order(sd.lambdas.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return sd.lambdas[i] > sd.lambdas[j];
    });
    std::vector<double> lam;
    std::vector<Element> frame;
    lam.reserve(order.size());
    frame.reserve(order.size());
    for (std::size_t i : order) {
        lam.push_back(sd.lambdas[i]);
        frame.push_back(sd.frame[i]);
    }
    sd.lambdas = std::move(lam);
    sd.frame = std::move(frame);
}

} // namespace

SpectralData spectral_decomposition(const Element& x) {
    const Factor& f = x.factor();
    SpectralData sd{x, {}, {}};
    switch (f.kind()) {
    case FactorKind::Matrix: {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x.as_matrix(),
                                               Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        const double cutoff = sv.size() ? 1e-12 * sv(0) : 0.0;
        for (int i = 0; i < sv.size(); ++i) {
            if (sv(i) <= cutoff || sv(i) == 0.0) continue;
            const Eigen::MatrixXcd unit =
                svd.matrixU().col(i) * svd.matrixV().col(i).adjoint();
            sd.lambdas.push_back(sv(i));
            sd.frame.push_back(Element::from_matrix(f, unit));
        }
        return sd; // SVD order is already descending
    }
    case FactorKind::Commutative: {
        const double cutoff = 1e-12 * ball_norm(x);
        for (int i = 0; i < f.dim(); ++i) {
            const Complex c = x.coords()[i];
            const double mod = std::abs(c);
            if (mod <= cutoff || mod == 0.0) continue;
            sd.lambdas.push_back(mod);
            sd.frame.push_back(Element::basis(f, i) * (c / mod));
        }
        sort_descending(sd);
        return sd;
    }
    case FactorKind::DirectSum: {
        const double cutoff = 1e-12 * ball_norm(x);
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            SpectralData part = spectral_decomposition(x.part(i));
            for (std::size_t j = 0; j < part.lambdas.size(); ++j) {
                if (part.lambdas[j] <= cutoff) continue;
                sd.lambdas.push_back(part.lambdas[j]);
                sd.frame.push_back(Element::embed_part(f, i, part.frame[j]));
            }
        }
        sort_descending(sd);
        return sd;
    }
    }
    throw DomainError("spectral_decomposition: unknown factor kind");
}

Element odd_calculus(const Element& x, const std::vector<double>& coeffs) {
    for (std::size_t k = 0; k < coeffs.size(); k += 2)
        if (coeffs[k] != 0.0)
            throw DomainError("odd_calculus: nonzero coefficient at even degree " +
                              std::to_string(k));
    const SpectralData sd = spectral_decomposition(x);
    Element out = Element::zero(x.factor());
    for (std::size_t i = 0; i < sd.lambdas.size(); ++i) {
        double p = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;)
            p = p * sd.lambdas[i] + coeffs[k];
        out = out + sd.frame[i] * Complex(p, 0.0);
    }
    return out;
}

TripotentFlags classify_tripotent(const Element& e, double tol) {
    TripotentFlags flags;
    flags.tripotent_residual = ball_norm(triple_product(e, e, e) - e);
    const Eigen::MatrixXcd b = bergmann(e, e).matrix();
    flags.maximal_residual = b.norm();
    const Eigen::MatrixXcd qq = q_operator(e).compose(q_operator(e)).matrix();
    flags.unitary_residual =
        (qq - Eigen::MatrixXcd::Identity(qq.rows(), qq.cols())).norm();
    if (flags.tripotent_residual > tol) return flags;
    flags.is_tripotent = true;
    flags.is_maximal = flags.maximal_residual <= tol;
    flags.is_unitary = flags.unitary_residual <= tol;
    const Eigen::MatrixXcd d = d_operator(e, e).matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (d + d.adjoint()));
    int ones = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (std::abs(es.eigenvalues()(i) - 1.0) <= tol) ++ones;
    flags.is_minimal = ones == 1;
    return flags;
}

PeirceProjections peirce_projections(const Element& e, double tol) {
    if (!classify_tripotent(e, tol).is_tripotent)
        throw DomainError("peirce_projections: input is not a tripotent");
    LinearMap p1 = q_operator(e).compose(q_operator(e));
    LinearMap phalf = (d_operator(e, e) - p1) * Complex(2.0, 0.0);
    return PeirceProjections{bergmann(e, e), std::move(phalf), std::move(p1)};
}

bool tripotent_leq(const Element& c, const Element& e, double tol) {
    require_same_factor(c, e, "tripotent_leq");
    if (!classify_tripotent(c, tol).is_tripotent ||
        !classify_tripotent(e, tol).is_tripotent)
        throw DomainError("tripotent_leq: both arguments must be tripotents");
    const Element d = e - c;
    if (ball_norm(triple_product(d, d, d) - d) > tol) return false;
    return d_operator(d, c).frobenius_norm() <= tol;
}

int element_rank(const Element& x) {
    const SpectralData sd = spectral_decomposition(x);
    int rank = 0;
    double previous = -1.0;
    for (double lam : sd.lambdas) { // descending
        if (previous < 0.0 || previous - lam > 1e-9) ++rank;
        previous = lam;
    }
    return rank;
}

Element boundary_tripotent(const Element& x, BoundaryMethod method) {
    if (std::abs(ball_norm(x) - 1.0) > 1e-10)
        throw DomainError("boundary_tripotent: input must have unit norm");
    if (method == BoundaryMethod::Spectral) {
        const SpectralData sd = spectral_decomposition(x);
        Element e = Element::zero(x.factor());
        for (std::size_t i = 0; i < sd.lambdas.size(); ++i)
            if (sd.lambdas[i] >= 1.0 - 1e-8) e = e + sd.frame[i];
        return e;
    }
    Element y = x;
    for (int k = 0; k < 200; ++k) {
        Element next = triple_product(y, y, y);
        const double change = ball_norm(next - y);
        y = std::move(next);
        if (change < 1e-10) {
            // Cubing amplifies roundoff in the top spectral value; if that
            // value decayed too, the settled point is useless.
            if (ball_norm(y) < 0.9)
                throw SlowConvergenceError(
                    "boundary_tripotent: iteration collapsed below the unit "
                    "sphere; use the spectral method");
            return y;
        }
    }
    throw SlowConvergenceError(
        "boundary_tripotent: no convergence after 200 cubings; spectral values "
        "too close to 1; use the spectral method");
}

} // namespace spectral
} // namespace jbt
