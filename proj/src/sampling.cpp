#include "jbt/sampling.hpp"

#include "jbt/errors.hpp"

namespace jbt {
inline namespace boundary {

Element gamma_point(const Factor& f, Rng& rng) {
    switch (f.kind()) {
    case FactorKind::Matrix: {
        const int p = f.rows(), q = f.cols();
        const Eigen::MatrixXcd u = haar_unitary(p, rng);
        const Eigen::MatrixXcd v = haar_unitary(q, rng);
        Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(p, q);
        for (int i = 0; i < std::min(p, q); ++i) j(i, i) = 1.0;
        return Element::from_matrix(f, u * j * v.adjoint());
    }
    case FactorKind::Commutative: {
        Eigen::VectorXcd c(f.dim());
        for (int i = 0; i < f.dim(); ++i) c[i] = rng.unit_phase();
        return Element(f, std::move(c));
    }
    case FactorKind::DirectSum: {
        Eigen::VectorXcd c(f.dim());
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            const Element part = gamma_point(f.parts()[i], rng);
            c.segment(f.part_offset(i), part.dim()) = part.coords();
        }
        return Element(f, std::move(c));
    }
    }
    throw DomainError("gamma_point: unknown factor kind");
}

Element gamma1_point(const Factor& f, Rng& rng) {
    if (!f.admits_unitary())
        throw EmptyGamma1Error("gamma1_point: " + f.to_string() +
                               " has no unitary tripotent");
    // For unitary-admitting factors the maximal construction already yields
    // unitaries (square U J V* is unitary; phase vectors are unitary).
    return gamma_point(f, rng);
}

namespace {

std::vector<Element> certified_sample(const Factor& f, int n, std::uint64_t seed,
                                      bool unitary) {
    if (n < 0) throw DomainError("sample size must be nonnegative");
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(k));
        Element e = unitary ? gamma1_point(f, rng) : gamma_point(f, rng);
        const TripotentFlags flags = classify_tripotent(e, 1e-8);
        if (!flags.is_tripotent || !flags.is_maximal || (unitary && !flags.is_unitary))
            throw NumericalError("sampled tripotent failed certification (residuals " +
                                 std::to_string(flags.maximal_residual) + ", " +
                                 std::to_string(flags.unitary_residual) + ")");
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

std::vector<Element> gamma_sample(const Factor& f, int n, std::uint64_t seed) {
    return certified_sample(f, n, seed, false);
}

std::vector<Element> gamma1_sample(const Factor& f, int n, std::uint64_t seed) {
    if (!f.admits_unitary())
        throw EmptyGamma1Error("gamma1_sample: " + f.to_string() +
                               " has no unitary tripotent");
    return certified_sample(f, n, seed, true);
}

} // namespace boundary
} // namespace jbt
