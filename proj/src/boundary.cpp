#include "jbt/boundary.hpp"

#include <cmath>
#include <numbers>

#include "jbt/errors.hpp"

namespace jbt {
inline namespace boundary {

namespace {

void require_unit(const Element& x, const char* where) {
    if (std::abs(ball_norm(x) - 1.0) > 1e-10)
        throw DomainError(std::string(where) + ": element must have unit norm");
}

} // namespace

ComponentMembership component_membership(const Element& e, const Element& x,
                                         double tol) {
    require_same_factor(e, x, "component_membership");
    const LinearMap p0 = bergmann(e, e);
    const Element diff = x - e;
    const double residual = ball_norm(p0.apply(diff) - diff);
    const double interior = ball_norm(p0.apply(x));
    return ComponentMembership{residual, interior,
                               residual <= tol && interior < 1.0};
}

BoundaryComponent boundary_component(const Element& x) {
    require_unit(x, "boundary_component");
    Element e = [&] {
        try {
            return boundary_tripotent(x, BoundaryMethod::Iterate);
        } catch (const SlowConvergenceError&) {
            return boundary_tripotent(x, BoundaryMethod::Spectral);
        }
    }();
    const int frame_len = static_cast<int>(spectral_decomposition(e).frame.size());
    const int rank = x.factor().rank() - frame_len;
    const ComponentMembership cert = component_membership(e, x, 1e-9);
    if (!cert.pass)
        throw NumericalError(
            "boundary_component: membership certificate failed (residual " +
            std::to_string(cert.residual) + ", interior norm " +
            std::to_string(cert.interior_norm) + ")");
    return BoundaryComponent{std::move(e), rank, cert.residual, cert.interior_norm};
}

RankPreservation component_rank_preserved(const Element& v, const BallAutomorphism& g,
                                          int n_samples, std::uint64_t seed) {
    const BoundaryComponent before = boundary_component(v);
    const Element gv = g.apply(v);
    const BoundaryComponent after = boundary_component(gv);

    const LinearMap p0 = bergmann(before.tripotent, before.tripotent);
    bool all_ok = true;
    double worst = 0.0;
    for (int j = 0; j < n_samples; ++j) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(j));
        Element t = p0.apply(random_element(v.factor(), rng, 1.0));
        const double nrm = ball_norm(t);
        Element y = before.tripotent;
        if (nrm > 0.0) y = y + t * Complex((0.4 + 0.5 * rng.uniform()) / nrm, 0.0);
        const ComponentMembership cert =
            component_membership(after.tripotent, g.apply(y), 1e-8);
        worst = std::max(worst, cert.residual);
        all_ok = all_ok && cert.pass;
    }
    return RankPreservation{before.rank, after.rank, all_ok, worst};
}

RussoDye russo_dye_reconstruct(const Element& b, const Element& a, int N) {
    require_same_factor(b, a, "russo_dye_reconstruct");
    if (ball_norm(b) >= 1.0)
        throw DomainError("russo_dye_reconstruct: center must lie inside the ball");
    require_unit(a, "russo_dye_reconstruct");
    if (N < 4) throw DomainError("russo_dye_reconstruct: N must be at least 4");

    const Transvection g(b);
    RussoDye out{Element::zero(b.factor()), 0.0, {}, 0.0};
    out.witnesses.reserve(static_cast<std::size_t>(N));
    Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(b.dim());
    for (int k = 0; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / N;
        const Complex w(std::cos(theta), std::sin(theta));
        Element point = g.apply(a * w);
        acc += point.coords();
        out.witness_maximality =
            std::max(out.witness_maximality, bergmann(point, point).frobenius_norm());
        out.witnesses.push_back(std::move(point));
    }
    out.approx = Element(b.factor(), acc / static_cast<double>(N));
    out.error = ball_norm(out.approx - b);
    return out;
}

double mean_value_check(const TestFunction& fn, const Element& b, const Element& a,
                        int N) {
    require_same_factor(b, a, "mean_value_check");
    if (ball_norm(b) >= 1.0)
        throw DomainError("mean_value_check: center must lie inside the ball");
    require_unit(a, "mean_value_check");
    if (N < 4) throw DomainError("mean_value_check: N must be at least 4");

    const Transvection g(b);
    Complex acc = 0.0;
    for (int k = 0; k < N; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / N;
        const Complex w(std::cos(theta), std::sin(theta));
        acc += fn(g.apply(a * w));
    }
    return std::abs(fn(b) - acc / static_cast<double>(N));
}

std::string determining_set_name(DeterminingSet set) {
    switch (set) {
    case DeterminingSet::Gamma: return "gamma";
    case DeterminingSet::Gamma1: return "gamma1";
    case DeterminingSet::OrbitG0: return "orbit-g0";
    case DeterminingSet::OrbitG: return "orbit-g";
    }
    return "?";
}

namespace {

// Discrete (non-connected) isometry: transpose for square matrix factors,
// a coordinate permutation for commutative ones, blockwise for sums.
LinearMap discrete_isometry(const Factor& f, Rng& rng) {
    switch (f.kind()) {
    case FactorKind::Matrix: {
        if (f.rows() != f.cols() || rng.below(2) == 0) return LinearMap::identity(f);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(f.dim(), f.dim());
        for (int j = 0; j < f.dim(); ++j) {
            const Element img = Element::from_matrix(
                f, Element::basis(f, j).as_matrix().transpose());
            m.col(j) = img.coords();
        }
        return LinearMap(f, std::move(m));
    }
    case FactorKind::Commutative: {
        std::vector<int> perm(static_cast<std::size_t>(f.dim()));
        for (int i = 0; i < f.dim(); ++i) perm[static_cast<std::size_t>(i)] = i;
        for (int i = f.dim() - 1; i > 0; --i)
            std::swap(perm[static_cast<std::size_t>(i)],
                      perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(f.dim(), f.dim());
        for (int j = 0; j < f.dim(); ++j) m(perm[static_cast<std::size_t>(j)], j) = 1.0;
        return LinearMap(f, std::move(m));
    }
    case FactorKind::DirectSum: {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(f.dim(), f.dim());
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            const Factor& sub = f.parts()[i];
            const int off = f.part_offset(i);
            m.block(off, off, sub.dim(), sub.dim()) =
                discrete_isometry(sub, rng).matrix();
        }
        return LinearMap(f, std::move(m));
    }
    }
    throw DomainError("discrete_isometry: unknown factor kind");
}

} // namespace

DeterminingReport determining_sup(const TestFunction& fn, DeterminingSet set,
                                  int n_set, int n_ball, std::uint64_t seed,
                                  const std::optional<Element>& center) {
    const Factor& f = fn.factor();
    if (n_set < 1 || n_ball < 1)
        throw DomainError("determining_sup: sample counts must be positive");
    const std::uint64_t set_seed = trial_rng(seed, 1).next_u64();
    const std::uint64_t ball_seed = trial_rng(seed, 2).next_u64();

    std::vector<Element> points;
    points.reserve(static_cast<std::size_t>(n_set));
    switch (set) {
    case DeterminingSet::Gamma:
        points = gamma_sample(f, n_set, set_seed);
        break;
    case DeterminingSet::Gamma1:
        points = gamma1_sample(f, n_set, set_seed);
        break;
    case DeterminingSet::OrbitG0:
    case DeterminingSet::OrbitG: {
        if (!center)
            throw DomainError("determining_sup: orbit sets need a center element");
        if (center->factor() != f)
            throw FactorMismatchError("determining_sup: center factor mismatch");
        require_unit(*center, "determining_sup");
        for (int k = 0; k < n_set; ++k) {
            Rng rng = trial_rng(set_seed, static_cast<std::uint64_t>(k));
            const BallAutomorphism g = random_automorphism(f, rng, 0.95);
            Element point = g.apply(*center);
            if (set == DeterminingSet::OrbitG)
                point = discrete_isometry(f, rng).apply(point);
            points.push_back(std::move(point));
        }
        break;
    }
    }

    double sup_set = 0.0;
    for (const Element& p : points) sup_set = std::max(sup_set, std::abs(fn(p)));

    double sup_ball = sup_set; // the set lives inside the closed ball
    for (int k = 0; k < n_ball; ++k) {
        Rng rng = trial_rng(ball_seed, static_cast<std::uint64_t>(k));
        sup_ball = std::max(sup_ball, std::abs(fn(random_element(f, rng, 1.0))));
    }

    return DeterminingReport{fn.id(),  determining_set_name(set), sup_ball, sup_set,
                             sup_ball - sup_set, n_ball, n_set};
}

std::vector<OrbitClosurePoint> gamma_in_orbit_closure_demo(
    const Element& v, const Element& e, const std::vector<double>& t_grid) {
    require_same_factor(v, e, "gamma_in_orbit_closure_demo");
    require_unit(v, "gamma_in_orbit_closure_demo");
    if (!classify_tripotent(e, 1e-8).is_maximal)
        throw DomainError("gamma_in_orbit_closure_demo: e must be a maximal tripotent");
    std::vector<OrbitClosurePoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        OrbitClosurePoint pt{t, 0.0, true, ""};
        if (t <= 0.0 || t >= 1.0) {
            pt.ok = false;
            pt.note = "t outside (0,1)";
        } else {
            try {
                const Element x = transvection_apply(e * Complex(t, 0.0), v);
                pt.distance = ball_norm(x - e);
            } catch (const Error& err) {
                pt.ok = false;
                pt.note = err.what();
            }
        }
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace boundary
} // namespace jbt
