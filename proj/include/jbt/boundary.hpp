#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jbt/moebius.hpp"
#include "jbt/sampling.hpp"
#include "jbt/test_functions.hpp"

namespace jbt {
inline namespace boundary {

// Holomorphic boundary component K_e = e + (unit ball of the Peirce-0 space
// of e).  Its rank is the rank of that Peirce-0 subtriple; rank 0 components
// are the singletons {maximal tripotent}.
struct BoundaryComponent {
    Element tripotent;
    int rank;
    double membership_residual; // ||P0(e)(x-e) - (x-e)|| for the defining x
    double interior_norm;       // ||P0(e) x||, < 1 inside the component
};

// Component of a unit-sphere element: the limit tripotent of cubing (with a
// spectral fallback) plus the membership certificate.  Throws NumericalError
// if the certificate fails.
BoundaryComponent boundary_component(const Element& x);

// Certificate that x lies in the component of the tripotent e.
struct ComponentMembership {
    double residual;      // ||P0(e)(x-e) - (x-e)||
    double interior_norm; // ||P0(e) x||
    bool pass;
};
ComponentMembership component_membership(const Element& e, const Element& x,
                                         double tol = 1e-9);

// Rank of K_v before and after applying g, plus a sampled check that g maps
// points of K_v into the component of g(v).
struct RankPreservation {
    int rank_before;
    int rank_after;
    bool samples_in_image;
    double worst_sample_residual;
};
RankPreservation component_rank_preserved(const Element& v, const BallAutomorphism& g,
                                          int n_samples = 5, std::uint64_t seed = 0);

// Quadrature reconstruction b = (1/N) sum_k g_b(w^k a) over the N-th roots of
// unity w^k; exhibits b as an average of boundary points.
struct RussoDye {
    Element approx;
    double error;                // ||approx - b||
    std::vector<Element> witnesses;
    double witness_maximality;   // max ||B(w,w)||_F over the witnesses
};
RussoDye russo_dye_reconstruct(const Element& b, const Element& a, int N);

// |f(b) - (1/N) sum_k f(g_b(w^k a))| for a registered test function.
double mean_value_check(const TestFunction& fn, const Element& b, const Element& a,
                        int N);

enum class DeterminingSet { Gamma, Gamma1, OrbitG0, OrbitG };
std::string determining_set_name(DeterminingSet set);

struct DeterminingReport {
    std::string test_function_id;
    std::string set_name;
    double sup_ball; // includes the set samples, so sup_set <= sup_ball
    double sup_set;
    double gap;
    int n_ball;
    int n_set;
};

// Monte-Carlo comparison of sup |f| over the closed ball against sup |f|
// over a candidate determining set.  Orbit sets need a unit-norm center.
DeterminingReport determining_sup(const TestFunction& fn, DeterminingSet set,
                                  int n_set, int n_ball, std::uint64_t seed,
                                  const std::optional<Element>& center = std::nullopt);

// Distances ||g_{te}(v) - e|| along a grid of t in (0,1), demonstrating that
// orbit points approach the extreme point e.  Singular quasi-inverses along
// the way are reported per grid point rather than thrown.
struct OrbitClosurePoint {
    double t;
    double distance;
    bool ok;
    std::string note;
};
std::vector<OrbitClosurePoint> gamma_in_orbit_closure_demo(
    const Element& v, const Element& e, const std::vector<double>& t_grid);

} // namespace boundary
} // namespace jbt
