// Acceptance gate: one line per criterion, exit code = number of failures.
// Each criterion states its tolerance inline; the suite-level gates come from
// the defaults in ToleranceTable, which records echo verbatim.

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "jbt/errors.hpp"
#include "jbt/suites.hpp"

using namespace jbt;

namespace {

int g_failures = 0;

void report(int id, const char* label, bool pass, const std::string& detail) {
    std::printf("%s criterion-%02d %s%s%s\n", pass ? "PASS" : "FAIL", id, label,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

const std::vector<Factor>& acceptance_factors() {
    static const std::vector<Factor> fs = {
        Factor::matrix(2, 2),   Factor::matrix(2, 3),
        Factor::matrix(3, 3),   Factor::commutative(2),
        Factor::commutative(4),
        Factor::parse("matrix:2x2+commutative:1")};
    return fs;
}

struct Tally {
    int records = 0;
    int failures = 0;
    int skipped = 0;
    double max_residual = 0.0;

    void add(const SuiteResult& r) {
        for (const TrialRecord& rec : r.records) {
            ++records;
            if (rec.skipped) ++skipped;
            if (!rec.pass) ++failures;
            if (!rec.skipped && rec.residual > max_residual)
                max_residual = rec.residual;
        }
    }
    std::string detail() const {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "records=%d failures=%d skipped=%d max-residual=%.3e",
                      records, failures, skipped, max_residual);
        return buf;
    }
    bool pass() const { return failures == 0 && records > 0; }
};

Tally run_all(const std::string& suite, bool experiment, int trials,
              std::uint64_t seed, const std::vector<Factor>& factors) {
    RunConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    ToleranceTable tol;
    Tally tally;
    for (const Factor& f : factors)
        tally.add(experiment ? run_experiment(suite, f, cfg, tol)
                             : run_verify_suite(suite, f, cfg, tol));
    return tally;
}

Element make(const Factor& f, std::initializer_list<Complex> vals) {
    Eigen::VectorXcd v(f.dim());
    int i = 0;
    for (const Complex& c : vals) v(i++) = c;
    return Element(f, std::move(v));
}

// 1. Jordan triple identity, 1000 random five-tuples per factor.
void criterion_1() {
    const Tally t = run_all("jordan", false, 1000, 101, acceptance_factors());
    report(1, "jordan-identity", t.pass(), t.detail());
}

// 2. Full identity catalogue, 200 tuples per identity per factor, no skips.
void criterion_2() {
    const Tally t = run_all("catalogue", false, 200, 102, acceptance_factors());
    report(2, "identity-catalogue", t.pass() && t.skipped == 0, t.detail());
}

// 3. Transvection image factorization of B(g_a(b), g_a(b)), 100 pairs per
// factor with b running through interior and boundary points.
void criterion_3() {
    const Tally t = run_all("bergmann", false, 100, 103, acceptance_factors());
    report(3, "image-factorization", t.pass(), t.detail());
}

// 4. Transvections keep maximal tripotents maximal, plus the exact
// two-dimensional worked example.
void criterion_4() {
    Tally t = run_all("gamma", false, 100, 104, acceptance_factors());

    const Factor f = Factor::commutative(2);
    const Element a = make(f, {0.5, 0.5});
    const Element g = transvection_apply(a, make(f, {1.0, 0.0}));
    const bool image_exact = g.coords()(0) == Complex(1.0, 0.0) &&
                             g.coords()(1) == Complex(0.5, 0.0);
    const Element cube = odd_power(g, 3);
    const double residual = (cube.coords() - g.coords()).cwiseAbs().maxCoeff();
    const bool example = image_exact && residual == 0.375;

    report(4, "maximal-orbit-invariance", t.pass() && example,
           t.detail() + (example ? " example=exact" : " example=MISMATCH"));
}

// 5. Transvections keep unitary tripotents unitary where they exist, plus
// the closed-form norm of the derivative factor at tu for unitary u:
// ||B_{tu}|| = 1 - t^2 exactly, below the bound 2 sqrt(1 - t^2).
void criterion_5() {
    const Tally t = run_all("gamma1", false, 100, 105, acceptance_factors());

    bool closed_form = true;
    std::string note;
    for (const Factor& f : {Factor::matrix(2, 2), Factor::commutative(4)}) {
        Rng rng(505);
        const Element u = gamma1_point(f, rng);
        for (double tt : {0.9, 0.99, 0.999}) {
            const double norm =
                bergmann_sqrt(u * Complex(tt, 0.0)).map.operator_norm_bound();
            const double expect = 1.0 - tt * tt;
            if (std::abs(norm - expect) > 1e-12 ||
                norm > 2.0 * std::sqrt(1.0 - tt * tt)) {
                closed_form = false;
                char buf[96];
                std::snprintf(buf, sizeof(buf), " t=%.3f norm=%.6e", tt, norm);
                note += buf;
            }
        }
    }
    report(5, "unitary-orbit-invariance", t.pass() && closed_form,
           t.detail() + (closed_form ? " contraction-norms=exact" : note));
}

// 6. Composition law, swap law, and isometry of the transition factor.
void criterion_6() {
    const Tally t = run_all("composition", false, 100, 106, acceptance_factors());
    report(6, "composition-and-swap", t.pass(), t.detail());
}

// 7. Quadrature reconstruction of interior points from boundary orbits:
// error at N=512 within gate, monotone in N, witnesses certified maximal.
void criterion_7() {
    const Tally t = run_all("russo-dye", true, 25, 107, acceptance_factors());
    report(7, "boundary-average-reconstruction", t.pass(), t.detail());
}

// 8. Mean value property of every registered test function at N=512.
void criterion_8() {
    const Tally t = run_all("mean-value", true, 15, 108, acceptance_factors());
    report(8, "mean-value-property", t.pass(), t.detail());
}

// 9. Boundary components: the two limit-tripotent methods agree, membership
// certificates hold, automorphisms preserve component rank; plus the worked
// example v = (1, 1/2) with its rank-one component and orbit samples.
void criterion_9() {
    Tally t = run_all("boundary", true, 100, 109, acceptance_factors());

    bool example = true;
    std::string note = " example=ok";
    try {
        const Factor f = Factor::commutative(2);
        const Element v = make(f, {1.0, 0.5});
        const BoundaryComponent comp = boundary_component(v);
        if (ball_norm(comp.tripotent - make(f, {1.0, 0.0})) > 1e-12 ||
            comp.rank != 1)
            example = false;
        Rng rng(909);
        for (int k = 0; k < 20 && example; ++k) {
            const BallAutomorphism g = random_automorphism(f, rng, 0.6);
            const RankPreservation rp =
                component_rank_preserved(v, g, 5, rng.next_u64());
            if (rp.rank_before != 1 || rp.rank_after != 1 ||
                !rp.samples_in_image)
                example = false;
        }
    } catch (const Error& err) {
        example = false;
        note = std::string(" example-error=") + err.what();
    }
    if (!example && note == " example=ok") note = " example=MISMATCH";
    report(9, "boundary-components", t.pass() && example, t.detail() + note);
}

// 10. Norm comparison chain on 1000 samples per factor and the separation
// of the witness function: peak 1 at the tripotent, at most 1 - eta once
// ||z - e|| >= epsilon, 10^4 boundary samples per factor.
void criterion_10() {
    const Tally norms = run_all("algnorm", false, 1000, 110, acceptance_factors());

    RunConfig cfg;
    cfg.trials = 25;
    cfg.seed = 111;
    cfg.n_set = 400; // 25 trials x 400 samples = 10^4 per factor
    cfg.epsilon = 0.5;
    ToleranceTable tol;
    Tally witness;
    for (const Factor& f : acceptance_factors())
        witness.add(run_experiment("shilov", f, cfg, tol));

    report(10, "norm-chain-and-witness-separation",
           norms.pass() && witness.pass(),
           norms.detail() + " | witness " + witness.detail());
}

// 11. Maximal tripotents are unitary in every factor that has unitaries.
void criterion_11() {
    const Tally t = run_all("maximal-unitary", false, 100, 112, acceptance_factors());
    int live = 0;
    for (const Factor& f : acceptance_factors())
        if (f.admits_unitary()) ++live;
    // all admitting factors must contribute non-skipped records
    const bool coverage = (t.records - t.skipped) == live * 100;
    report(11, "maximal-implies-unitary", t.pass() && coverage, t.detail());
}

// 12. Transvection derivatives against central finite differences.
void criterion_12() {
    const Tally t = run_all("derivative", false, 100, 113, acceptance_factors());
    report(12, "derivative-finite-difference", t.pass(), t.detail());
}

// 13. Byte-identical reports for identical seeds, all three formats.
void criterion_13() {
    RunConfig cfg;
    cfg.trials = 10;
    cfg.seed = 114;
    cfg.n_set = 80;
    cfg.n_ball = 80;
    ToleranceTable tol;

    auto render_all = [&]() {
        SuiteResult merged;
        for (const Factor& f : acceptance_factors()) {
            for (const std::string& s : verify_suite_names()) {
                const SuiteResult r = run_verify_suite(s, f, cfg, tol);
                merged.records.insert(merged.records.end(), r.records.begin(),
                                      r.records.end());
            }
            for (const std::string& e : {std::string("boundary"),
                                         std::string("determining")}) {
                const SuiteResult r = run_experiment(e, f, cfg, tol);
                merged.records.insert(merged.records.end(), r.records.begin(),
                                      r.records.end());
            }
        }
        return std::array<std::string, 3>{render_jsonl(merged),
                                          render_csv(merged),
                                          render_text(merged)};
    };

    const auto first = render_all();
    const auto second = render_all();
    const bool same = first[0] == second[0] && first[1] == second[1] &&
                      first[2] == second[2];
    char buf[96];
    std::snprintf(buf, sizeof(buf), "jsonl-bytes=%zu csv-bytes=%zu text-bytes=%zu",
                  first[0].size(), first[1].size(), first[2].size());
    report(13, "deterministic-reports", same, buf);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::printf("acceptance: %d of 13 criteria passed\n", 13 - g_failures);
    return g_failures;
}
