#include "jbt/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "jbt/errors.hpp"

namespace jbt {
inline namespace cli {

ToleranceTable::ToleranceTable()
    : entries_{{"jordan", 1e-10},
               {"catalogue", 1e-9},
               {"bergmann", 1e-9},
               {"gamma", 1e-8},
               {"gamma1", 1e-8},
               {"composition", 1e-9},
               {"k-isometry", 1e-10},
               {"derivative", 1e-5},
               {"russo-dye", 1e-8},
               {"quadrature-slack", 1e-13},
               {"mean-value", 1e-8},
               {"boundary", 1e-8},
               {"membership", 1e-9},
               {"algnorm", 1e-12},
               {"witness-peak", 1e-12},
               {"determining-coeff", 1.0}} {}

double ToleranceTable::get(const std::string& name) const {
    const auto it = entries_.find(name);
    if (it == entries_.end())
        throw DomainError("unknown tolerance name '" + name + "'");
    return it->second;
}

void ToleranceTable::set(const std::string& name, double value) {
    const auto it = entries_.find(name);
    if (it == entries_.end())
        throw DomainError("unknown tolerance name '" + name + "'");
    it->second = value;
}

Json TrialRecord::to_json() const {
    return Json{{"suite", suite},       {"factor", factor},
                {"name", name},         {"seed", seed},
                {"trial", trial},       {"residual", residual},
                {"scale", scale},       {"tolerance", tolerance},
                {"pass", pass},         {"skipped", skipped},
                {"note", note}};
}

int SuiteResult::failures() const {
    return static_cast<int>(
        std::count_if(records.begin(), records.end(),
                      [](const TrialRecord& r) { return !r.pass; }));
}

double SuiteResult::max_residual() const {
    double m = 0.0;
    for (const TrialRecord& r : records)
        if (!r.skipped) m = std::max(m, r.residual);
    return m;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

// Disjoint per-(stream, trial) generators under one master seed.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t k) {
    return trial_rng(seed, stream * 0x100000000ULL + k);
}

SuiteResult run_jordan(const Factor& f, const RunConfig& cfg,
                       const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("jordan");
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element a = random_element(f, rng, 1.5);
        const Element b = random_element(f, rng, 1.5);
        const Element x = random_element(f, rng, 1.5);
        const Element y = random_element(f, rng, 1.5);
        const Element z = random_element(f, rng, 1.5);
        const IdentityCheck chk = verify_jordan_identity(a, b, x, y, z);
        out.records.push_back({"jordan", f.to_string(), chk.name, cfg.seed, k,
                               chk.residual, chk.scale, t,
                               chk.residual <= t * chk.scale, false, ""});
    }
    return out;
}

SuiteResult run_catalogue(const Factor& f, const RunConfig& cfg,
                          const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("catalogue");
    const std::vector<IdentityId> ids = identity_catalogue();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (int k = 0; k < cfg.trials; ++k) {
            Rng rng = stream_rng(cfg.seed, i, static_cast<std::uint64_t>(k));
            std::vector<Element> args;
            const int arity = identity_arity(ids[i]);
            args.reserve(static_cast<std::size_t>(arity));
            for (int j = 0; j < arity; ++j)
                args.push_back(random_element(f, rng, 0.6));
            const IdentityCheck chk = verify_identity(ids[i], args);
            out.records.push_back({"catalogue", f.to_string(), chk.name, cfg.seed,
                                   k, chk.residual, chk.scale, t,
                                   chk.skipped || chk.residual <= t, chk.skipped,
                                   chk.skip_reason});
        }
    }
    return out;
}

// B(g_a(b), g_a(b)) = B_a B(b,-a)^{-1} B(b,b) B(-a,b)^{-1} B_a for a inside
// the ball and b up to the sphere.
SuiteResult run_bergmann(const Factor& f, const RunConfig& cfg,
                         const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("bergmann");
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element a = random_element(f, rng, 0.6);
        const Element b = (k % 2 == 0) ? random_element(f, rng, 1.0)
                                       : random_boundary_element(f, rng);
        const Element c = transvection_apply(a, b);
        const LinearMap lhs = bergmann(c, c);
        const BergmannSqrt ba = bergmann_sqrt(a);
        const LinearMap rhs = ba.map.compose(bergmann(b, -a).inverse())
                                  .compose(bergmann(b, b))
                                  .compose(bergmann(-a, b).inverse())
                                  .compose(ba.map);
        const double residual = (lhs - rhs).frobenius_norm();
        out.records.push_back({"bergmann", f.to_string(), "image-factorization",
                               cfg.seed, k, residual, 1.0, t, residual <= t,
                               false, ""});
    }
    return out;
}

SuiteResult run_gamma(const Factor& f, const RunConfig& cfg,
                      const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("gamma");
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element a = random_element(f, rng, 0.6);
        const Element e = gamma_point(f, rng);
        const Element w = transvection_apply(a, e);
        const double residual = bergmann(w, w).frobenius_norm();
        out.records.push_back({"gamma", f.to_string(), "maximal-invariance",
                               cfg.seed, k, residual, 1.0, t, residual <= t,
                               false, ""});
    }
    return out;
}

SuiteResult run_gamma1(const Factor& f, const RunConfig& cfg,
                       const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("gamma1");
    if (!f.admits_unitary()) {
        out.records.push_back({"gamma1", f.to_string(), "unitary-invariance",
                               cfg.seed, 0, 0.0, 1.0, t, true, true,
                               "factor has no unitary tripotents"});
        return out;
    }
    const LinearMap id = LinearMap::identity(f);
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element a = random_element(f, rng, 0.6);
        const Element u = gamma1_point(f, rng);
        const Element w = transvection_apply(a, u);
        const ConjugateLinearMap qw = q_operator(w);
        const double residual = (qw.compose(qw) - id).frobenius_norm();
        out.records.push_back({"gamma1", f.to_string(), "unitary-invariance",
                               cfg.seed, k, residual, 1.0, t, residual <= t,
                               false, ""});
    }
    return out;
}

SuiteResult run_composition(const Factor& f, const RunConfig& cfg,
                            const ToleranceTable& tol) {
    SuiteResult out;
    const double tc = tol.get("composition");
    const double tk = tol.get("k-isometry");
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element a = random_element(f, rng, 0.6);
        const Element b = random_element(f, rng, 0.6);
        const Element x = random_element(f, rng, 0.9);

        const LinearMap kab = k_isometry(a, b);
        const Element c = transvection_apply(a, b);
        const Element lhs = transvection_apply(a, transvection_apply(b, x));
        const Element rhs = transvection_apply(c, kab.apply(x));
        const double comp = ball_norm(lhs - rhs);
        out.records.push_back({"composition", f.to_string(), "composition-law",
                               cfg.seed, k, comp, 1.0, tc, comp <= tc, false,
                               ""});

        const Element swapped =
            k_isometry(b, a).inverse().apply(transvection_apply(b, a));
        const double swap = ball_norm(c - swapped);
        out.records.push_back({"composition", f.to_string(), "swap-law",
                               cfg.seed, k, swap, 1.0, tc, swap <= tc, false,
                               ""});

        const Element probe = random_boundary_element(f, rng);
        const double drift = std::abs(ball_norm(kab.apply(probe)) - 1.0);
        out.records.push_back({"composition", f.to_string(),
                               "transition-isometry", cfg.seed, k, drift, 1.0,
                               tk, drift <= tk, false, ""});
    }
    return out;
}

SuiteResult run_derivative(const Factor& f, const RunConfig& cfg,
                           const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("derivative");
    const double h = 1e-6;
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element a = random_element(f, rng, 0.6);
        const Element x0 = random_element(f, rng, 0.5);
        const LinearMap d = transvection_derivative(a, x0);
        Eigen::MatrixXcd fd(f.dim(), f.dim());
        for (int j = 0; j < f.dim(); ++j) {
            const Element ej = Element::basis(f, j);
            const Element plus = transvection_apply(a, x0 + ej * Complex(h, 0.0));
            const Element minus = transvection_apply(a, x0 - ej * Complex(h, 0.0));
            fd.col(j) = (plus.coords() - minus.coords()) / (2.0 * h);
        }
        const double scale = std::max(1.0, d.frobenius_norm());
        const double residual = (fd - d.matrix()).norm();
        out.records.push_back({"derivative", f.to_string(), "derivative-fd",
                               cfg.seed, k, residual, scale, t,
                               residual <= t * scale, false, ""});
    }
    return out;
}

SuiteResult run_maximal_unitary(const Factor& f, const RunConfig& cfg,
                                const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("gamma1");
    if (!f.admits_unitary()) {
        out.records.push_back({"maximal-unitary", f.to_string(),
                               "maximal-is-unitary", cfg.seed, 0, 0.0, 1.0, t,
                               true, true, "factor has no unitary tripotents"});
        return out;
    }
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element e = gamma_point(f, rng);
        const TripotentFlags flags = classify_tripotent(e, t);
        out.records.push_back({"maximal-unitary", f.to_string(),
                               "maximal-is-unitary", cfg.seed, k,
                               flags.unitary_residual, 1.0, t, flags.is_unitary,
                               false, ""});
    }
    return out;
}

SuiteResult run_algnorm(const Factor& f, const RunConfig& cfg,
                        const ToleranceTable& tol) {
    SuiteResult out;
    const double slack = tol.get("algnorm");
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element x = random_element(f, rng, 2.0);
        const double bn2 = std::pow(ball_norm(x), 2);
        const double an2 = std::pow(algebraic_norm(x), 2);
        const double lower = bn2 - an2;
        const double upper = an2 - f.rank() * bn2;
        const double residual = std::max(0.0, std::max(lower, upper));
        out.records.push_back({"algnorm", f.to_string(),
                               "algebraic-norm-squeeze", cfg.seed, k, residual,
                               1.0, slack, residual <= slack, false, ""});
    }
    return out;
}

SuiteResult run_russo_dye(const Factor& f, const RunConfig& cfg,
                          const ToleranceTable& tol) {
    SuiteResult out;
    const double t512 = tol.get("russo-dye");
    const double slack = tol.get("quadrature-slack");
    const double tg = tol.get("gamma");
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element b = random_element(f, rng, 0.9);
        const Element a = gamma_point(f, rng);
        std::vector<double> errors;
        double witness = 0.0;
        for (int n : cfg.quadrature_ns) {
            const RussoDye rd = russo_dye_reconstruct(b, a, n);
            errors.push_back(rd.error);
            witness = std::max(witness, rd.witness_maximality);
            const double gate = (n >= 512) ? t512 : 2.0;
            out.records.push_back({"russo-dye", f.to_string(),
                                   "N=" + std::to_string(n), cfg.seed, k,
                                   rd.error, 1.0, gate, rd.error <= gate, false,
                                   ""});
        }
        double worst_step = 0.0;
        for (std::size_t i = 0; i + 1 < errors.size(); ++i)
            worst_step = std::max(worst_step, errors[i + 1] - errors[i]);
        out.records.push_back({"russo-dye", f.to_string(), "monotone", cfg.seed,
                               k, worst_step, 1.0, slack, worst_step <= slack,
                               false, ""});
        out.records.push_back({"russo-dye", f.to_string(), "witness-maximality",
                               cfg.seed, k, witness, 1.0, tg, witness <= tg,
                               false, ""});
    }
    return out;
}

SuiteResult run_mean_value(const Factor& f, const RunConfig& cfg,
                           const ToleranceTable& tol) {
    SuiteResult out;
    const double t = tol.get("mean-value");
    const int n = cfg.quadrature_ns.empty() ? 512 : cfg.quadrature_ns.back();
    const std::vector<std::string>& ids = TestFunction::registered_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (int k = 0; k < cfg.trials; ++k) {
            Rng rng = stream_rng(cfg.seed, i, static_cast<std::uint64_t>(k));
            const TestFunction fn = TestFunction::random(f, ids[i], rng);
            const Element b = random_element(f, rng, 0.8);
            const Element a = gamma_point(f, rng);
            const double residual = mean_value_check(fn, b, a, n);
            out.records.push_back({"mean-value", f.to_string(), ids[i], cfg.seed,
                                   k, residual, 1.0, t, residual <= t, false,
                                   ""});
        }
    }
    return out;
}

SuiteResult run_boundary(const Factor& f, const RunConfig& cfg,
                         const ToleranceTable& tol) {
    SuiteResult out;
    const double tb = tol.get("boundary");
    const double tm = tol.get("membership");
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element x = random_boundary_element(f, rng);

        bool skipped = false;
        std::string note;
        double agree = 0.0;
        try {
            const Element e1 = boundary_tripotent(x, BoundaryMethod::Iterate);
            const Element e2 = boundary_tripotent(x, BoundaryMethod::Spectral);
            agree = ball_norm(e1 - e2);
        } catch (const SlowConvergenceError& err) {
            skipped = true;
            note = err.what();
        }
        out.records.push_back({"boundary", f.to_string(), "method-agreement",
                               cfg.seed, k, agree, 1.0, tb,
                               skipped || agree <= tb, skipped, note});

        try {
            const BoundaryComponent comp = boundary_component(x);
            const bool rank_ok = comp.rank >= 0 && comp.rank <= f.rank();
            out.records.push_back(
                {"boundary", f.to_string(), "component-membership", cfg.seed, k,
                 comp.membership_residual, 1.0, tm,
                 comp.membership_residual <= tm && rank_ok, false,
                 "rank=" + std::to_string(comp.rank)});

            const BallAutomorphism g = random_automorphism(f, rng, 0.6);
            const RankPreservation rp =
                component_rank_preserved(x, g, 3, rng.next_u64());
            const double gap = std::abs(rp.rank_before - rp.rank_after);
            out.records.push_back(
                {"boundary", f.to_string(), "rank-preserved", cfg.seed, k, gap,
                 1.0, 0.0, rp.rank_before == rp.rank_after && rp.samples_in_image,
                 false,
                 "before=" + std::to_string(rp.rank_before) +
                     " after=" + std::to_string(rp.rank_after) +
                     " worst-sample=" + fmt(rp.worst_sample_residual)});
        } catch (const Error& err) {
            out.records.push_back({"boundary", f.to_string(), "component", cfg.seed,
                                   k, 0.0, 1.0, tm, false, false, err.what()});
        }
    }
    return out;
}

SuiteResult run_determining(const Factor& f, const RunConfig& cfg,
                            const ToleranceTable& tol) {
    SuiteResult out;
    const double coeff = tol.get("determining-coeff");
    const double tgap = coeff / std::sqrt(static_cast<double>(cfg.n_set));

    Rng crng = stream_rng(cfg.seed, 0xC1, 0);
    const Element v = gamma_point(f, crng);

    std::vector<DeterminingSet> sets = {DeterminingSet::Gamma};
    if (f.admits_unitary()) sets.push_back(DeterminingSet::Gamma1);
    sets.push_back(DeterminingSet::OrbitG0);
    sets.push_back(DeterminingSet::OrbitG);

    const std::vector<std::string>& ids = TestFunction::registered_ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Rng frng = stream_rng(cfg.seed, 0xF0, i);
        const TestFunction fn = TestFunction::random(f, ids[i], frng);
        for (const DeterminingSet set : sets) {
            const bool orbit =
                set == DeterminingSet::OrbitG0 || set == DeterminingSet::OrbitG;
            const DeterminingReport rep = determining_sup(
                fn, set, cfg.n_set, cfg.n_ball, frng.next_u64(),
                orbit ? std::optional<Element>(v) : std::nullopt);
            out.records.push_back(
                {"determining", f.to_string(), ids[i] + "/" + rep.set_name,
                 cfg.seed, static_cast<int>(i), rep.gap, 1.0, tgap,
                 rep.gap <= tgap, false,
                 "sup_ball=" + fmt(rep.sup_ball) + " sup_set=" + fmt(rep.sup_set)});
        }
    }
    return out;
}

SuiteResult run_shilov(const Factor& f, const RunConfig& cfg,
                       const ToleranceTable& tol) {
    SuiteResult out;
    const double tpeak = tol.get("witness-peak");
    const double eps = cfg.epsilon;
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element e = gamma_point(f, rng);
        const double delta = delta_for_epsilon(algebraic_norm(e), eps);
        const double eta = eta_for_delta(delta);

        const double peak = std::abs(shilov_witness(e, e) - Complex(1.0, 0.0));
        out.records.push_back({"shilov", f.to_string(), "peak-at-witness",
                               cfg.seed, k, peak, 1.0, tpeak, peak <= tpeak,
                               false, ""});

        int far = 0;
        double worst = 0.0;
        for (int j = 0; j < cfg.n_set; ++j) {
            const Element z = random_boundary_element(f, rng);
            if (ball_norm(z - e) < eps) continue;
            ++far;
            worst = std::max(worst, std::abs(shilov_witness(e, z)));
        }
        out.records.push_back(
            {"shilov", f.to_string(), "eta-bound", cfg.seed, k, worst, 1.0,
             1.0 - eta, worst <= 1.0 - eta, false,
             "eta=" + fmt(eta) + " delta=" + fmt(delta) +
                 " gap=" + fmt(1.0 - worst) + " far-samples=" + std::to_string(far)});
    }
    return out;
}

SuiteResult run_orbit_closure(const Factor& f, const RunConfig& cfg,
                              const ToleranceTable& tol) {
    SuiteResult out;
    (void)tol;
    const std::vector<double> grid = {0.9, 0.99, 0.999};
    for (int k = 0; k < cfg.trials; ++k) {
        Rng rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(k));
        const Element v = random_boundary_element(f, rng);
        const Element e = gamma_point(f, rng);
        const std::vector<OrbitClosurePoint> pts =
            gamma_in_orbit_closure_demo(v, e, grid);
        for (const OrbitClosurePoint& pt : pts) {
            out.records.push_back({"orbit-closure", f.to_string(),
                                   "t=" + fmt(pt.t), cfg.seed, k, pt.distance,
                                   1.0, 2.0, true, !pt.ok, pt.note});
        }
    }
    return out;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "jordan",     "catalogue",  "bergmann",        "gamma",  "gamma1",
        "composition", "derivative", "maximal-unitary", "algnorm"};
    return names;
}

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "russo-dye", "mean-value", "boundary",
        "determining", "shilov",   "orbit-closure"};
    return names;
}

SuiteResult run_verify_suite(const std::string& suite, const Factor& f,
                             const RunConfig& cfg, const ToleranceTable& tol) {
    if (suite == "jordan") return run_jordan(f, cfg, tol);
    if (suite == "catalogue") return run_catalogue(f, cfg, tol);
    if (suite == "bergmann") return run_bergmann(f, cfg, tol);
    if (suite == "gamma") return run_gamma(f, cfg, tol);
    if (suite == "gamma1") return run_gamma1(f, cfg, tol);
    if (suite == "composition") return run_composition(f, cfg, tol);
    if (suite == "derivative") return run_derivative(f, cfg, tol);
    if (suite == "maximal-unitary") return run_maximal_unitary(f, cfg, tol);
    if (suite == "algnorm") return run_algnorm(f, cfg, tol);
    throw DomainError("unknown verify suite '" + suite + "'");
}

SuiteResult run_experiment(const std::string& experiment, const Factor& f,
                           const RunConfig& cfg, const ToleranceTable& tol) {
    if (experiment == "russo-dye") return run_russo_dye(f, cfg, tol);
    if (experiment == "mean-value") return run_mean_value(f, cfg, tol);
    if (experiment == "boundary") return run_boundary(f, cfg, tol);
    if (experiment == "determining") return run_determining(f, cfg, tol);
    if (experiment == "shilov") return run_shilov(f, cfg, tol);
    if (experiment == "orbit-closure") return run_orbit_closure(f, cfg, tol);
    throw DomainError("unknown experiment '" + experiment + "'");
}

std::string render_jsonl(const SuiteResult& result) {
    std::string out;
    for (const TrialRecord& r : result.records) {
        out += r.to_json().dump();
        out += '\n';
    }
    return out;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace

std::string render_csv(const SuiteResult& result) {
    std::string out =
        "suite,factor,name,seed,trial,residual,scale,tolerance,pass,skipped,note\n";
    for (const TrialRecord& r : result.records) {
        out += csv_escape(r.suite) + ',' + csv_escape(r.factor) + ',' +
               csv_escape(r.name) + ',' + Json(r.seed).dump() + ',' +
               Json(r.trial).dump() + ',' + Json(r.residual).dump() + ',' +
               Json(r.scale).dump() + ',' + Json(r.tolerance).dump() + ',' +
               (r.pass ? "true" : "false") + ',' +
               (r.skipped ? "true" : "false") + ',' + csv_escape(r.note) + '\n';
    }
    return out;
}

std::string render_text(const SuiteResult& result) {
    struct Group {
        std::string suite, factor, name;
        int trials = 0, passed = 0, skipped = 0;
        double max_residual = 0.0;
        double tolerance = 0.0;
    };
    std::vector<Group> groups;
    for (const TrialRecord& r : result.records) {
        Group* g = nullptr;
        for (Group& cand : groups)
            if (cand.suite == r.suite && cand.factor == r.factor &&
                cand.name == r.name) {
                g = &cand;
                break;
            }
        if (!g) {
            groups.push_back({r.suite, r.factor, r.name, 0, 0, 0, 0.0, r.tolerance});
            g = &groups.back();
        }
        ++g->trials;
        if (r.pass) ++g->passed;
        if (r.skipped)
            ++g->skipped;
        else
            g->max_residual = std::max(g->max_residual, r.residual);
    }

    std::size_t w_suite = 5, w_factor = 6, w_name = 4;
    for (const Group& g : groups) {
        w_suite = std::max(w_suite, g.suite.size());
        w_factor = std::max(w_factor, g.factor.size());
        w_name = std::max(w_name, g.name.size());
    }

    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(w_suite + 2)) << "suite"
       << std::setw(static_cast<int>(w_factor + 2)) << "factor"
       << std::setw(static_cast<int>(w_name + 2)) << "name" << std::right
       << std::setw(8) << "trials" << std::setw(8) << "pass" << std::setw(6)
       << "skip" << std::setw(15) << "max-residual" << std::setw(12)
       << "tolerance" << '\n';
    for (const Group& g : groups) {
        char resid[24], tolbuf[24];
        std::snprintf(resid, sizeof resid, "%.3e", g.max_residual);
        std::snprintf(tolbuf, sizeof tolbuf, "%.1e", g.tolerance);
        os << std::left << std::setw(static_cast<int>(w_suite + 2)) << g.suite
           << std::setw(static_cast<int>(w_factor + 2)) << g.factor
           << std::setw(static_cast<int>(w_name + 2)) << g.name << std::right
           << std::setw(8) << g.trials << std::setw(8) << g.passed
           << std::setw(6) << g.skipped << std::setw(15) << resid
           << std::setw(12) << tolbuf << '\n';
    }
    os << "records: " << result.records.size()
       << "  failures: " << result.failures() << '\n';
    return os.str();
}

} // namespace cli
} // namespace jbt
