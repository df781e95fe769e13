// Command-line entry point: invariant suites and experiments over the
// implemented factors, with seed-reproducible JSONL/CSV/text reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jbt/errors.hpp"
#include "jbt/suites.hpp"

namespace {

const std::vector<std::string> kDefaultFactors = {
    "matrix:2x2",   "matrix:2x3",   "matrix:3x3",
    "commutative:2", "commutative:4", "matrix:2x2+commutative:1"};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const std::string& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size() || v <= 0)
            throw jbt::DomainError("bad integer list entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw jbt::DomainError("empty integer list");
    return out;
}

// --tol.<name> <value> and --tol.<name>=<value> are stripped before CLI11
// sees the argument vector.
std::map<std::string, double> extract_tolerance_flags(std::vector<std::string>& args) {
    std::map<std::string, double> overrides;
    for (auto it = args.begin(); it != args.end();) {
        if (it->rfind("--tol.", 0) != 0) {
            ++it;
            continue;
        }
        std::string name = it->substr(6);
        std::string value;
        const std::size_t eq = name.find('=');
        if (eq != std::string::npos) {
            value = name.substr(eq + 1);
            name = name.substr(0, eq);
            it = args.erase(it);
        } else {
            auto next = std::next(it);
            if (next == args.end())
                throw jbt::DomainError("--tol." + name + " needs a value");
            value = *next;
            it = args.erase(it, std::next(next));
        }
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size())
            throw jbt::DomainError("bad tolerance value '" + value + "'");
        overrides[name] = v;
    }
    return overrides;
}

} // namespace

int main(int argc, char** argv) {
    using namespace jbt;

    std::vector<std::string> args(argv + 1, argv + argc);
    std::map<std::string, double> tol_flags;
    try {
        tol_flags = extract_tolerance_flags(args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Computation and verification kit for finite-rank JB*-triple factors"};
    app.require_subcommand(0, 1);

    std::vector<std::string> factor_specs;
    std::vector<std::string> suite_sel, experiment_sel;
    int trials = 100;
    std::uint64_t seed = 0;
    std::string n_list;
    double epsilon = 0.5;
    int n_set = 400, n_ball = 400;
    std::string out_path, format = "text", config_path;

    app.add_option("--factor", factor_specs,
                   "factor spec, repeatable (default: " + join(kDefaultFactors) + ")");
    app.add_option("--trials", trials, "trials per suite and factor")
        ->capture_default_str();
    app.add_option("--seed", seed, "master seed; every record derives from it")
        ->capture_default_str();
    app.add_option("--N", n_list, "quadrature node counts, comma separated "
                                  "(default 16,64,256,512)");
    app.add_option("--epsilon", epsilon,
                   "exclusion radius for the shilov experiment")
        ->capture_default_str();
    app.add_option("--n-set", n_set, "determining/shilov set sample count")
        ->capture_default_str();
    app.add_option("--n-ball", n_ball, "interior comparison sample count")
        ->capture_default_str();
    app.add_option("--out", out_path,
                   "report file; relative paths resolve under $JBT_OUT_DIR");
    app.add_option("--format", format, "jsonl, csv, or text")
        ->check(CLI::IsMember({"jsonl", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--config", config_path,
                   "JSON config supplying any of the flags; explicit flags win");

    CLI::App* vcmd = app.add_subcommand(
        "verify", "run invariant suites (" + join(verify_suite_names()) + ")");
    vcmd->add_option("name", suite_sel, "suites to run (default: all)");
    vcmd->add_option("--suite", suite_sel, "suites to run (default: all)");
    vcmd->fallthrough();

    CLI::App* ecmd = app.add_subcommand(
        "experiment", "run experiments (" + join(experiment_names()) + ")");
    ecmd->add_option("name", experiment_sel, "experiments to run (default: all)");
    ecmd->add_option("--experiment", experiment_sel,
                     "experiments to run (default: all)");
    ecmd->fallthrough();

    try {
        std::vector<const char*> argp;
        argp.push_back(argv[0]);
        for (const std::string& s : args) argp.push_back(s.c_str());
        app.parse(static_cast<int>(argp.size()), argp.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::map<std::string, double> config_tols;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw DomainError("cannot open config '" + config_path + "'");
            Json cfgj = Json::parse(in);
            if (!app.count("--factor") && cfgj.contains("factor")) {
                const Json& jf = cfgj.at("factor");
                if (jf.is_array())
                    for (const Json& one : jf)
                        factor_specs.push_back(factor_from_json(one).to_string());
                else
                    factor_specs.push_back(factor_from_json(jf).to_string());
            }
            if (suite_sel.empty() && cfgj.contains("suite")) {
                const Json& js = cfgj.at("suite");
                if (js.is_array())
                    for (const Json& one : js)
                        suite_sel.push_back(one.get<std::string>());
                else
                    suite_sel.push_back(js.get<std::string>());
            }
            if (experiment_sel.empty() && cfgj.contains("experiment")) {
                const Json& je = cfgj.at("experiment");
                if (je.is_array())
                    for (const Json& one : je)
                        experiment_sel.push_back(one.get<std::string>());
                else
                    experiment_sel.push_back(je.get<std::string>());
            }
            if (!app.count("--trials") && cfgj.contains("trials"))
                trials = cfgj.at("trials").get<int>();
            if (!app.count("--seed") && cfgj.contains("seed"))
                seed = cfgj.at("seed").get<std::uint64_t>();
            if (!app.count("--N") && cfgj.contains("N")) {
                const Json& jn = cfgj.at("N");
                if (jn.is_string())
                    n_list = jn.get<std::string>();
                else {
                    n_list.clear();
                    for (const Json& v : jn) {
                        if (!n_list.empty()) n_list += ',';
                        n_list += std::to_string(v.get<int>());
                    }
                }
            }
            if (!app.count("--epsilon") && cfgj.contains("epsilon"))
                epsilon = cfgj.at("epsilon").get<double>();
            if (!app.count("--n-set") && cfgj.contains("n_set"))
                n_set = cfgj.at("n_set").get<int>();
            if (!app.count("--n-ball") && cfgj.contains("n_ball"))
                n_ball = cfgj.at("n_ball").get<int>();
            if (!app.count("--out") && cfgj.contains("out"))
                out_path = cfgj.at("out").get<std::string>();
            if (!app.count("--format") && cfgj.contains("format"))
                format = cfgj.at("format").get<std::string>();
            if (cfgj.contains("tolerances"))
                for (const auto& [name, value] : cfgj.at("tolerances").items())
                    config_tols[name] = value.get<double>();
        }

        const bool is_verify = vcmd->parsed();
        const bool is_experiment = ecmd->parsed();
        if (is_verify && is_experiment)
            throw DomainError("choose either verify or experiment");
        bool verify_mode = is_verify;
        if (!is_verify && !is_experiment) {
            if (!experiment_sel.empty())
                verify_mode = false;
            else if (!suite_sel.empty())
                verify_mode = true;
            else
                throw DomainError("nothing to run: give a subcommand or a config "
                                  "with a suite/experiment entry");
        }
        if (format != "jsonl" && format != "csv" && format != "text")
            throw DomainError("unknown format '" + format + "'");

        if (trials < 1) throw DomainError("--trials must be positive");
        RunConfig cfg;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.epsilon = epsilon;
        cfg.n_set = n_set;
        cfg.n_ball = n_ball;
        if (!n_list.empty()) cfg.quadrature_ns = parse_int_list(n_list);

        ToleranceTable tol;
        for (const auto& [name, value] : config_tols) tol.set(name, value);
        for (const auto& [name, value] : tol_flags) tol.set(name, value);

        if (factor_specs.empty()) factor_specs = kDefaultFactors;
        std::vector<Factor> factors;
        factors.reserve(factor_specs.size());
        for (const std::string& s : factor_specs) factors.push_back(Factor::parse(s));

        const std::vector<std::string> names =
            verify_mode ? (suite_sel.empty() ? verify_suite_names() : suite_sel)
                        : (experiment_sel.empty() ? experiment_names()
                                                  : experiment_sel);

        SuiteResult all;
        for (const Factor& f : factors)
            for (const std::string& name : names) {
                SuiteResult one = verify_mode ? run_verify_suite(name, f, cfg, tol)
                                              : run_experiment(name, f, cfg, tol);
                all.records.insert(all.records.end(),
                                   std::make_move_iterator(one.records.begin()),
                                   std::make_move_iterator(one.records.end()));
            }

        const std::string rendered = format == "jsonl" ? render_jsonl(all)
                                    : format == "csv"  ? render_csv(all)
                                                       : render_text(all);
        if (out_path.empty()) {
            std::cout << rendered;
        } else {
            std::string path = out_path;
            if (path.front() != '/') {
                if (const char* dir = std::getenv("JBT_OUT_DIR"); dir && *dir)
                    path = std::string(dir) + "/" + path;
            }
            std::ofstream out(path, std::ios::binary);
            if (!out) throw DomainError("cannot write '" + path + "'");
            out << rendered;
            std::cout << render_text(all);
            std::cout << "report written to " << path << "\n";
        }

        if (all.failures() > 0) {
            int shown = 0;
            for (const TrialRecord& r : all.records) {
                if (r.pass) continue;
                if (shown++ == 20) {
                    std::cerr << "... (" << all.failures() - 20 << " more)\n";
                    break;
                }
                std::cerr << "FAIL " << r.suite << " " << r.factor << " " << r.name
                          << " seed=" << r.seed << " trial=" << r.trial
                          << " residual=" << r.residual
                          << " tolerance=" << r.tolerance << "\n";
            }
            return 1;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
