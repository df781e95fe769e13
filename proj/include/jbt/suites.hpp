#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jbt/boundary.hpp"
#include "jbt/identities.hpp"
#include "jbt/serialization.hpp"

namespace jbt {
inline namespace cli {

// Every default tolerance lives here; records echo the value they were
// gated against.  Names double as the --tol.<name> override keys.
//
//   jordan           1e-10  relative residual, Jordan triple identity
//   catalogue        1e-9   absolute residual, quasi-inverse identity catalogue
//   bergmann         1e-9   Frobenius residual, transvection image factorization
//   gamma            1e-8   Frobenius norm of B(g_a(e), g_a(e)) for maximal e
//   gamma1           1e-8   Frobenius norm of Q^2 - Id for images of unitaries
//   composition      1e-9   pointwise residual of composition and swap laws
//   k-isometry       1e-10  norm drift of the transition isometry on probes
//   derivative       1e-5   relative error vs central finite differences
//   russo-dye        1e-8   reconstruction error at N = 512
//   quadrature-slack 1e-13  allowed non-monotonicity once errors hit the
//                           floating-point floor
//   mean-value       1e-8   quadrature mean vs center value at N = 512
//   boundary         1e-8   agreement of the two boundary-tripotent methods
//   membership       1e-9   boundary-component membership certificate
//   algnorm          1e-12  additive slack in the norm comparison chain
//   determining-coeff 1.0   sup-gap threshold coefficient; the per-record
//                           threshold is coeff / sqrt(n_set)
class ToleranceTable {
  public:
    ToleranceTable();

    double get(const std::string& name) const;
    void set(const std::string& name, double value);
    const std::map<std::string, double>& entries() const { return entries_; }

  private:
    std::map<std::string, double> entries_;
};

struct TrialRecord {
    std::string suite;
    std::string factor;
    std::string name;
    std::uint64_t seed = 0;
    int trial = 0;
    double residual = 0.0;
    double scale = 1.0;
    double tolerance = 0.0;
    bool pass = true;
    bool skipped = false;
    std::string note;

    Json to_json() const;
};

struct SuiteResult {
    std::vector<TrialRecord> records;

    int failures() const;
    bool all_pass() const { return failures() == 0; }
    double max_residual() const;
};

struct RunConfig {
    int trials = 100;
    std::uint64_t seed = 0;
    std::vector<int> quadrature_ns = {16, 64, 256, 512};
    double epsilon = 0.5;
    int n_set = 400;  // determining-set sample count
    int n_ball = 400; // interior comparison sample count
};

const std::vector<std::string>& verify_suite_names();
const std::vector<std::string>& experiment_names();

// Verify suites: jordan, catalogue, bergmann, gamma, gamma1, composition,
// derivative, maximal-unitary, algnorm.
SuiteResult run_verify_suite(const std::string& suite, const Factor& f,
                             const RunConfig& cfg, const ToleranceTable& tol);

// Experiments: russo-dye, mean-value, boundary, determining, shilov,
// orbit-closure.
SuiteResult run_experiment(const std::string& experiment, const Factor& f,
                           const RunConfig& cfg, const ToleranceTable& tol);

// Renderers; all three are deterministic functions of the record list.
std::string render_jsonl(const SuiteResult& result);
std::string render_csv(const SuiteResult& result);
std::string render_text(const SuiteResult& result);

} // namespace cli
} // namespace jbt
