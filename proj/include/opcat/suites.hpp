#pragma once

#include "opcat/io.hpp"

namespace opcat {

/// Configuration of a verification run.  Every quantity that affects the
/// outcome is here, so a report is reproducible from its embedded config.
struct SuiteConfig {
    Field field = Field::Real;
    int ambient_dim = 6;
    int samples = 200;
    std::uint64_t seed = 0;
    Tolerances tol;
    std::vector<std::string> suites;  // empty means every suite
    std::vector<int> profile_dims = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};

    void validate() const;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    int samples = 0;
    double max_residual = 0.0;
    io::json worst;  // sample achieving the max residual; null when empty
    double wall_ms = 0.0;
    std::string note;
};

struct VerificationReport {
    SuiteConfig config;
    std::vector<SuiteResult> results;
    bool all_pass = false;
};

/// Names of every suite, in canonical order.
const std::vector<std::string>& all_suite_names();

/// Run the configured suites on a small worker pool.  Each sample derives
/// its own seed from (seed, suite, index), so the report is independent of
/// scheduling.  A suite passes iff its max residual is at most eps_eq.
VerificationReport run_suites(const SuiteConfig& cfg);

/// Serialized report; wall-clock fields are the only nondeterministic part
/// and can be omitted.
io::json report_to_json(const VerificationReport& report, bool include_wall = true);

}  // namespace opcat
