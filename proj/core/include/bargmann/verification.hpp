#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bargmann/coefficients.hpp"

namespace bargmann {

/// Knobs shared by every verification suite.
struct RunConfig {
    double nu = 1.0;
    int truncation = 32;
    int quad_nodes = 96;
    double tolerance = 1e-8;
    std::uint64_t seed = 12345;
    std::vector<std::string> suites;  // empty means all

    void validate() const;  // throws std::invalid_argument
};

/// Outcome of one verified identity.
struct TransformReport {
    std::string identity;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int quad_nodes = 0;
    int truncation = 0;
    std::map<std::string, double> constants;  // resolved/fitted values
};

struct SuiteResult {
    std::string name;
    std::vector<TransformReport> reports;
    bool pass = false;
};

struct SuiteReport {
    std::string version;
    RunConfig config;
    std::vector<SuiteResult> suites;
    /// The fitted constants are always resolved and echoed here, whatever
    /// suites were requested: the explicit left-inverse prefactor, the two
    /// kernel-identity scalars, and the level-2 iterated-transform constant.
    std::map<std::string, double> resolved_constants;
    bool pass = false;
    double wall_time_ms = 0.0;
};

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

std::vector<TransformReport> run_suite(const std::string& name, const RunConfig& config);

/// Runs the configured suites (all when the list is empty). Unknown suite
/// names throw std::invalid_argument before any computation.
SuiteReport run_verification(const RunConfig& config);

// -- seeded random inputs ------------------------------------------------------
// Coefficient magnitudes decay like 1/sqrt(m!) so truncation tails stay
// negligible against the suite tolerances. Deterministic across platforms:
// the generator maps raw mt19937_64 words to [-1, 1) directly.

HermiteCoeffs random_hermite(double nu, int max_index, std::uint64_t seed);
HermiteCoeffsQ random_hermite_q(double nu, int max_index, std::uint64_t seed);
FockCoeffs2 random_fock2(double nu, int rows, int cols, std::uint64_t seed);
ASubspaceCoeffs random_a2(double nu, int max_index, std::uint64_t seed);
SliceRegularSeries random_slice_series(double nu, int max_index, std::uint64_t seed);

// -- JSON ------------------------------------------------------------------------

std::string to_json_string(const TransformReport& report, int indent = 2);
std::string to_json_string(const SuiteReport& report, int indent = 2);
std::string run_config_to_json(const RunConfig& config, int indent = 2);

/// Parses a JSON object mirroring RunConfig; absent fields keep the
/// defaults of `base`.
RunConfig run_config_from_json(const std::string& text, RunConfig base = {});

}  // namespace bargmann
