#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kazhdan/catalog.hpp"
#include "kazhdan/certify.hpp"
#include "kazhdan/reference.hpp"
#include "kazhdan/sdp.hpp"

namespace kazhdan {

enum ExitCode : int {
    kCertifiedPositive = 0,
    kSolverNotConverged = 2,
    kCertificationNonPositive = 3,
    kInputError = 4,
};

struct RunOptions {
    std::string group;
    std::optional<int> radius;
    std::string solver = "internal";  // internal | export
    SolverParams solver_params;
    int rounding_bits = 32;
    CompletionBudget budget;
    /// Directory for certificates and exported problems; empty disables files.
    std::string out_dir;
    /// External solution to certify instead of solving (export mode).
    std::string solution_file;
};

struct RunReport {
    std::string group;
    std::size_t generating_set_size = 0;
    int radius = 0;
    std::size_t ball_size = 0;      // |Ball(d)|
    std::size_t universe_size = 0;  // |Ball(2d)| as reached by pairing products
    std::size_t orbit_constraints = 0;
    bool identification_complete = false;
    std::size_t rewrite_rules = 0;

    std::string solver;
    bool converged = false;
    long iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double min_eigenvalue = 0.0;

    bool solved = false;  // a numeric solution exists (internal or imported)
    double eps_numeric = 0.0;
    double kappa_numeric = 0.0;
    bool certified = false;
    std::string eps_certified_exact;
    double eps_certified = 0.0;
    std::string kappa_certified = "0";
    double residual_l1 = 0.0;
    std::string tau = "0";
    int D = 0;
    bool involution_free = false;

    std::vector<ReferenceValue> references;
    std::optional<PublishedBound> published;

    double wall_seconds = 0.0;
    std::string certificate_path;
    std::string exported_problem_path;
    std::string message;
    int exit_code = kInputError;

    /// Configuration echo.
    RunOptions options;
};

/// backend -> ball -> assemble -> solve (or import) -> certify -> report.
/// Input errors are thrown as InputError.
RunReport run_bound(const RunOptions& options, Certificate* certificate = nullptr);

std::string report_json(const RunReport& report);
std::string report_csv_header();
std::string report_csv_row(const RunReport& report);
/// Markdown table with one row per run.
std::string report_table(const std::vector<RunReport>& reports);

}  // namespace kazhdan
