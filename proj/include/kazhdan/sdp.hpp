#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kazhdan/ball.hpp"
#include "kazhdan/group_ring.hpp"

namespace kazhdan {

/// maximize eps subject to  sum_{(i,j) in F_g} Q_ij + eps u_g = t_g  for
/// every g in the pairing universe, Q PSD, where t = coefficients of
/// Delta^2 and u = coefficients of Delta.
///
/// Since Q is symmetric, the equations for g and g^-1 coincide; they are
/// kept once per orbit {g, g^-1}.
struct SdpProblem {
    struct Orbit {
        std::uint32_t g = 0;        // universe index, g <= inverse
        std::uint32_t inverse = 0;
        double target = 0.0;        // t_g
        double laplacian = 0.0;     // u_g
    };

    int radius = 0;
    std::size_t n = 0;
    std::size_t generating_set_size = 0;
    bool involution_free = false;
    std::shared_ptr<const PairingTable> table;
    std::vector<Rational> target_exact;     // per universe element
    std::vector<Rational> laplacian_exact;  // per universe element
    std::vector<Orbit> orbits;

    std::size_t constraint_count() const { return target_exact.size(); }
};

/// Builds the problem over Ball(d). Throws InputError if d < 1 or if the
/// support of Delta^2 is not contained in the pairing universe.
SdpProblem assemble(const GroupBackend& backend, const LaplacianBundle& bundle, const Ball& ball);

struct SolverParams {
    double tolerance = 1e-8;
    long max_iterations = 200000;
    double over_relaxation = 1.6;
    double initial_rho = 1.0;
    /// Weight of the eps coordinate in the splitting inner product.
    double eps_weight = 0.1;
    /// Progress callback period in iterations (0 disables).
    long report_every = 0;
};

struct GramSolution {
    Eigen::MatrixXd Q;
    double eps = 0.0;
    bool converged = false;
    long iterations = 0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double min_eigenvalue = 0.0;
};

/// Operator-splitting (ADMM) solver. Q is kept in the cone
/// {Q PSD, Q 1 = 0} every iteration; the affine step projects onto the
/// constraint set with eps as an extra variable. Deterministic.
GramSolution solve_internal(const SdpProblem& problem, const SolverParams& params = {});

/// Constraint residuals sum_{F_g} Q + eps u_g - t_g, per universe element.
std::vector<double> constraint_residuals(const SdpProblem& problem, const Eigen::MatrixXd& Q,
                                         double eps);
double max_abs(const std::vector<double>& v);

/// Sparse SDPA text for the problem (one constraint per orbit).
std::string export_sdpa(const SdpProblem& problem);

/// Parsed sparse SDPA data; entries are (matrix, block, i, j, value) with
/// 1-based indices and i <= j.
struct SdpaData {
    std::size_t constraints = 0;
    std::vector<long> block_sizes;
    std::vector<double> rhs;
    struct Entry {
        std::size_t matrix = 0;
        std::size_t block = 0;
        std::size_t i = 0;
        std::size_t j = 0;
        double value = 0.0;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;
};
SdpaData parse_sdpa(const std::string& text);

/// Reads a primal solution: either a CSDP-style solution file (first line
/// dual vector, then `matno block i j value` lines; matno 2 is the primal
/// matrix) or bare `block i j value` lines. Q is symmetrized and the
/// constraints are validated to 1e-6; throws InputError otherwise.
GramSolution import_solution(const SdpProblem& problem, const std::string& text);

}  // namespace kazhdan
