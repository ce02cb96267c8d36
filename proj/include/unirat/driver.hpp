#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unirat/node_correction.hpp"
#include "unirat/types.hpp"

namespace unirat {

/// Node correction policy of the driver.
enum class DriverStrategy { Combined, BrasilOnly, MaehlyOnly };

/// What a driver iteration actually applied.
enum class StepKind { None, Brasil, MaehlyBilinear, MaehlyLogRatio };

[[nodiscard]] std::string to_string(DriverStrategy strategy);
[[nodiscard]] std::string to_string(StepKind kind);

struct BestApproxConfig {
    int n = 1;
    double omega = 1.0;
    double tol_delta = 1e-6;
    int max_iter = 100;
    DriverStrategy strategy = DriverStrategy::Combined;
    int samples_per_interval = 16;
};

struct IterationRecord {
    double uniform_error = 0.0;
    double delta = 0.0;
    StepKind strategy_used = StepKind::None;
    bool alternating = false;
    /// Seconds spent on this iteration.
    double wall_time = 0.0;
};

struct ConvergenceTrace {
    std::vector<IterationRecord> iterations;
};

struct BestApproxResult {
    BarycentricRational r;
    EquioscillationReport report;
    NodeSet nodes;
    ConvergenceTrace trace;
    bool converged = false;
    int iterations_used = 0;
};

/// Initial interpolation nodes: a frequency-dependent blend of Chebyshev
/// and equispaced points, x_j = (1-xi) theta_j + xi (-1 + j/(n+1)) with
/// xi = omega / ((n+1) pi). Symmetric by construction.
[[nodiscard]] NodeSet initial_nodes(int n, double omega);

/// Iterates interpolation and node correction until the error in
/// uniformity drops below tol_delta with an alternating phase pattern.
/// If the tolerance is not reached, the iterate with the smallest
/// alternating delta seen so far is returned with converged = false;
/// this is a status, not an error.
[[nodiscard]] BestApproxResult compute_best(
    const BestApproxConfig& config,
    const std::optional<NodeSet>& seed_nodes = std::nullopt);

/// Re-enters the iteration from a previous node set, e.g. to continue at
/// a tighter tolerance or a slightly different frequency.
[[nodiscard]] BestApproxResult restart(const BestApproxConfig& config,
                                       const NodeSet& previous);

}  // namespace unirat
