#include "unirat/driver.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "unirat/equi_metrics.hpp"
#include "unirat/interpolation.hpp"

namespace unirat {

std::string to_string(DriverStrategy strategy) {
    switch (strategy) {
        case DriverStrategy::Combined: return "combined";
        case DriverStrategy::BrasilOnly: return "brasil";
        case DriverStrategy::MaehlyOnly: return "maehly";
    }
    return "?";
}

std::string to_string(StepKind kind) {
    switch (kind) {
        case StepKind::None: return "none";
        case StepKind::Brasil: return "brasil";
        case StepKind::MaehlyBilinear: return "maehly-bilinear";
        case StepKind::MaehlyLogRatio: return "maehly-log";
    }
    return "?";
}

namespace {

void validate(const BestApproxConfig& config) {
    if (config.n < 1) throw DomainError("degree must be at least 1");
    if (!(config.omega > 0.0) ||
        !(config.omega < (config.n + 1) * std::numbers::pi))
        throw DomainError("omega must lie in (0, (n+1) pi)");
    if (!(config.tol_delta > 0.0) || !(config.tol_delta < 1.0))
        throw DomainError("tol_delta must lie in (0, 1)");
    if (config.max_iter < 1) throw DomainError("max_iter must be at least 1");
    if (config.samples_per_interval < 3)
        throw DomainError("samples_per_interval must be at least 3");
}

// Maehly correction, the linear system for small n and the closed-form
// product expression for larger n where a dense solve starts to pay.
NodeSet maehly_step(const NodeSet& nodes, const EquioscillationReport& report,
                    MaehlyVariant variant) {
    if (nodes.degree() <= 8) return maehly_system_step(nodes, report, variant);
    return maehly_direct_step(nodes, report, variant);
}

}  // namespace

NodeSet initial_nodes(int n, double omega) {
    if (n < 1) throw DomainError("degree must be at least 1");
    if (!(omega > 0.0) || !(omega < (n + 1) * std::numbers::pi))
        throw DomainError("omega must lie in (0, (n+1) pi)");
    const double xi = omega / ((n + 1) * std::numbers::pi);
    const int count = 2 * n + 1;
    std::vector<double> x(static_cast<std::size_t>(count));
    for (int j = 1; j <= count; ++j) {
        const double theta =
            std::sin(std::numbers::pi * (j - (n + 1)) / (2 * n + 1));
        const double equi = -1.0 + static_cast<double>(j) / (n + 1);
        x[static_cast<std::size_t>(j - 1)] = (1.0 - xi) * theta + xi * equi;
    }
    // Fold to an exact mirror; the blend above is antisymmetric only up to
    // rounding of the equispaced part.
    std::vector<double> sym(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        sym[j] = 0.5 * (x[j] - x[x.size() - 1 - j]);
    return NodeSet::of(std::move(sym));
}

BestApproxResult compute_best(const BestApproxConfig& config,
                              const std::optional<NodeSet>& seed_nodes) {
    validate(config);
    if (seed_nodes && seed_nodes->degree() != config.n)
        throw DomainError("seed nodes do not match the configured degree");

    NodeSet nodes =
        seed_nodes ? *seed_nodes : initial_nodes(config.n, config.omega);
    ConvergenceTrace trace;
    trace.iterations.reserve(static_cast<std::size_t>(config.max_iter));

    struct Snapshot {
        BarycentricRational r;
        EquioscillationReport report;
        NodeSet nodes;
    };
    std::optional<Snapshot> best;
    double best_delta = 0.0;

    for (int it = 0; it < config.max_iter; ++it) {
        const auto started = std::chrono::steady_clock::now();
        BarycentricRational r;
        try {
            r = build_interpolant(config.omega, nodes);
        } catch (const SmallestSingularValueNotIsolated& failure) {
            throw InterpolantConstructionFailed(it, failure.what());
        }
        const EquioscillationReport report = local_error_maxima(
            r, config.omega, nodes, config.samples_per_interval);

        if (!best || (report.alternating && report.delta < best_delta)) {
            best = Snapshot{r, report, nodes};
            best_delta = report.delta;
        }

        IterationRecord record;
        record.uniform_error = report.uniform_error;
        record.delta = report.delta;
        record.alternating = report.alternating;

        const bool done = report.alternating && !report.below_precision &&
                          report.uniform_error < 2.0 &&
                          report.delta < config.tol_delta;
        if (done) {
            record.strategy_used = StepKind::None;
            record.wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              started)
                    .count();
            trace.iterations.push_back(record);
            const int used = static_cast<int>(trace.iterations.size());
            return {std::move(r), report, std::move(nodes), std::move(trace),
                    true, used};
        }

        StepKind kind;
        switch (config.strategy) {
            case DriverStrategy::BrasilOnly:
                kind = StepKind::Brasil;
                break;
            case DriverStrategy::MaehlyOnly:
                kind = report.delta >= 0.1 ? StepKind::MaehlyBilinear
                                           : StepKind::MaehlyLogRatio;
                break;
            case DriverStrategy::Combined:
            default: {
                switch (select_strategy(report, report.below_precision)) {
                    case CorrectionStrategy::Brasil:
                        kind = StepKind::Brasil;
                        break;
                    case CorrectionStrategy::MaehlyBilinear:
                        kind = StepKind::MaehlyBilinear;
                        break;
                    default:
                        kind = StepKind::MaehlyLogRatio;
                        break;
                }
                break;
            }
        }

        if (kind == StepKind::Brasil) {
            nodes = brasil_step(nodes, report.eps);
        } else {
            const MaehlyVariant variant = kind == StepKind::MaehlyBilinear
                                              ? MaehlyVariant::Bilinear
                                              : MaehlyVariant::LogRatio;
            if (config.strategy == DriverStrategy::Combined) {
                try {
                    nodes = maehly_step(nodes, report, variant);
                } catch (const InvalidCorrection&) {
                    kind = StepKind::Brasil;
                    nodes = brasil_step(nodes, report.eps);
                }
            } else {
                nodes = maehly_step(nodes, report, variant);
            }
        }

        record.strategy_used = kind;
        record.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          started)
                .count();
        trace.iterations.push_back(record);
    }

    return {std::move(best->r), std::move(best->report), std::move(best->nodes),
            std::move(trace), false, config.max_iter};
}

BestApproxResult restart(const BestApproxConfig& config,
                         const NodeSet& previous) {
    return compute_best(config, previous);
}

}  // namespace unirat
