#include "unirat/node_correction.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace unirat {

namespace {

bool all_equal(const std::vector<double>& eps) {
    return std::all_of(eps.begin(), eps.end(),
                       [&eps](double e) { return e == eps.front(); });
}

bool mirror_even(const std::vector<double>& values) {
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] != values[values.size() - 1 - j]) return false;
    return true;
}

bool mirror_odd(const std::vector<double>& values) {
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] != -values[values.size() - 1 - j]) return false;
    return true;
}

// Validates a corrected node array and rebuilds the NodeSet, restoring the
// exact mirror property when the instance itself is mirror-symmetric (a
// symmetric node set alone is not enough: the error data decides).
NodeSet finalize(bool symmetric_instance, std::vector<double> candidate) {
    for (const double x : candidate)
        if (!std::isfinite(x)) throw InvalidCorrection("non-finite node");
    for (std::size_t j = 1; j < candidate.size(); ++j)
        if (!(candidate[j - 1] < candidate[j]))
            throw InvalidCorrection("corrected nodes are not increasing");
    if (!(candidate.front() > -1.0) || !(candidate.back() < 1.0))
        throw InvalidCorrection("corrected nodes left (-1, 1)");
    if (symmetric_instance) {
        std::vector<double> sym(candidate.size());
        for (std::size_t j = 0; j < candidate.size(); ++j)
            sym[j] = 0.5 * (candidate[j] - candidate[candidate.size() - 1 - j]);
        candidate = std::move(sym);
        for (std::size_t j = 1; j < candidate.size(); ++j)
            if (!(candidate[j - 1] < candidate[j]))
                throw InvalidCorrection("symmetrized nodes are not increasing");
    }
    return NodeSet::of(std::move(candidate));
}

void check_report_shape(const NodeSet& nodes,
                        const EquioscillationReport& report) {
    if (report.eta.size() != nodes.size() + 1 ||
        report.eps.size() != nodes.size() + 1)
        throw DomainError("report does not match the node set");
    for (const double e : report.eps)
        if (!(e > 0.0))
            throw DomainError("Maehly corrections require positive local errors");
}

std::vector<double> rhs_direct(const std::vector<double>& eps,
                               MaehlyVariant variant) {
    const std::size_t count = eps.size();
    double log_mean = 0.0;
    for (const double e : eps) log_mean += std::log(e);
    log_mean /= static_cast<double>(count);
    std::vector<double> b(count);
    if (variant == MaehlyVariant::LogRatio) {
        for (std::size_t l = 0; l < count; ++l)
            b[l] = std::log(eps[l]) - log_mean;
    } else {
        const double gm = std::exp(log_mean);
        for (std::size_t l = 0; l < count; ++l)
            b[l] = 2.0 * (eps[l] - gm) / (eps[l] + gm);
    }
    return b;
}

}  // namespace

NodeSet brasil_step(const NodeSet& nodes, const std::vector<double>& eps,
                    const BrasilParams& params) {
    const int n = nodes.degree();
    if (n < 1) throw DomainError("brasil_step requires degree >= 1");
    if (eps.size() != nodes.size() + 1)
        throw DomainError("eps must hold one entry per subinterval");
    double sum = 0.0;
    for (const double e : eps) {
        if (!(e >= 0.0)) throw DomainError("eps entries must be nonnegative");
        sum += e;
    }
    if (sum == 0.0) throw DomainError("eps must not be all zero");
    if (all_equal(eps)) return nodes;

    const double mean = sum / static_cast<double>(eps.size());
    double gbar = 0.0;
    for (const double e : eps) gbar = std::max(gbar, std::abs(e - mean));
    if (gbar == 0.0) return nodes;
    const double sigma =
        std::min(params.sigma_max, params.kappa * gbar / (n * mean));

    const std::vector<double> x = nodes.values();
    std::vector<double> bounds;
    bounds.reserve(x.size() + 2);
    bounds.push_back(-1.0);
    bounds.insert(bounds.end(), x.begin(), x.end());
    bounds.push_back(1.0);

    std::vector<double> cumulative(eps.size());
    double total = 0.0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        const double gamma = (eps[j] - mean) / gbar;
        total += std::pow(1.0 - sigma, gamma) * (bounds[j + 1] - bounds[j]);
        cumulative[j] = total;
    }
    std::vector<double> candidate(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        candidate[j] = -1.0 + 2.0 * cumulative[j] / total;
    return finalize(nodes.symmetric() && mirror_even(eps), std::move(candidate));
}

NodeSet maehly_system_step(const NodeSet& nodes,
                           const EquioscillationReport& report,
                           MaehlyVariant variant) {
    check_report_shape(nodes, report);
    if (all_equal(report.eps)) return nodes;
    const std::vector<double> x = nodes.values();
    const auto& eta = report.eta;
    const auto& eps = report.eps;
    const Eigen::Index m = static_cast<Eigen::Index>(x.size());

    Eigen::MatrixXd sys(m, m);
    Eigen::VectorXd b(m);
    for (Eigen::Index j = 0; j < m; ++j) {
        const double ej = eta[static_cast<std::size_t>(j) + 1];
        for (Eigen::Index k = 0; k < m; ++k) {
            const double xk = x[static_cast<std::size_t>(k)];
            sys(j, k) = (eta[0] - ej) / ((ej - xk) * (eta[0] - xk));
        }
        b(j) = variant == MaehlyVariant::LogRatio
                   ? std::log(eps[static_cast<std::size_t>(j) + 1] / eps[0])
                   : 2.0 * (eps[static_cast<std::size_t>(j) + 1] - eps[0]) /
                         (eps[static_cast<std::size_t>(j) + 1] + eps[0]);
    }
    const Eigen::VectorXd dx = sys.partialPivLu().solve(b);
    std::vector<double> candidate(x);
    for (Eigen::Index j = 0; j < m; ++j)
        candidate[static_cast<std::size_t>(j)] += dx(j);
    return finalize(nodes.symmetric() && mirror_even(report.eps) &&
                        mirror_odd(report.eta),
                    std::move(candidate));
}

NodeSet maehly_direct_step(const NodeSet& nodes,
                           const EquioscillationReport& report,
                           MaehlyVariant variant) {
    check_report_shape(nodes, report);
    if (all_equal(report.eps)) return nodes;
    const std::vector<double> x = nodes.values();
    const auto& eta = report.eta;
    const std::vector<double> b = rhs_direct(report.eps, variant);
    const std::size_t m = x.size();
    const std::size_t cnt = eta.size();

    // Products of many node gaps are evaluated as signed log magnitudes;
    // only balanced exponent differences are ever exponentiated.
    std::vector<double> log_inner(cnt);
    std::vector<double> sgn_inner(cnt);
    for (std::size_t l = 0; l < cnt; ++l) {
        double lg = 0.0;
        double sg = 1.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double d = eta[l] - x[k];
            lg += std::log(std::abs(d));
            if (d < 0.0) sg = -sg;
        }
        for (std::size_t l2 = 0; l2 < cnt; ++l2) {
            if (l2 == l) continue;
            const double d = eta[l] - eta[l2];
            lg -= std::log(std::abs(d));
            if (d < 0.0) sg = -sg;
        }
        log_inner[l] = lg;
        sgn_inner[l] = sg;
    }

    std::vector<double> candidate(x);
    for (std::size_t j = 0; j < m; ++j) {
        double lg = 0.0;
        double sg = 1.0;
        for (std::size_t l = 0; l < cnt; ++l) {
            const double d = x[j] - eta[l];
            lg += std::log(std::abs(d));
            if (d < 0.0) sg = -sg;
        }
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            const double d = x[j] - x[k];
            lg -= std::log(std::abs(d));
            if (d < 0.0) sg = -sg;
        }
        double shift = 0.0;
        for (std::size_t l = 0; l < cnt; ++l)
            shift += b[l] * sgn_inner[l] * std::exp(lg + log_inner[l]) /
                     (x[j] - eta[l]);
        candidate[j] += sg * shift;
    }
    return finalize(nodes.symmetric() && mirror_even(report.eps) &&
                        mirror_odd(report.eta),
                    std::move(candidate));
}

CorrectionStrategy select_strategy(const EquioscillationReport& report,
                                   bool below_precision) {
    if (!report.alternating || report.uniform_error >= 2.0 - 1e-12 ||
        below_precision)
        return CorrectionStrategy::Brasil;
    return report.delta >= 0.1 ? CorrectionStrategy::MaehlyBilinear
                               : CorrectionStrategy::MaehlyLogRatio;
}

}  // namespace unirat
