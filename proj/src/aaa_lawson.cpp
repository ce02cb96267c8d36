#include "unirat/aaa_lawson.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "unirat/equi_metrics.hpp"
#include "unirat/numerics.hpp"

namespace unirat {

TestNodeSet TestNodeSet::equispaced(int count) {
    if (count < 2) throw DomainError("need at least two test nodes");
    TestNodeSet out;
    out.kind = Kind::Equispaced;
    out.nodes.resize(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out.nodes[static_cast<std::size_t>(k)] =
            -1.0 + 2.0 * static_cast<double>(k) / (count - 1);
    return out;
}

TestNodeSet TestNodeSet::chebyshev(int count) {
    if (count < 2) throw DomainError("need at least two test nodes");
    TestNodeSet out;
    out.kind = Kind::Chebyshev;
    out.nodes.resize(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        out.nodes[static_cast<std::size_t>(k)] =
            std::cos(std::numbers::pi * static_cast<double>(count - 1 - k) /
                     (count - 1));
    return out;
}

namespace {

void require_coverage(const TestNodeSet& tests, int n) {
    if (static_cast<int>(tests.nodes.size()) < 2 * (2 * n + 2))
        throw DomainError("a degree-n run needs at least 2(2n+2) test nodes");
}

std::vector<cplx> target_values(double omega, const std::vector<double>& x) {
    std::vector<cplx> f(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        f[j] = std::polar(1.0, omega * x[j]);
    return f;
}

// Projects a weight vector onto the structure w_k = e^{-i omega s_k / 2} rho_k
// with real rho and a shared phase, which forces |r(ix)| = 1.
void project_unitary(double omega, const std::vector<double>& s,
                     Eigen::VectorXcd& wts) {
    const Eigen::Index m = wts.size();
    cplx sum_sq{0.0, 0.0};
    Eigen::VectorXcd u(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        u(k) = wts(k) * std::polar(1.0, 0.5 * omega *
                                            s[static_cast<std::size_t>(k)]);
        sum_sq += u(k) * u(k);
    }
    const double psi = 0.5 * std::arg(sum_sq);
    double norm = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) {
        const double rho = (u(k) * std::polar(1.0, -psi)).real();
        wts(k) = rho * std::polar(1.0, -0.5 * omega *
                                           s[static_cast<std::size_t>(k)]);
        norm += rho * rho;
    }
    if (norm == 0.0)
        throw Breakdown("unitary projection annihilated the weight vector");
}

void flag_near_degenerate(BarycentricRational& r) {
    double wmax = 0.0;
    double wmin = std::numeric_limits<double>::infinity();
    for (const cplx w : r.weights) {
        wmax = std::max(wmax, std::abs(w));
        wmin = std::min(wmin, std::abs(w));
    }
    r.near_degenerate = wmin < 1e-14 * wmax;
}

}  // namespace

BarycentricRational aaa(double omega, const TestNodeSet& tests, int n) {
    if (n < 0) throw DomainError("degree must be nonnegative");
    if (!(omega > 0.0)) throw DomainError("omega must be positive");
    require_coverage(tests, n);
    const std::vector<double>& x = tests.nodes;
    const std::vector<cplx> f = target_values(omega, x);
    const std::size_t total = x.size();

    cplx mean{0.0, 0.0};
    for (const cplx v : f) mean += v;
    mean /= static_cast<double>(total);
    std::vector<cplx> current(total, mean);

    std::vector<std::size_t> support;
    std::vector<bool> in_support(total, false);
    Eigen::VectorXcd wts;

    for (int step = 0; step <= n; ++step) {
        std::size_t pick = total;
        double best = -1.0;
        for (std::size_t j = 0; j < total; ++j) {
            if (in_support[j]) continue;
            const double res = std::abs(f[j] - current[j]);
            if (res > best) {
                best = res;
                pick = j;
            }
        }
        if (pick == total) throw Breakdown("ran out of test nodes");
        support.push_back(pick);
        in_support[pick] = true;

        const std::size_t m = support.size();
        const std::size_t rest = total - m;
        Eigen::MatrixXcd loewner(static_cast<Eigen::Index>(rest),
                                 static_cast<Eigen::Index>(m));
        Eigen::Index row = 0;
        for (std::size_t j = 0; j < total; ++j) {
            if (in_support[j]) continue;
            for (std::size_t k = 0; k < m; ++k)
                loewner(row, static_cast<Eigen::Index>(k)) =
                    (f[j] - f[support[k]]) / (x[j] - x[support[k]]);
            ++row;
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(loewner, Eigen::ComputeThinV);
        wts = svd.matrixV().col(static_cast<Eigen::Index>(m) - 1);

        std::vector<double> s(m);
        for (std::size_t k = 0; k < m; ++k) s[k] = x[support[k]];
        project_unitary(omega, s, wts);

        for (std::size_t j = 0; j < total; ++j) {
            if (in_support[j]) {
                current[j] = f[j];
                continue;
            }
            cplx num{0.0, 0.0};
            cplx den{0.0, 0.0};
            for (std::size_t k = 0; k < m; ++k) {
                const cplx c =
                    wts(static_cast<Eigen::Index>(k)) / (x[j] - x[support[k]]);
                num += c * f[support[k]];
                den += c;
            }
            current[j] = num / den;
        }
    }

    std::vector<std::size_t> order(support.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t lhs, std::size_t rhs) {
                  return x[support[lhs]] < x[support[rhs]];
              });
    BarycentricRational r;
    r.degree_n = n;
    r.support_nodes.resize(support.size());
    r.weights.resize(support.size());
    r.support_values.resize(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) {
        const std::size_t j = support[order[k]];
        r.support_nodes[k] = x[j];
        r.weights[k] = wts(static_cast<Eigen::Index>(order[k]));
        r.support_values[k] = f[j];
    }
    flag_near_degenerate(r);
    return r;
}

std::pair<BarycentricRational, LawsonState> lawson(const BarycentricRational& r,
                                                   double omega,
                                                   const TestNodeSet& tests,
                                                   int iterations) {
    if (iterations < 0) throw DomainError("iteration count must be >= 0");
    require_coverage(tests, r.degree_n);
    const std::vector<double>& x = tests.nodes;
    const std::vector<cplx> f = target_values(omega, x);
    const std::size_t total = x.size();
    const std::size_t m = r.support_nodes.size();

    // Support nodes are matched to their nearest test node and treated as
    // limit rows of the least squares system.
    std::vector<std::size_t> sup_pos(m);
    std::vector<bool> is_sup(total, false);
    for (std::size_t k = 0; k < m; ++k) {
        std::size_t nearest = 0;
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < total; ++j) {
            const double d = std::abs(x[j] - r.support_nodes[k]);
            if (d < gap) {
                gap = d;
                nearest = j;
            }
        }
        if (is_sup[nearest])
            throw DomainError("test nodes do not resolve the support nodes");
        sup_pos[k] = nearest;
        is_sup[nearest] = true;
    }

    Eigen::VectorXcd alpha(static_cast<Eigen::Index>(m));
    Eigen::VectorXcd beta(static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k) {
        alpha(static_cast<Eigen::Index>(k)) = r.weights[k];
        beta(static_cast<Eigen::Index>(k)) = r.weights[k] * r.support_values[k];
    }

    const auto residuals = [&](std::vector<double>& out) {
        for (std::size_t j = 0; j < total; ++j) {
            cplx value;
            if (is_sup[j]) {
                std::size_t k = 0;
                while (sup_pos[k] != j) ++k;
                value = beta(static_cast<Eigen::Index>(k)) /
                        alpha(static_cast<Eigen::Index>(k));
            } else {
                cplx num{0.0, 0.0};
                cplx den{0.0, 0.0};
                for (std::size_t k = 0; k < m; ++k) {
                    const cplx c = 1.0 / (x[j] - r.support_nodes[k]);
                    num += c * beta(static_cast<Eigen::Index>(k));
                    den += c * alpha(static_cast<Eigen::Index>(k));
                }
                value = num / den;
            }
            out[j] = std::abs(f[j] - value);
        }
    };

    LawsonState state;
    state.iteration = iterations;
    state.weights.assign(total, 1.0 / static_cast<double>(total));
    std::vector<double> res(total);

    // The iteration is not strictly monotone; the returned approximant is
    // the best iterate seen, the history still records every step.
    Eigen::VectorXcd alpha_best = alpha;
    Eigen::VectorXcd beta_best = beta;
    double err_best = std::numeric_limits<double>::infinity();
    const auto record = [&] {
        residuals(res);
        const double worst = *std::max_element(res.begin(), res.end());
        state.error_history.push_back(worst);
        if (worst < err_best) {
            err_best = worst;
            alpha_best = alpha;
            beta_best = beta;
        }
    };

    for (int it = 0; it < iterations; ++it) {
        record();
        double sum = 0.0;
        for (std::size_t j = 0; j < total; ++j) {
            state.weights[j] *= res[j];
            sum += state.weights[j];
        }
        if (!(sum > 0.0)) break;
        for (double& lam : state.weights) lam /= sum;

        Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(
            static_cast<Eigen::Index>(total), 2 * static_cast<Eigen::Index>(m));
        for (std::size_t j = 0; j < total; ++j) {
            const double sq = std::sqrt(state.weights[j]);
            if (is_sup[j]) {
                std::size_t k = 0;
                while (sup_pos[k] != j) ++k;
                a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                    f[j] * sq;
                a(static_cast<Eigen::Index>(j),
                  static_cast<Eigen::Index>(m + k)) = -sq;
                continue;
            }
            for (std::size_t k = 0; k < m; ++k) {
                const cplx c = 1.0 / (x[j] - r.support_nodes[k]);
                a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                    f[j] * c * sq;
                a(static_cast<Eigen::Index>(j),
                  static_cast<Eigen::Index>(m + k)) = -c * sq;
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinV);
        const Eigen::VectorXcd v =
            svd.matrixV().col(2 * static_cast<Eigen::Index>(m) - 1);
        alpha = v.head(static_cast<Eigen::Index>(m));
        beta = v.tail(static_cast<Eigen::Index>(m));

        cplx pairing{0.0, 0.0};
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(m); ++k)
            pairing += alpha(k) * beta(k);
        const cplx c = std::polar(1.0, std::arg(pairing));
        for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(m); ++k) {
            beta(k) = 0.5 * (beta(k) + c * std::conj(alpha(k)));
            alpha(k) = c * std::conj(beta(k));
        }
    }

    record();

    BarycentricRational out;
    out.degree_n = r.degree_n;
    out.support_nodes = r.support_nodes;
    out.weights.resize(m);
    out.support_values.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        const cplx ak = alpha_best(static_cast<Eigen::Index>(k));
        if (ak == cplx{0.0, 0.0})
            throw Breakdown("Lawson denominator coefficient vanished");
        out.weights[k] = ak;
        out.support_values[k] = beta_best(static_cast<Eigen::Index>(k)) / ak;
    }
    flag_near_degenerate(out);
    return {std::move(out), std::move(state)};
}

TestNodeSet adaptive_test_nodes(double omega, int n, int rounds) {
    if (rounds < 0) throw DomainError("rounds must be >= 0");
    const int backbone = 2 * n + 3;
    TestNodeSet current = TestNodeSet::equispaced(10 * (2 * n + 2));
    current.kind = TestNodeSet::Kind::Adaptive;

    for (int round = 0; round < rounds; ++round) {
        const BarycentricRational start = aaa(omega, current, n);
        const auto [refined, state] = lawson(start, omega, current, 50);
        const std::vector<double>& x = current.nodes;
        std::vector<double> res(x.size());
        for (std::size_t j = 0; j < x.size(); ++j)
            res[j] = std::abs(eval_ix(refined, x[j]) -
                              std::polar(1.0, omega * x[j]));

        std::vector<double> centers;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const bool up = j == 0 || res[j] >= res[j - 1];
            const bool down = j + 1 == x.size() || res[j] >= res[j + 1];
            if (up && down) centers.push_back(x[j]);
        }
        if (centers.empty()) break;

        std::vector<double> next = {-1.0, 1.0};
        for (int k = 0; k < backbone; ++k)
            next.push_back(-1.0 + 2.0 * static_cast<double>(k) / (backbone - 1));
        for (std::size_t i = 0; i < centers.size(); ++i) {
            double gap = std::numeric_limits<double>::infinity();
            if (i > 0) gap = std::min(gap, centers[i] - centers[i - 1]);
            if (i + 1 < centers.size())
                gap = std::min(gap, centers[i + 1] - centers[i]);
            if (!std::isfinite(gap)) gap = 0.2;
            const double h = 0.5 * gap;
            next.push_back(centers[i]);
            double step = h;
            for (int lvl = 0; lvl < 5; ++lvl, step *= 0.5) {
                next.push_back(std::clamp(centers[i] - step, -1.0, 1.0));
                next.push_back(std::clamp(centers[i] + step, -1.0, 1.0));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current.nodes = std::move(next);
    }
    return current;
}

std::optional<NodeSet> detect_interpolation_nodes(const BarycentricRational& r,
                                                  double omega) {
    const int n = r.degree_n;
    const int count = 50 * (2 * n + 2) + 1;
    std::vector<double> nodes;

    const auto phase = [&](double x) { return phase_error(r, omega, x); };
    double prev_x = -1.0;
    double prev_phase = phase(prev_x);
    if (prev_phase == 0.0) nodes.push_back(prev_x);
    for (int j = 1; j < count; ++j) {
        const double cur_x = -1.0 + 2.0 * static_cast<double>(j) / (count - 1);
        const double cur_phase = phase(cur_x);
        if (cur_phase == 0.0) {
            nodes.push_back(cur_x);
        } else if (prev_phase != 0.0 &&
                   std::signbit(cur_phase) != std::signbit(prev_phase)) {
            double lo = prev_x, hi = cur_x, flo = prev_phase;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double fm = phase(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (std::signbit(fm) == std::signbit(flo)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            nodes.push_back(0.5 * (lo + hi));
        }
        prev_x = cur_x;
        prev_phase = cur_phase;
    }

    if (static_cast<int>(nodes.size()) != 2 * n + 1) return std::nullopt;
    try {
        return NodeSet::of(std::move(nodes));
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

}  // namespace unirat
