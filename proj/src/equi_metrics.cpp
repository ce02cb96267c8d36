#include "unirat/equi_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "unirat/numerics.hpp"

namespace unirat {

namespace {

constexpr double kGoldenInv = 0.6180339887498949;
constexpr double kRoundoffFloor = 1e-15;

struct Bracket {
    double a, x, b, fx;
};

Bracket golden_max(const std::function<double(double)>& f, double a, double b,
                   double tol) {
    double c = b - kGoldenInv * (b - a);
    double d = a + kGoldenInv * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (d - c > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kGoldenInv * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kGoldenInv * (b - a);
            fd = f(d);
        }
    }
    if (fc > fd) return {a, c, d, fc};
    return {c, d, b, fd};
}

// Bracketed successive parabolic interpolation; keeps f(x) >= f(a), f(b).
std::pair<double, double> parabolic_refine(
    const std::function<double(double)>& f, Bracket br, int iters = 30) {
    double a = br.a, x = br.x, b = br.b, fx = br.fx;
    double fa = f(a);
    double fb = f(b);
    for (int step = 0; step < iters; ++step) {
        const double d1 = x - a;
        const double d2 = b - x;
        if (d1 <= 0.0 || d2 <= 0.0) break;
        const double num = d1 * d1 * (fx - fb) - d2 * d2 * (fx - fa);
        const double den = d1 * (fx - fb) + d2 * (fx - fa);
        if (den <= 0.0) break;
        const double xn = x + 0.5 * num / den;
        if (!(a < xn && xn < b) || xn == x) break;
        const double fn = f(xn);
        if (fn > fx) {
            if (xn < x) {
                b = x;
                fb = fx;
            } else {
                a = x;
                fa = fx;
            }
            x = xn;
            fx = fn;
        } else {
            if (xn < x) {
                a = xn;
                fa = fn;
            } else {
                b = xn;
                fb = fn;
            }
        }
        if (b - a < 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    return {x, fx};
}

// Best local maximum of f over [a, b]: scan, refine every sampled local
// maximum (merging near-duplicates), never return less than the best sample.
std::pair<double, double> interval_maximum(
    const std::function<double(double)>& f, double a, double b, int spi,
    bool& below_precision) {
    const int count = spi + 2;
    std::vector<double> xs(static_cast<std::size_t>(count));
    std::vector<double> es(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        xs[static_cast<std::size_t>(k)] =
            a + (b - a) * static_cast<double>(k) / (count - 1);
        es[static_cast<std::size_t>(k)] = f(xs[static_cast<std::size_t>(k)]);
    }
    int kb = 0;
    for (int k = 1; k < count; ++k)
        if (es[static_cast<std::size_t>(k)] > es[static_cast<std::size_t>(kb)])
            kb = k;
    double bx = xs[static_cast<std::size_t>(kb)];
    double bv = es[static_cast<std::size_t>(kb)];
    if (bv < kRoundoffFloor) {
        below_precision = true;
        return {bx, bv};
    }
    std::vector<int> cand;
    for (int k = 0; k < count; ++k) {
        const bool up = k == 0 || es[static_cast<std::size_t>(k)] >=
                                      es[static_cast<std::size_t>(k - 1)];
        const bool down = k == count - 1 || es[static_cast<std::size_t>(k)] >=
                                                es[static_cast<std::size_t>(k + 1)];
        if (up && down) cand.push_back(k);
    }
    std::stable_sort(cand.begin(), cand.end(), [&es](int lhs, int rhs) {
        return es[static_cast<std::size_t>(lhs)] > es[static_cast<std::size_t>(rhs)];
    });
    std::vector<int> kept;
    for (const int k : cand) {
        bool isolated = true;
        for (const int k2 : kept)
            if (std::abs(k - k2) <= 2) {
                isolated = false;
                break;
            }
        if (isolated) kept.push_back(k);
    }
    for (const int k : kept) {
        const double lo = xs[static_cast<std::size_t>(std::max(k - 1, 0))];
        const double hi = xs[static_cast<std::size_t>(std::min(k + 1, count - 1))];
        if (hi <= lo) continue;
        const Bracket br = golden_max(f, lo, hi, 1e-3 * (b - a));
        const auto [x0, v0] = parabolic_refine(f, br);
        if (v0 > bv) {
            bx = x0;
            bv = v0;
        }
    }
    return {bx, bv};
}

// Alternation check with exact phase zeros acting as wildcards; fills in
// the offset iota of sign(phase_j) = (-1)^(j + iota), 1-based j.
void classify_signs(EquioscillationReport& report) {
    const auto& ph = report.phase;
    int first = -1;
    int want = 0;
    bool ok = true;
    for (std::size_t j = 0; j < ph.size(); ++j) {
        const int sgn = (ph[j] > 0.0) - (ph[j] < 0.0);
        if (sgn == 0) continue;
        if (first < 0) {
            first = static_cast<int>(j);
            want = sgn;
            continue;
        }
        const int expect =
            (static_cast<int>(j) - first) % 2 == 0 ? want : -want;
        if (sgn != expect) {
            ok = false;
            break;
        }
    }
    report.alternating = ok;
    if (first < 0) {
        report.parity = 0;
        return;
    }
    // (-1)^(j + iota) = want at 1-based index first+1.
    const int target = want > 0 ? 0 : 1;
    report.parity = ((target - (first + 1)) % 2 + 2) % 2;
}

}  // namespace

double phase_error(const BarycentricRational& r, double omega, double x) {
    return std::arg(eval_ix(r, x) * std::polar(1.0, -omega * x));
}

double error_in_uniformity(const std::vector<double>& eps) {
    if (eps.empty()) throw DomainError("empty error array");
    const auto [mn, mx] = std::minmax_element(eps.begin(), eps.end());
    if (*mn < 0.0) throw DomainError("error magnitudes must be nonnegative");
    if (*mx == 0.0) return 0.0;
    return 1.0 - *mn / *mx;
}

std::pair<double, double> sandwich(const EquioscillationReport& report) {
    if (!report.alternating)
        throw PreconditionNotMet(
            "sandwich bounds require an alternating report");
    return {(1.0 - report.delta) * report.uniform_error, report.uniform_error};
}

EquioscillationReport local_error_maxima(const BarycentricRational& r,
                                         double omega, const NodeSet& nodes,
                                         int samples_per_interval) {
    if (samples_per_interval < 3)
        throw DomainError("samples_per_interval must be at least 3");
    const auto f = [&r, omega](double x) {
        return std::abs(eval_ix(r, x) - std::polar(1.0, omega * x));
    };
    const int n = nodes.degree();
    EquioscillationReport report;
    const std::size_t total = 2 * static_cast<std::size_t>(n) + 2;
    report.eta.resize(total);
    report.eps.resize(total);
    report.phase.resize(total);

    if (nodes.symmetric()) {
        // Right-half subintervals [0, x_{n+2}], ..., [x_{2n+1}, 1].
        const std::vector<double>& half = nodes.half();
        std::vector<double> bounds(half);
        bounds.push_back(1.0);
        for (std::size_t j = 0; j + 1 < bounds.size(); ++j) {
            const auto [bx, bv] =
                interval_maximum(f, bounds[j], bounds[j + 1],
                                 samples_per_interval, report.below_precision);
            const std::size_t right = static_cast<std::size_t>(n) + 1 + j;
            const std::size_t left = total - 1 - right;
            report.eta[right] = bx;
            report.eps[right] = bv;
            report.phase[right] = phase_error(r, omega, bx);
            report.eta[left] = -bx;
            report.eps[left] = bv;
            report.phase[left] = -report.phase[right];
        }
    } else {
        std::vector<double> bounds;
        bounds.reserve(total + 1);
        bounds.push_back(-1.0);
        const std::vector<double> x = nodes.values();
        bounds.insert(bounds.end(), x.begin(), x.end());
        bounds.push_back(1.0);
        for (std::size_t j = 0; j + 1 < bounds.size(); ++j) {
            const auto [bx, bv] =
                interval_maximum(f, bounds[j], bounds[j + 1],
                                 samples_per_interval, report.below_precision);
            report.eta[j] = bx;
            report.eps[j] = bv;
            report.phase[j] = phase_error(r, omega, bx);
        }
    }

    report.uniform_error =
        *std::max_element(report.eps.begin(), report.eps.end());
    report.delta = error_in_uniformity(report.eps);
    classify_signs(report);
    return report;
}

}  // namespace unirat
