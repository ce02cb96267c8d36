#include "unirat/omega_estimate.hpp"

#include <cmath>
#include <numbers>

#include "unirat/types.hpp"

namespace unirat {

namespace {

template <std::size_t N>
double horner(const std::array<double, N>& coeffs, double t) {
    double value = 0.0;
    for (std::size_t j = N; j-- > 0;) value = value * t + coeffs[j];
    return value;
}

}  // namespace

double omega_experimental(int n, double eps) {
    if (n < 1) throw DomainError("omega_experimental requires n >= 1");
    if (!(eps > 0.0) || !(eps <= 2.0))
        throw DomainError("omega_experimental requires eps in (0, 2]");
    const double t = std::log(eps);
    double pa, pb;
    if (eps < 1e-14) {
        pa = horner(OmegaEstimateTables::pa_extrap, t);
        pb = horner(OmegaEstimateTables::pb_extrap, t);
    } else {
        pa = horner(OmegaEstimateTables::pa_coeffs, t);
        pb = horner(OmegaEstimateTables::pb_coeffs, t);
    }
    return (n + 1) * std::numbers::pi * std::exp(-pa * std::pow(n, pb));
}

double omega_asymptotic(int n, double eps) {
    if (n < 0) throw DomainError("omega_asymptotic requires n >= 0");
    if (!(eps > 0.0)) throw DomainError("omega_asymptotic requires eps > 0");
    if (n == 0) return eps;
    double s = std::log(eps * (2 * n + 1) / 2.0);
    for (int j = 1; j <= n; ++j) s += 2.0 * std::log(static_cast<double>(n + j));
    return 2.0 * std::exp(s / (2 * n + 1));
}

double omega_auto(int n, double eps) {
    const double threshold = std::pow(10.0, -2.0 * (n - 4) / 3.0);
    if (eps < threshold) return omega_asymptotic(n, eps);
    return omega_experimental(n, eps);
}

double error_estimate_asymptotic(int n, double omega) {
    if (n < 0) throw DomainError("error_estimate_asymptotic requires n >= 0");
    if (!(omega > 0.0))
        throw DomainError("error_estimate_asymptotic requires omega > 0");
    if (n == 0) return omega;
    // Same factored accumulation as omega_asymptotic so that the two are
    // inverses to near machine precision even at large n.
    double s = (2 * n + 1) * std::log(0.5 * omega);
    for (int j = 1; j <= n; ++j) s -= 2.0 * std::log(static_cast<double>(n + j));
    return 2.0 * std::exp(s) / (2 * n + 1);
}

}  // namespace unirat
