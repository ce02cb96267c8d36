#pragma once

#include <array>

namespace unirat {

/// Fitted polynomial coefficients (in ascending powers of t = ln eps) of
/// the experimental frequency model omega = (n+1) pi exp(-p_a(t) n^p_b(t)),
/// plus the linear extrapolation used below the fitted accuracy range.
struct OmegaEstimateTables {
    static constexpr std::array<double, 11> pa_coeffs = {
        7.7325733748629055e-1,  -5.777408873924058e-1,  -6.860343132683391e-2,
        -1.4498935965331126e-2, -2.0017032381431967e-3, -1.792107115710027e-4,
        -1.0467338695044732e-5, -3.9545380249348945e-7, -9.304919862544986e-9,
        -1.2386694533170104e-10, -7.121569685837123e-13};
    static constexpr std::array<double, 12> pb_coeffs = {
        -9.296235152950844e-1,  -2.4713673601660884e-2, -8.54706119111975e-3,
        -2.0382018252632794e-3, -3.2440829161667404e-4, -3.459972041530702e-5,
        -2.4972665972026706e-6, -1.2203258361585594e-7, -3.971747584379515e-9,
        -8.237224551239086e-11, -9.84139635152686e-13,  -5.152327054589812e-15};
    static constexpr std::array<double, 2> pa_extrap = {1.2653161350741573,
                                                        -3.4960298585304206e-1};
    static constexpr std::array<double, 2> pb_extrap = {-8.76285182160704e-1,
                                                        2.8332004893961966e-4};
};

/// Frequency for which the degree-n unitary best approximant is expected
/// to reach uniform error eps, from the fitted model above. Valid for
/// n >= 1 and eps in (0, 2].
[[nodiscard]] double omega_experimental(int n, double eps);

/// Frequency from inverting the leading-order small-omega error term
/// 2 (n!)^2 (omega/2)^{2n+1} / ((2n)! (2n+1)!); exact identity eps for
/// n = 0. Valid for eps > 0.
[[nodiscard]] double omega_asymptotic(int n, double eps);

/// Picks omega_asymptotic when eps is below 10^{-2(n-4)/3} (where the
/// asymptotic regime is trusted) and omega_experimental otherwise.
[[nodiscard]] double omega_auto(int n, double eps);

/// Leading-order error of the best approximant at frequency omega,
/// evaluated in the log domain; inverse of omega_asymptotic.
[[nodiscard]] double error_estimate_asymptotic(int n, double omega);

}  // namespace unirat
