#pragma once

#include <utility>
#include <vector>

#include "unirat/types.hpp"

namespace unirat {

/// Locates the 2n+2 local maxima of |r(ix) - e^{i omega x}|, one per
/// subinterval of [-1, 1] cut by the interpolation nodes, and classifies
/// the phase sign pattern. For a symmetric node set only the right half is
/// searched and the left half is mirrored, which the evenness of the error
/// curve makes exact.
///
/// samples_per_interval controls the initial bracketing scan; each sampled
/// local maximum is refined by golden section plus parabolic steps.
[[nodiscard]] EquioscillationReport local_error_maxima(
    const BarycentricRational& r, double omega, const NodeSet& nodes,
    int samples_per_interval = 16);

/// Principal argument of r(ix) e^{-i omega x}.
[[nodiscard]] double phase_error(const BarycentricRational& r, double omega,
                                 double x);

/// Error in uniformity 1 - min(eps)/max(eps); zero for an all-zero array.
[[nodiscard]] double error_in_uniformity(const std::vector<double>& eps);

/// Sandwich bounds (lower, upper) on the best approximation error derived
/// from an alternating report: (1 - delta) * ||r - exp|| and ||r - exp||.
/// Throws PreconditionNotMet unless the report alternates.
[[nodiscard]] std::pair<double, double> sandwich(
    const EquioscillationReport& report);

}  // namespace unirat
