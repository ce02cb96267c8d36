#pragma once

#include <vector>

#include "unirat/types.hpp"

namespace unirat {

/// Tuning of the BRASIL-style rescaling step.
struct BrasilParams {
    double kappa = 2.2;
    double sigma_max = 0.1;
};

/// Right-hand side flavor of the Maehly correction: logarithms of error
/// ratios, or the bilinear surrogate 2(e - ref)/(e + ref) that is better
/// behaved while the errors still differ by orders of magnitude.
enum class MaehlyVariant { LogRatio, Bilinear };

/// What the combined driver should apply next.
enum class CorrectionStrategy { Brasil, MaehlyBilinear, MaehlyLogRatio };

/// Rescales the 2n+2 subinterval lengths by (1 - sigma)^gamma_k with the
/// normalized error deviations gamma_k, then reassembles the nodes from
/// the new cumulative lengths. eps has 2n+2 entries, all >= 0, not all 0.
/// Equal errors return the input unchanged.
[[nodiscard]] NodeSet brasil_step(const NodeSet& nodes,
                                  const std::vector<double>& eps,
                                  const BrasilParams& params = {});

/// Maehly node correction: solves the (2n+1)-dimensional linear system
/// relating local error ratios (against the first maximum) to node shifts.
/// Throws InvalidCorrection if the shifted nodes are not admissible.
[[nodiscard]] NodeSet maehly_system_step(const NodeSet& nodes,
                                         const EquioscillationReport& report,
                                         MaehlyVariant variant);

/// Same correction through the closed-form product expression (errors
/// referenced to their geometric mean), evaluated in the log domain; this
/// is the default path for n > 8.
[[nodiscard]] NodeSet maehly_direct_step(const NodeSet& nodes,
                                         const EquioscillationReport& report,
                                         MaehlyVariant variant);

/// Strategy switch of the combined driver: BRASIL while the report is not
/// alternating, the error is saturated near 2, or the curve sits below
/// roundoff; otherwise Maehly, bilinear until delta < 0.1.
[[nodiscard]] CorrectionStrategy select_strategy(
    const EquioscillationReport& report, bool below_precision);

}  // namespace unirat
