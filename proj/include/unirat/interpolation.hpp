#pragma once

#include "unirat/types.hpp"

namespace unirat {

/// Interpolates e^{i omega x} at the 2n+1 nodes with a degree-(n, n)
/// unitary rational function in barycentric form.
///
/// The support is the odd-indexed node subset (1st, 3rd, ...); weights come
/// from the null vector of the associated divided-difference kernel. For a
/// symmetric node set a real sine kernel is used and the weight vector is
/// projected onto its dominant flip parity, which makes unitarity and the
/// evenness of the error curve exact by construction.
///
/// Requires 0 < omega < (n+1) pi. Throws SmallestSingularValueNotIsolated
/// when the computed weights fail to reproduce the data at the test nodes.
[[nodiscard]] BarycentricRational build_interpolant(double omega,
                                                    const NodeSet& nodes);

}  // namespace unirat
