#pragma once

#include <vector>

#include "unirat/types.hpp"

namespace unirat {

/// Evaluates r at a complex point. At a support point z = i x_k the stored
/// value is returned directly; if the denominator sum underflows to exactly
/// zero anywhere else, a complex infinity is returned as pole indication.
[[nodiscard]] cplx eval(const BarycentricRational& r, cplx z);

/// Evaluates r(i x) for real x. Same result as eval(r, {0, x}) but without
/// complex kernel divisions; this is the hot path of the error search.
[[nodiscard]] cplx eval_ix(const BarycentricRational& r, double x);

/// max_j | |r(i grid_j)| - 1 |.
[[nodiscard]] double unitarity_defect(const BarycentricRational& r,
                                      const std::vector<double>& grid);

/// Poles and zeros via the arrowhead generalized eigenvalue problem of the
/// barycentric numerator and denominator; spurious infinite eigenvalues are
/// discarded. Requires all weights nonzero.
[[nodiscard]] PoleZeroSet poles_zeros(const BarycentricRational& r);

}  // namespace unirat
