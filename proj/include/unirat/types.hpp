#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace unirat {

using cplx = std::complex<double>;

/// Input outside the documented domain of an operation.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The interpolation kernel has no isolated smallest singular value: the
/// computed weight vector fails to reproduce the interpolation data.
struct SmallestSingularValueNotIsolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A node correction step left the admissible set (nodes no longer
/// strictly increasing inside (-1, 1), or not finite).
struct InvalidCorrection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A routine was called with state that violates its contract.
struct PreconditionNotMet : std::logic_error {
    using std::logic_error::logic_error;
};

/// An iterative method cannot continue (SVD failure, zero data, ...).
struct Breakdown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Construction failure inside the driver loop, tagged with the iteration
/// at which it occurred.
class InterpolantConstructionFailed : public std::runtime_error {
public:
    InterpolantConstructionFailed(int iteration, const std::string& reason)
        : std::runtime_error("iteration " + std::to_string(iteration) + ": " + reason),
          iteration_(iteration) {}

    [[nodiscard]] int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

/// Strictly increasing interpolation nodes in (-1, 1), 2n+1 of them for
/// degree n.
///
/// A mirror-symmetric set stores only its nonnegative half (starting with
/// the mandatory node at zero); the negative half is implied. This keeps
/// x_j = -x_{2n+2-j} exact under arbitrary updates instead of hoping that
/// floating point preserves it.
class NodeSet {
public:
    /// General node set. The input is sorted first; an input that is an
    /// exact mirror of itself folds into symmetric half storage.
    static NodeSet of(std::vector<double> nodes);

    /// Symmetric set from the nonnegative half; half.front() must be 0.
    static NodeSet from_half(std::vector<double> half);

    [[nodiscard]] int degree() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return 2 * static_cast<std::size_t>(n_) + 1;
    }
    [[nodiscard]] bool symmetric() const noexcept { return symmetric_; }

    /// All 2n+1 nodes in increasing order.
    [[nodiscard]] std::vector<double> values() const;

    /// The stored nonnegative half; only valid for symmetric sets.
    [[nodiscard]] const std::vector<double>& half() const;

private:
    NodeSet() = default;

    std::vector<double> store_;
    int n_ = 0;
    bool symmetric_ = false;
};

/// Barycentric rational function with support on the imaginary axis.
///
/// Real abscissae x_k are stored; the function itself is
///   r(z) = sum_k w_k f_k / (z - i x_k)  /  sum_k w_k / (z - i x_k),
/// so r(i x_k) = f_k. For interpolants f_k = e^{i omega x_k}; AAA-Lawson
/// output carries its own unimodular support values.
struct BarycentricRational {
    std::vector<double> support_nodes;
    std::vector<cplx> weights;
    std::vector<cplx> support_values;
    int degree_n = 0;
    /// Set when some weight is negligible relative to the largest, which
    /// signals an (almost) lower-degree function.
    bool near_degenerate = false;
};

/// Poles and zeros of a barycentric rational function in the z plane.
struct PoleZeroSet {
    std::vector<cplx> poles;
    std::vector<cplx> zeros;
    /// Set when fewer (or more) finite poles/zeros than the nominal degree
    /// were recovered.
    bool degenerate = false;
};

/// The 2n+2 local maxima of |r(ix) - e^{i omega x}| between consecutive
/// interpolation nodes (boundaries included), with the phase of
/// r(ix) e^{-i omega x} at those points.
struct EquioscillationReport {
    std::vector<double> eta;
    std::vector<double> eps;
    std::vector<double> phase;
    /// Phase signs alternate across eta (exact zeros match either sign).
    bool alternating = false;
    /// Offset iota of the sign pattern sign(phase_j) = (-1)^{j + iota}.
    int parity = 0;
    /// Error in uniformity, 1 - min(eps)/max(eps).
    double delta = 0.0;
    /// max(eps).
    double uniform_error = 0.0;
    /// Some subinterval's error never rose above roundoff, so eta/eps are
    /// not meaningful there.
    bool below_precision = false;
};

}  // namespace unirat
