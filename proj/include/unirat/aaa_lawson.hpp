#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unirat/types.hpp"

namespace unirat {

/// Test nodes in [-1, 1] for AAA and Lawson runs. A degree-n run needs at
/// least 2(2n+2) of them.
struct TestNodeSet {
    enum class Kind { Equispaced, Chebyshev, Adaptive };

    std::vector<double> nodes;
    Kind kind = Kind::Equispaced;

    [[nodiscard]] static TestNodeSet equispaced(int count);
    /// Chebyshev points cos(pi k / (count-1)) in increasing order.
    [[nodiscard]] static TestNodeSet chebyshev(int count);
};

/// Lawson reweighting state alongside the returned approximant.
struct LawsonState {
    /// Final weights over the test nodes, normalized to sum 1.
    std::vector<double> weights;
    int iteration = 0;
    /// Max residual over the test nodes: entry 0 before the first sweep,
    /// then one entry after each sweep.
    std::vector<double> error_history;
};

/// Greedy AAA approximation of e^{i omega x} over the test nodes, with the
/// weight vector projected onto the unitary structure after every solve.
/// Support nodes are returned in increasing order.
[[nodiscard]] BarycentricRational aaa(double omega, const TestNodeSet& tests,
                                      int n);

/// Lawson iteratively reweighted least squares refinement of an AAA
/// approximant toward the minimax solution, with decoupled numerator and
/// denominator coefficients re-projected onto unitarity every sweep.
/// Returns the best iterate encountered; the history records every step.
[[nodiscard]] std::pair<BarycentricRational, LawsonState> lawson(
    const BarycentricRational& r, double omega, const TestNodeSet& tests,
    int iterations);

/// Builds a test node set concentrated near the error maxima of a short
/// AAA-Lawson bootstrap run, refined over the given number of rounds.
[[nodiscard]] TestNodeSet adaptive_test_nodes(double omega, int n, int rounds);

/// Hunts for 2n+1 sign changes of the phase error; returns the bisected
/// change points as a node set when exactly 2n+1 are found, otherwise
/// nothing (the approximant is not in interpolation position).
[[nodiscard]] std::optional<NodeSet> detect_interpolation_nodes(
    const BarycentricRational& r, double omega);

}  // namespace unirat
