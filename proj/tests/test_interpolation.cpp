#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "unirat/driver.hpp"
#include "unirat/interpolation.hpp"
#include "unirat/numerics.hpp"

using namespace unirat;

namespace {

std::vector<double> unit_grid(int count) {
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        grid[static_cast<std::size_t>(j)] = -1.0 + 2.0 * j / (count - 1);
    return grid;
}

}  // namespace

TEST_CASE("interpolation conditions hold at every node") {
    const NodeSet nodes = initial_nodes(4, 7.0);
    const BarycentricRational r = build_interpolant(7.0, nodes);
    REQUIRE(r.support_nodes.size() == 5);
    CHECK(r.degree_n == 4);
    CHECK_FALSE(r.near_degenerate);
    for (const double x : nodes.values())
        CHECK(std::abs(eval_ix(r, x) - std::polar(1.0, 7.0 * x)) < 1e-13);
}

TEST_CASE("support values are the target values") {
    const BarycentricRational r = build_interpolant(2.5, initial_nodes(3, 2.5));
    for (std::size_t k = 0; k < r.support_nodes.size(); ++k)
        CHECK(r.support_values[k] == std::polar(1.0, 2.5 * r.support_nodes[k]));
}

TEST_CASE("symmetric construction is unitary by structure") {
    for (const int n : {1, 2, 5, 8}) {
        const double omega = 0.7 * (n + 1) * std::numbers::pi;
        const BarycentricRational r =
            build_interpolant(omega, initial_nodes(n, omega));
        CHECK(unitarity_defect(r, unit_grid(2001)) <= 1e-14);
        for (std::size_t k = 0; k < r.weights.size(); ++k) {
            const cplx mirrored = r.weights[r.weights.size() - 1 - k];
            CHECK(std::abs(std::abs(r.weights[k]) - std::abs(mirrored)) <=
                  1e-15);
        }
    }
}

TEST_CASE("degree zero interpolant is the constant target value") {
    const BarycentricRational r = build_interpolant(1.0, NodeSet::of({0.25}));
    REQUIRE(r.weights.size() == 1);
    CHECK(r.weights[0] == cplx{1.0, 0.0});
    CHECK(eval_ix(r, -0.7) == std::polar(1.0, 0.25));
}

TEST_CASE("asymmetric node sets still interpolate") {
    const NodeSet nodes = NodeSet::of({-0.6, -0.1, 0.2});
    const BarycentricRational r = build_interpolant(1.5, nodes);
    for (const double x : nodes.values())
        CHECK(std::abs(eval_ix(r, x) - std::polar(1.0, 1.5 * x)) < 1e-12);
}

TEST_CASE("frequency domain is enforced") {
    const NodeSet nodes = NodeSet::of({-0.5, 0.0, 0.5});
    CHECK_THROWS_AS(static_cast<void>(build_interpolant(0.0, nodes)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(build_interpolant(-1.0, nodes)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(build_interpolant(2.0 * std::numbers::pi, nodes)),
                    DomainError);
    CHECK_NOTHROW(static_cast<void>(build_interpolant(2.0 * std::numbers::pi - 1e-9, nodes)));
}

TEST_CASE("extreme instances build without degeneracy") {
    // vanishing frequency
    for (const double omega : {1e-4, 1e-8}) {
        const BarycentricRational r =
            build_interpolant(omega, initial_nodes(4, omega));
        CHECK_FALSE(r.near_degenerate);
        for (const cplx w : r.weights) CHECK(std::isfinite(std::abs(w)));
    }
    // nearly clustered nodes
    const NodeSet clustered =
        NodeSet::of({-0.5, -0.25, -1e-9, 0.0, 1e-9, 0.25, 0.5});
    const BarycentricRational r = build_interpolant(1.0, clustered);
    for (const double x : clustered.values())
        CHECK(std::abs(eval_ix(r, x) - std::polar(1.0, x)) < 1e-8);
}

TEST_CASE("unresolvable node clusters are flagged, not silently accepted") {
    const NodeSet clustered =
        NodeSet::of({-0.5, -0.25, -1e-13, 0.0, 1e-13, 0.25, 0.5});
    CHECK_THROWS_AS(static_cast<void>(build_interpolant(1.0, clustered)),
                    SmallestSingularValueNotIsolated);
    const NodeSet skewed =
        NodeSet::of({-0.5, -0.25, 1e-13, 2e-13, 3e-13, 0.25, 0.5});
    CHECK_THROWS_AS(static_cast<void>(build_interpolant(1.0, skewed)),
                    SmallestSingularValueNotIsolated);
}

TEST_CASE("deep accuracy instances keep the interpolation residual small") {
    // weights span many decades here; the construction must not reject them
    const BarycentricRational r =
        build_interpolant(62.29, initial_nodes(32, 62.29));
    CHECK(std::isfinite(std::abs(r.weights.front())));
    double wmin = std::numeric_limits<double>::infinity();
    double wmax = 0.0;
    for (const cplx w : r.weights) {
        wmin = std::min(wmin, std::abs(w));
        wmax = std::max(wmax, std::abs(w));
    }
    CHECK(wmin > 0.0);
    CHECK(wmax < std::numeric_limits<double>::infinity());
}
