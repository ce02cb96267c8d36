#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "unirat/aaa_lawson.hpp"
#include "unirat/driver.hpp"
#include "unirat/interpolation.hpp"
#include "unirat/numerics.hpp"

using namespace unirat;

namespace {

double max_residual(const BarycentricRational& r, double omega,
                    const std::vector<double>& xs) {
    double worst = 0.0;
    for (const double x : xs)
        worst = std::max(worst,
                         std::abs(eval_ix(r, x) - std::polar(1.0, omega * x)));
    return worst;
}

std::vector<double> unit_grid(int count) {
    std::vector<double> grid(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        grid[static_cast<std::size_t>(j)] = -1.0 + 2.0 * j / (count - 1);
    return grid;
}

}  // namespace

TEST_CASE("test node grids match their definitions") {
    const TestNodeSet e = TestNodeSet::equispaced(5);
    REQUIRE(e.nodes.size() == 5);
    CHECK(e.kind == TestNodeSet::Kind::Equispaced);
    const std::vector<double> expected = {-1.0, -0.5, 0.0, 0.5, 1.0};
    CHECK(e.nodes == expected);

    const TestNodeSet c = TestNodeSet::chebyshev(5);
    REQUIRE(c.nodes.size() == 5);
    CHECK(c.kind == TestNodeSet::Kind::Chebyshev);
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(c.nodes[k] == std::cos(std::numbers::pi * (4.0 - k) / 4.0));
}

TEST_CASE("aaa picks support nodes from the test grid") {
    const TestNodeSet tests = TestNodeSet::equispaced(4900);
    const BarycentricRational r = aaa(62.29, tests, 32);
    CHECK(r.degree_n == 32);
    REQUIRE(r.support_nodes.size() == 33);
    for (std::size_t k = 1; k < r.support_nodes.size(); ++k)
        CHECK(r.support_nodes[k - 1] < r.support_nodes[k]);
    for (const double s : r.support_nodes)
        CHECK(std::binary_search(tests.nodes.begin(), tests.nodes.end(), s));
    // published level for this configuration is about 1.1e-11
    const double err = max_residual(r, 62.29, tests.nodes);
    CHECK(err > 0.3e-11);
    CHECK(err < 3e-11);
}

TEST_CASE("aaa and lawson outputs stay unitary") {
    const TestNodeSet tests = TestNodeSet::equispaced(4900);
    const std::vector<double> grid = unit_grid(10000);
    const BarycentricRational r0 = aaa(77.86, tests, 32);
    CHECK(unitarity_defect(r0, grid) <= 1e-12);
    const auto [r, state] = lawson(r0, 77.86, tests, 20);
    CHECK(unitarity_defect(r, grid) <= 1e-12);
}

TEST_CASE("zero lawson iterations return the input approximant") {
    const TestNodeSet tests = TestNodeSet::equispaced(1000);
    const BarycentricRational r = aaa(18.28, tests, 8);
    const auto [same, state] = lawson(r, 18.28, tests, 0);
    CHECK(state.iteration == 0);
    REQUIRE(state.error_history.size() == 1);
    CHECK(same.support_nodes == r.support_nodes);
    for (std::size_t k = 0; k < r.weights.size(); ++k)
        CHECK(std::abs(same.weights[k] - r.weights[k]) == 0.0);
    const double fresh = max_residual(r, 18.28, tests.nodes);
    CHECK(std::abs(state.error_history[0] - fresh) <= 1e-10 * fresh);
}

TEST_CASE("lawson sweeps close most of the gap to the reference error") {
    const TestNodeSet tests = TestNodeSet::equispaced(4900);
    const BarycentricRational r0 = aaa(77.86, tests, 32);
    const auto [r, state] = lawson(r0, 77.86, tests, 100);
    REQUIRE(state.error_history.size() == 101);
    const double start = state.error_history.front();
    const double best =
        *std::min_element(state.error_history.begin(),
                          state.error_history.end());
    // the returned approximant is the best iterate of the sweep history
    const double returned = max_residual(r, 77.86, tests.nodes);
    CHECK(returned <= best * (1.0 + 1e-12));
    CHECK(returned < 0.1 * start);

    BestApproxConfig cfg;
    cfg.n = 32;
    cfg.omega = 77.86;
    const BestApproxResult ref = compute_best(cfg);
    CHECK(returned <= 2.0 * ref.report.uniform_error);
    // normalized probability weights
    double sum = 0.0;
    for (const double w : state.weights) {
        CHECK(w >= 0.0);
        sum += w;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("adaptive test nodes give a usable bootstrap grid") {
    const TestNodeSet ad = adaptive_test_nodes(77.86, 32, 3);
    CHECK(ad.kind == TestNodeSet::Kind::Adaptive);
    CHECK(ad.nodes.size() >= 132);
    CHECK(ad.nodes.front() >= -1.0);
    CHECK(ad.nodes.back() <= 1.0);
    for (std::size_t k = 1; k < ad.nodes.size(); ++k)
        CHECK(ad.nodes[k - 1] < ad.nodes[k]);

    const std::vector<double> dense = unit_grid(10000);
    const double err_ad =
        max_residual(aaa(77.86, ad, 32), 77.86, dense);
    const TestNodeSet eq =
        TestNodeSet::equispaced(static_cast<int>(ad.nodes.size()));
    const double err_eq =
        max_residual(aaa(77.86, eq, 32), 77.86, dense);
    // comparable to an equispaced grid of the same size
    CHECK(err_ad < 3.0 * err_eq);
    CHECK(err_eq < 3.0 * err_ad);
}

TEST_CASE("interpolation nodes are recovered from good approximants") {
    const double kT3 = 0.86602540378443864676;
    const NodeSet nodes = NodeSet::of({-kT3, 0.0, kT3});
    const BarycentricRational r = build_interpolant(1.0, nodes);
    const std::optional<NodeSet> found = detect_interpolation_nodes(r, 1.0);
    REQUIRE(found.has_value());
    REQUIRE(found->size() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(std::abs(found->values()[k] - nodes.values()[k]) < 1e-10);
    // a frequency mismatch breaks the sign-change count
    CHECK_FALSE(detect_interpolation_nodes(r, 2.9).has_value());
}

TEST_CASE("lawson converged approximants are in interpolation position") {
    const TestNodeSet tests = TestNodeSet::equispaced(4900);
    const BarycentricRational r0 = aaa(84.16, tests, 32);
    const auto [r, state] = lawson(r0, 84.16, tests, 100);
    const std::optional<NodeSet> found = detect_interpolation_nodes(r, 84.16);
    REQUIRE(found.has_value());
    CHECK(found->size() == 65);
}

TEST_CASE("small scale cross validation against the driver") {
    BestApproxConfig cfg;
    cfg.n = 2;
    cfg.omega = 1.0;
    const BestApproxResult drv = compute_best(cfg);
    REQUIRE(drv.converged);
    const TestNodeSet tests = TestNodeSet::equispaced(10000);
    const BarycentricRational r0 = aaa(1.0, tests, 2);
    const auto [r, state] = lawson(r0, 1.0, tests, 200);
    const double lerr = max_residual(r, 1.0, tests.nodes);
    const double derr = drv.report.uniform_error;
    CHECK(std::abs(lerr - derr) <= 1e-3 * derr);
    // both land inside the driver's sandwich bounds
    const double lo = (1.0 - drv.report.delta) * derr;
    CHECK(lerr >= lo * (1.0 - 1e-3));
    CHECK(lerr <= derr * (1.0 + 1e-3));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(static_cast<void>(aaa(10.0, TestNodeSet::equispaced(100), 32)),
                    DomainError);
    BarycentricRational r;
    r.degree_n = 1;
    r.support_nodes = {0.1, 0.100001, 0.2};
    r.support_values = {cplx{1.0, 0.0}, cplx{1.0, 0.0}, cplx{1.0, 0.0}};
    r.weights = {cplx{1.0, 0.0}, cplx{-1.0, 0.0}, cplx{0.5, 0.0}};
    CHECK_THROWS_AS(
        static_cast<void>(lawson(r, 1.0, TestNodeSet::equispaced(9), 1)),
        DomainError);
}
