#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "unirat/omega_estimate.hpp"
#include "unirat/types.hpp"

using namespace unirat;

namespace {

bool close_rel(double got, double want, double rel) {
    return std::abs(got - want) <= rel * std::abs(want);
}

}  // namespace

TEST_CASE("experimental frequency model reproduces frozen values") {
    CHECK(close_rel(omega_experimental(32, 1e-1), 95.456091306636478876,
                    1e-12));
    CHECK(close_rel(omega_experimental(8, 1e-2), 18.287189518246700464,
                    1e-12));
    CHECK(close_rel(omega_experimental(256, 1e-6), 771.2662663855996588,
                    1e-12));
    // the model polynomial cancels heavily near ln(eps) = -28, so the
    // reference is pinned to the double evaluation
    CHECK(close_rel(omega_experimental(32, 1e-12), 62.247180899494474, 1e-13));
}

TEST_CASE("extrapolation takes over below the fitted accuracy range") {
    CHECK(close_rel(omega_experimental(32, 1e-15), 55.841659972270150824,
                    1e-12));
    // continuity across the handoff
    const double above = omega_experimental(32, 1.0000001e-14);
    const double below = omega_experimental(32, 0.9999999e-14);
    CHECK(std::abs(above - below) < 1e-4 * above);
}

TEST_CASE("asymptotic inversion reproduces frozen values") {
    CHECK(close_rel(omega_asymptotic(1, 1e-3), 0.36342411856642793178, 1e-12));
    CHECK(close_rel(omega_asymptotic(8, 1e-10), 6.2054342164853677243, 1e-12));
    CHECK(omega_asymptotic(0, 0.125) == 0.125);
}

TEST_CASE("asymptotic error estimate reproduces frozen values") {
    CHECK(close_rel(error_estimate_asymptotic(8, 20.0),
                    0.043690089422618815279, 1e-14));
    CHECK(close_rel(error_estimate_asymptotic(2, 1.0),
                    8.6805555555555555556e-5, 1e-14));
    CHECK(error_estimate_asymptotic(0, 0.3) == 0.3);
}

TEST_CASE("asymptotic estimate and inversion round trip") {
    for (const int n : {1, 3, 8, 20}) {
        for (const double eps : {1e-14, 1e-8, 1e-3}) {
            const double omega = omega_asymptotic(n, eps);
            CHECK(close_rel(error_estimate_asymptotic(n, omega), eps, 1e-12));
        }
    }
}

TEST_CASE("frequency grows with the error budget and the degree") {
    double prev = 0.0;
    for (const double eps : {1e-12, 1e-9, 1e-6, 1e-3, 1e-1}) {
        const double omega = omega_auto(16, eps);
        CHECK(omega > prev);
        prev = omega;
    }
    prev = 0.0;
    for (const int n : {1, 2, 4, 8, 16, 32}) {
        const double omega = omega_auto(n, 1e-6);
        CHECK(omega > prev);
        prev = omega;
    }
}

TEST_CASE("auto selection switches regimes at the documented threshold") {
    // n = 10: threshold 10^{-4}; eps right at it stays experimental
    CHECK(omega_auto(10, 1e-4) == omega_experimental(10, 1e-4));
    CHECK(omega_auto(10, 0.99e-4) == omega_asymptotic(10, 0.99e-4));
    // deep accuracy at modest degree trusts the asymptotic regime
    CHECK(omega_auto(8, 1e-10) == omega_asymptotic(8, 1e-10));
    // loose accuracy rides the experimental fit
    CHECK(omega_auto(32, 1e-2) == omega_experimental(32, 1e-2));
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(static_cast<void>(omega_experimental(0, 1e-3)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(omega_experimental(4, 0.0)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(omega_experimental(4, 2.5)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(omega_asymptotic(-1, 1e-3)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(omega_asymptotic(4, 0.0)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(error_estimate_asymptotic(-1, 1.0)), DomainError);
    CHECK_THROWS_AS(static_cast<void>(error_estimate_asymptotic(4, 0.0)), DomainError);
}
