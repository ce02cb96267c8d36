#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "unirat/driver.hpp"
#include "unirat/equi_metrics.hpp"
#include "unirat/interpolation.hpp"
#include "unirat/node_correction.hpp"
#include "unirat/numerics.hpp"

using namespace unirat;

namespace {

EquioscillationReport report_of(std::vector<double> eta,
                                std::vector<double> eps) {
    EquioscillationReport rep;
    rep.eta = std::move(eta);
    rep.eps = std::move(eps);
    return rep;
}

}  // namespace

TEST_CASE("brasil step rescales subintervals as expected") {
    const NodeSet out =
        brasil_step(NodeSet::of({-0.5, 0.0, 0.5}), {1.0, 2.0, 1.0, 2.0});
    REQUIRE(out.size() == 3);
    CHECK(std::abs(out.values()[0] - -0.4475138121546961326) < 1e-14);
    CHECK(std::abs(out.values()[1]) < 1e-16);
    CHECK(std::abs(out.values()[2] - 0.5524861878453038674) < 1e-14);
}

TEST_CASE("maehly corrections match the hand-solved shifts") {
    const EquioscillationReport rep =
        report_of({-0.8, -0.25, 0.25, 0.8}, {1.0, 1.2, 1.0, 1.2});
    const NodeSet in = NodeSet::of({-0.5, 0.0, 0.5});
    const std::vector<double> dx = {0.024240479710105330985,
                                    -0.0066298747925074409532,
                                    0.024240479710105330985};
    for (const NodeSet& out :
         {maehly_direct_step(in, rep, MaehlyVariant::LogRatio),
          maehly_system_step(in, rep, MaehlyVariant::LogRatio)}) {
        REQUIRE(out.size() == 3);
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(std::abs(out.values()[k] - in.values()[k] - dx[k]) < 1e-13);
    }
}

TEST_CASE("direct and system paths agree on genuine instances") {
    const NodeSet nodes = initial_nodes(2, 2.0);
    const BarycentricRational r = build_interpolant(2.0, nodes);
    const EquioscillationReport rep = local_error_maxima(r, 2.0, nodes);
    const NodeSet d = maehly_direct_step(nodes, rep, MaehlyVariant::LogRatio);
    const NodeSet s = maehly_system_step(nodes, rep, MaehlyVariant::LogRatio);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const double dd = d.values()[k] - nodes.values()[k];
        const double ds = s.values()[k] - nodes.values()[k];
        CHECK(std::abs(dd - ds) <= 1e-10 * std::max(1.0, std::abs(dd)));
    }
}

TEST_CASE("equal errors leave the nodes bitwise untouched") {
    const NodeSet in = NodeSet::of({-0.5, 0.0, 0.5});
    const EquioscillationReport rep =
        report_of({-0.8, -0.25, 0.25, 0.8}, {1.0, 1.0, 1.0, 1.0});
    CHECK(brasil_step(in, rep.eps).values() == in.values());
    CHECK(maehly_direct_step(in, rep, MaehlyVariant::LogRatio).values() ==
          in.values());
    CHECK(maehly_system_step(in, rep, MaehlyVariant::Bilinear).values() ==
          in.values());
}

TEST_CASE("mirror symmetric data yields exactly symmetric corrections") {
    const NodeSet in = NodeSet::of({-0.5, 0.0, 0.5});
    const EquioscillationReport rep =
        report_of({-0.8, -0.25, 0.25, 0.8}, {1.0, 1.2, 1.2, 1.0});
    for (const NodeSet& out :
         {brasil_step(in, rep.eps),
          maehly_direct_step(in, rep, MaehlyVariant::LogRatio),
          maehly_system_step(in, rep, MaehlyVariant::Bilinear)}) {
        const std::vector<double>& x = out.values();
        for (std::size_t k = 0; k < x.size(); ++k)
            CHECK(x[k] == -x[x.size() - 1 - k]);
    }
}

TEST_CASE("asymmetric error data must not be symmetrized away") {
    // mirror-symmetric nodes with lopsided errors: the correction has to
    // move the nodes off center
    const NodeSet in = NodeSet::of({-0.5, 0.0, 0.5});
    const NodeSet out = brasil_step(in, {1.0, 2.0, 1.0, 2.0});
    CHECK(out.values()[0] != -out.values()[2]);
}

TEST_CASE("overshooting corrections are rejected") {
    const NodeSet in = NodeSet::of({-0.5, 0.0, 0.5});
    const EquioscillationReport rep =
        report_of({-0.9, -0.1, 0.1, 0.9}, {1e-8, 1.0, 1e-8, 1.0});
    CHECK_THROWS_AS(static_cast<void>(maehly_direct_step(in, rep, MaehlyVariant::LogRatio)),
                    InvalidCorrection);
    CHECK_THROWS_AS(static_cast<void>(maehly_system_step(in, rep, MaehlyVariant::LogRatio)),
                    InvalidCorrection);
}

TEST_CASE("strategy selection follows the report state") {
    EquioscillationReport rep;
    rep.alternating = false;
    rep.uniform_error = 0.5;
    rep.delta = 0.5;
    CHECK(select_strategy(rep, false) == CorrectionStrategy::Brasil);
    rep.alternating = true;
    CHECK(select_strategy(rep, false) == CorrectionStrategy::MaehlyBilinear);
    rep.delta = 0.05;
    CHECK(select_strategy(rep, false) == CorrectionStrategy::MaehlyLogRatio);
    rep.uniform_error = 2.0;
    CHECK(select_strategy(rep, false) == CorrectionStrategy::Brasil);
    rep.uniform_error = 0.5;
    CHECK(select_strategy(rep, true) == CorrectionStrategy::Brasil);
    CHECK(select_strategy(rep, false) == CorrectionStrategy::MaehlyLogRatio);
}

TEST_CASE("input validation") {
    const NodeSet in = NodeSet::of({-0.5, 0.0, 0.5});
    CHECK_THROWS_AS(static_cast<void>(brasil_step(NodeSet::of({0.25}), {1.0, 2.0})), DomainError);
    CHECK_THROWS_AS(static_cast<void>(brasil_step(in, {1.0, 2.0})), DomainError);
    CHECK_THROWS_AS(static_cast<void>(brasil_step(in, {1.0, -2.0, 1.0, 2.0})), DomainError);
    CHECK_THROWS_AS(static_cast<void>(brasil_step(in, {0.0, 0.0, 0.0, 0.0})), DomainError);
    const EquioscillationReport bad_size =
        report_of({-0.8, 0.25, 0.8}, {1.0, 1.2, 1.0});
    CHECK_THROWS_AS(static_cast<void>(maehly_direct_step(in, bad_size, MaehlyVariant::LogRatio)),
                    DomainError);
    const EquioscillationReport zero_eps =
        report_of({-0.8, -0.25, 0.25, 0.8}, {1.0, 0.0, 1.0, 1.2});
    CHECK_THROWS_AS(static_cast<void>(maehly_system_step(in, zero_eps, MaehlyVariant::LogRatio)),
                    DomainError);
}
