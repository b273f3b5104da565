// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include "levdec/regularity.hpp"
#include "levdec/scheme.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <vector>

using Catch::Approx;
using namespace levdec;
namespace lt = levdec::testing;

// ============================================================================
// CapitalStructure
// ============================================================================

TEST_CASE("capital structure validates its fields", "[scheme][structure]") {
    CHECK_THROWS_AS(CapitalStructure(0.0, 90.0, 0.06, 0.05, 0.05), InvalidArgument);
    CHECK_THROWS_AS(CapitalStructure(-1.0, 90.0, 0.06, 0.05, 0.05), InvalidArgument);
    CHECK_THROWS_AS(CapitalStructure(10.0, -1.0, 0.06, 0.05, 0.05), InvalidArgument);
    CHECK_THROWS_AS(CapitalStructure(10.0, 90.0, std::nan(""), 0.05, 0.05), InvalidArgument);
    CHECK_THROWS_AS(CapitalStructure(10.0, 90.0, 0.06, 0.05, INFINITY), InvalidArgument);

    const CapitalStructure cs(10.0, 90.0, 0.06, 0.05, 0.05);
    CHECK(cs.assets() == 100.0);
}

// ============================================================================
// Return on capital, three equivalent forms
// ============================================================================

TEST_CASE("return on capital from a full balance sheet", "[scheme][roc]") {
    // Ten units of own capital, ninety borrowed, both funding costs at 5%.
    // A 6% asset return yields +10% on capital; 4% yields -10%.
    CHECK(roc_general(CapitalStructure(10.0, 90.0, 0.06, 0.05, 0.05)) ==
          Approx(0.10).margin(1e-12));
    CHECK(roc_general(CapitalStructure(10.0, 90.0, 0.04, 0.05, 0.05)) ==
          Approx(-0.10).margin(1e-12));
}

TEST_CASE("leverage form matches the hand value", "[scheme][roc]") {
    CHECK(roc_leverage_form(10.0, 0.06, 0.05) == Approx(0.10).margin(1e-12));
    CHECK(roc_leverage_form(10.0, 0.04, 0.05) == Approx(-0.10).margin(1e-12));
    CHECK(roc_leverage_form(1.0, 0.06, 0.05) == Approx(0.01).margin(1e-12));
    CHECK(roc_leverage_form(0.0, 0.06, 0.05) == Approx(0.0).margin(1e-12));
}

TEST_CASE("leverage form rejects bad multipliers", "[scheme][roc]") {
    CHECK_THROWS_AS(roc_leverage_form(-1.0, 0.06, 0.05), InvalidArgument);
    CHECK_THROWS_AS(roc_leverage_form(std::nan(""), 0.06, 0.05), InvalidArgument);
}

TEST_CASE("leverage from structure", "[scheme][roc]") {
    CHECK(leverage_from_structure(CapitalStructure(10.0, 90.0, 0.0, 0.0, 0.0)) == 10.0);
    CHECK(leverage_from_structure(CapitalStructure(10.0, 0.0, 0.0, 0.0, 0.0)) == 1.0);
    CHECK(leverage_from_structure(CapitalStructure(25.0, 75.0, 0.0, 0.0, 0.0)) == 4.0);
}

TEST_CASE("decomposed form collapses to the leverage form at a single cost",
          "[scheme][roc][property]") {
    lt::Rng rng(8881);
    for (int trial = 0; trial < 200; ++trial) {
        const double lev = rng.uniform(0.0, 20.0);
        const double roi = rng.uniform(-0.2, 0.2);
        const double cost = rng.uniform(-0.1, 0.1);
        CHECK(roc_decomposed(lev, roi, cost, cost) ==
              Approx(roc_leverage_form(lev, roi, cost)).margin(1e-12));
    }
}

TEST_CASE("general and decomposed forms agree on random balance sheets",
          "[scheme][roc][property]") {
    lt::Rng rng(8882);
    for (int trial = 0; trial < 200; ++trial) {
        const double capital = rng.uniform(1.0, 100.0);
        const double borrowed = rng.uniform(0.0, 500.0);
        const double cof = rng.uniform(-0.1, 0.1);
        const double coc = rng.uniform(-0.1, 0.1);
        const double roi = rng.uniform(-0.2, 0.2);
        const CapitalStructure cs(capital, borrowed, roi, cof, coc);
        const double lev = leverage_from_structure(cs);
        CHECK(roc_general(cs) ==
              Approx(roc_decomposed(lev, roi, cof, coc)).margin(1e-9));
    }
}

TEST_CASE("unit leverage with no borrowing reduces to roi minus coc", "[scheme][roc]") {
    const CapitalStructure cs(50.0, 0.0, 0.06, 0.07, 0.02);
    CHECK(roc_general(cs) == Approx(0.04).margin(1e-12));
}

// ============================================================================
// Decision and consequence
// ============================================================================

TEST_CASE("decision validates leverage and price", "[scheme][decision]") {
    CHECK_THROWS_AS(Decision(-0.5, 0.05), NegativeLeverage);
    CHECK_THROWS_AS(Decision(10.0, -0.01), InvalidArgument);
    CHECK_THROWS_AS(Decision(std::nan(""), 0.05), InvalidArgument);
    CHECK_THROWS_AS(Decision(10.0, INFINITY), InvalidArgument);

    const Decision d(10.0, 0.05);
    CHECK(d.leverage() == 10.0);
    CHECK(d.price() == 0.05);
}

TEST_CASE("consequence multiplies the excess return by leverage", "[scheme][decision]") {
    const Decision d(10.0, 0.05);
    CHECK(consequence(0.06, d) == Approx(0.10).margin(1e-15));
    CHECK(consequence(0.04, d) == Approx(-0.10).margin(1e-15));
    CHECK(consequence(0.05, d) == 0.0);

    const Decision flat(0.0, 0.05);
    CHECK(consequence(0.10, flat) == 0.0);
}

TEST_CASE("consequence is linear in the state", "[scheme][decision][property]") {
    lt::Rng rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const Decision d(rng.uniform(0.0, 15.0), rng.uniform(0.0, 0.1));
        const double t1 = rng.uniform(-0.3, 0.3);
        const double t2 = rng.uniform(-0.3, 0.3);
        const double w = rng.unit();
        const double blended = consequence(w * t1 + (1.0 - w) * t2, d);
        const double mixed = w * consequence(t1, d) + (1.0 - w) * consequence(t2, d);
        CHECK(blended == Approx(mixed).margin(1e-12));
    }
}

TEST_CASE("doubling the leverage doubles the consequence", "[scheme][decision][property]") {
    lt::Rng rng(4243);
    for (int trial = 0; trial < 100; ++trial) {
        const double u = rng.uniform(0.0, 10.0);
        const double p = rng.uniform(0.0, 0.1);
        const double theta = rng.uniform(-0.3, 0.3);
        CHECK(consequence(theta, Decision(2.0 * u, p)) ==
              Approx(2.0 * consequence(theta, Decision(u, p))).margin(1e-12));
    }
}

// ============================================================================
// DecisionScheme matrix
// ============================================================================

TEST_CASE("scheme rejects an empty decision set", "[scheme][matrix]") {
    CHECK_THROWS_AS(DecisionScheme({}, ThetaGrid({0.04, 0.06})), EmptyDecisionSet);
}

TEST_CASE("scheme matrix holds every consequence", "[scheme][matrix]") {
    const ThetaGrid grid({0.04, 0.06});
    const std::vector<Decision> decisions{Decision(10.0, 0.05), Decision(1.0, 0.05)};
    const DecisionScheme scheme = build_scheme(decisions, grid);

    REQUIRE(scheme.decisions().size() == 2);
    REQUIRE(scheme.grid().size() == 2);
    CHECK(scheme.at(0, 0) == Approx(-0.10).margin(1e-15));
    CHECK(scheme.at(0, 1) == Approx(0.10).margin(1e-15));
    CHECK(scheme.at(1, 0) == Approx(-0.01).margin(1e-15));
    CHECK(scheme.at(1, 1) == Approx(0.01).margin(1e-15));
}

TEST_CASE("a zero-leverage decision contributes an all-zero row", "[scheme][matrix]") {
    const ThetaGrid grid({-0.02, 0.01, 0.07});
    const DecisionScheme scheme = build_scheme({Decision(0.0, 0.03)}, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        CHECK(scheme.at(0, j) == 0.0);
    }
}

TEST_CASE("matrix shape follows the decision and state counts", "[scheme][matrix]") {
    const ThetaGrid grid({0.01, 0.02, 0.03});
    const DecisionScheme scheme =
        build_scheme({Decision(1.0, 0.0), Decision(2.0, 0.0)}, grid);
    REQUIRE(scheme.consequences().size() == 2);
    for (const auto& row : scheme.consequences()) {
        CHECK(row.size() == 3);
    }
}

TEST_CASE("scheme matrix matches direct consequence evaluation", "[scheme][matrix][property]") {
    lt::Rng rng(5150);
    for (int trial = 0; trial < 30; ++trial) {
        const ThetaGrid grid(lt::random_states(rng, 2, 7, -0.2, 0.1));
        std::vector<Decision> decisions;
        const std::size_t count = rng.count(1, 5);
        for (std::size_t k = 0; k < count; ++k) {
            decisions.emplace_back(rng.uniform(0.0, 12.0), rng.uniform(0.0, 0.08));
        }
        const DecisionScheme scheme = build_scheme(decisions, grid);
        for (std::size_t i = 0; i < decisions.size(); ++i) {
            for (std::size_t j = 0; j < grid.size(); ++j) {
                CHECK(scheme.at(i, j) == consequence(grid.states()[j], decisions[i]));
            }
        }
    }
}
