// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include "levdec/json_io.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

#include <filesystem>
#include <string>
#include <vector>

using Catch::Approx;
using namespace levdec;
namespace fs = std::filesystem;
namespace lt = levdec::testing;
using lt::TempDir;
using lt::read_text;
using lt::write_text;

// ============================================================================
// Regularity payloads
// ============================================================================

TEST_CASE("regularity payload round-trips through json", "[json][regularity]") {
    const ThetaGrid grid({0.04, 0.06});
    const Regularity reg(grid,
                         {Distribution(grid, {0.25, 0.75}), Distribution::uniform(grid)},
                         "demo");
    const nlohmann::json payload = regularity_to_json(reg);
    const Regularity back = regularity_from_json(payload);

    CHECK(back.grid() == reg.grid());
    REQUIRE(back.size() == reg.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.members()[i].weights() == reg.members()[i].weights());
    }
    CHECK(back.label() == "demo");
}

TEST_CASE("regularity json parses a hand-written payload", "[json][regularity]") {
    const auto payload = nlohmann::json::parse(R"({
        "states": [0.04, 0.06],
        "members": [[1.0, 0.0], [0.0, 1.0]]
    })");
    const Regularity reg = regularity_from_json(payload);
    CHECK(reg.grid().states() == std::vector<double>{0.04, 0.06});
    CHECK(reg.size() == 2);
    CHECK(reg.label().empty());
}

TEST_CASE("regularity json rejects malformed payloads", "[json][regularity]") {
    const std::vector<std::string> bad{
        R"({"members": [[1.0]]})",                                  // missing states
        R"({"states": [0.04, 0.06]})",                              // missing members
        R"({"states": [0.04, "x"], "members": [[0.5, 0.5]]})",      // non-numeric state
        R"({"states": [0.04, 0.06], "members": [[0.5]]})",          // ragged member
        R"({"states": [0.04, 0.06], "members": [[0.9, 0.3]]})",     // not a simplex
        R"({"states": [0.06, 0.04], "members": [[0.5, 0.5]]})",     // unsorted states
        R"({"states": [0.04, 0.06], "members": []})",               // no members
        R"([1, 2, 3])",                                             // not an object
    };
    for (const std::string& text : bad) {
        INFO(text);
        CHECK_THROWS_AS(regularity_from_json(nlohmann::json::parse(text)), Error);
    }
}

TEST_CASE("regularity files round-trip byte-for-byte", "[json][regularity][file]") {
    const TempDir tmp;
    const ThetaGrid grid({-0.01, 0.0, 0.02});
    const Regularity reg(
        grid, {Distribution(grid, {0.2, 0.3, 0.5}), Distribution::dirac(grid, 2)}, "cycle");

    const fs::path first = tmp.file("first.json");
    const fs::path second = tmp.file("second.json");
    write_regularity(first, reg);
    write_regularity(second, read_regularity(first));
    CHECK(read_text(first) == read_text(second));
    CHECK_FALSE(read_text(first).empty());
}

TEST_CASE("unreadable or invalid regularity files raise schema errors",
          "[json][regularity][file]") {
    const TempDir tmp;
    CHECK_THROWS_AS(read_regularity(tmp.file("missing.json")), Error);

    const fs::path garbled = tmp.file("garbled.json");
    write_text(garbled, "{ not json at all");
    CHECK_THROWS_AS(read_regularity(garbled), SchemaError);
}

// ============================================================================
// Scheme payloads
// ============================================================================

TEST_CASE("scheme payload builds the consequence matrix", "[json][scheme]") {
    const auto payload = nlohmann::json::parse(R"({
        "decisions": [{"u": 10.0, "p": 0.05}, {"u": 1.0, "p": 0.05}],
        "states": [0.04, 0.06]
    })");
    const DecisionScheme scheme = scheme_from_json(payload);
    REQUIRE(scheme.decisions().size() == 2);
    CHECK(scheme.at(0, 0) == Approx(-0.10).margin(1e-15));
    CHECK(scheme.at(0, 1) == Approx(0.10).margin(1e-15));
    CHECK(scheme.at(1, 0) == Approx(-0.01).margin(1e-15));
    CHECK(scheme.at(1, 1) == Approx(0.01).margin(1e-15));
}

TEST_CASE("scheme json rejects malformed payloads", "[json][scheme]") {
    const std::vector<std::string> bad{
        R"({"states": [0.04]})",                                    // no decisions
        R"({"decisions": [], "states": [0.04]})",                   // empty decisions
        R"({"decisions": [{"u": 1.0}], "states": [0.04]})",         // missing p
        R"({"decisions": [{"u": -1.0, "p": 0.0}], "states": [0.04]})",  // negative u
        R"({"decisions": [{"u": 1.0, "p": 0.0}]})",                 // missing states
    };
    for (const std::string& text : bad) {
        INFO(text);
        CHECK_THROWS_AS(scheme_from_json(nlohmann::json::parse(text)), Error);
    }
}

TEST_CASE("scheme files load through the reader", "[json][scheme][file]") {
    const TempDir tmp;
    const fs::path path = tmp.file("scheme.json");
    write_text(path, R"({
        "decisions": [{"u": 2.0, "p": 0.01}],
        "states": [-0.02, 0.03]
    })");
    const DecisionScheme scheme = read_scheme(path);
    CHECK(scheme.at(0, 0) == Approx(2.0 * (-0.02 - 0.01)).margin(1e-15));
    CHECK(scheme.at(0, 1) == Approx(2.0 * (0.03 - 0.01)).margin(1e-15));
}

// ============================================================================
// Chain payloads
// ============================================================================

TEST_CASE("chain payload nests a regularity as its primitive", "[json][chain]") {
    const auto payload = nlohmann::json::parse(R"({
        "levels": [{"u": 10.0, "p": 0.0}, {"u": 10.0, "p": 0.0}, {"u": 10.0, "p": 0.0}],
        "primitive": {
            "states": [-0.001, 0.002],
            "members": [[1.0, 0.0], [0.0, 1.0]]
        }
    })");
    const LeverageChain chain = chain_from_json(payload);
    CHECK(chain.depth() == 3);
    CHECK(see_through(chain) == 1000.0);
    CHECK(chain_criterion(chain, Attitude::averse) == Approx(-1.0).margin(1e-12));
}

TEST_CASE("chain json rejects malformed payloads", "[json][chain]") {
    const std::vector<std::string> bad{
        R"({"levels": []})",  // empty and missing primitive
        R"({"levels": [{"u": 1.0, "p": 0.0}]})",  // missing primitive
        R"({"levels": [{"u": 1.0}], "primitive": {"states": [0.0], "members": [[1.0]]}})",
        R"({"primitive": {"states": [0.0], "members": [[1.0]]}})",  // missing levels
    };
    for (const std::string& text : bad) {
        INFO(text);
        CHECK_THROWS_AS(chain_from_json(nlohmann::json::parse(text)), Error);
    }
}

// ============================================================================
// Sample CSV
// ============================================================================

TEST_CASE("sample csv skips comments and blank lines", "[json][csv]") {
    const TempDir tmp;
    const fs::path path = tmp.file("samples.csv");
    write_text(path, "# quarterly ROI\n0.04\n\n0.06  \n  0.05\n0.04 # repeat\n");
    const std::vector<double> samples = read_samples_csv(path);
    CHECK(samples == std::vector<double>{0.04, 0.06, 0.05, 0.04});
}

TEST_CASE("sample csv reports the offending line", "[json][csv]") {
    const TempDir tmp;
    const fs::path path = tmp.file("bad.csv");
    write_text(path, "0.04\npotato\n0.06\n");
    try {
        (void)read_samples_csv(path);
        FAIL("expected a schema error");
    } catch (const SchemaError& err) {
        CHECK(std::string(err.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("sample csv feeds the sliding-window builder end to end", "[json][csv]") {
    const TempDir tmp;
    const fs::path path = tmp.file("series.csv");
    write_text(path, "0.04\n0.04\n0.06\n0.06\n");
    const std::vector<double> samples = read_samples_csv(path);
    const Regularity reg = empirical_regularity(samples, 2, 2);
    REQUIRE(reg.size() == 2);
    CHECK(reg.members()[0].weights() == std::vector<double>{1.0, 0.0});
    CHECK(reg.members()[1].weights() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("missing sample csv raises an error", "[json][csv]") {
    const TempDir tmp;
    CHECK_THROWS_AS(read_samples_csv(tmp.file("absent.csv")), Error);
}

// ============================================================================
// Serialization determinism
// ============================================================================

TEST_CASE("serializing the same regularity twice is byte-identical", "[json][determinism]") {
    lt::Rng rng(808);
    const ThetaGrid grid(lt::random_states(rng, 3, 6, -0.1, 0.1));
    std::vector<Distribution> members;
    for (int k = 0; k < 3; ++k) {
        members.emplace_back(grid, lt::random_simplex(rng, grid.size()));
    }
    const Regularity reg(grid, members, "twice");
    CHECK(regularity_to_json(reg).dump() == regularity_to_json(reg).dump());

    const TempDir tmp;
    write_regularity(tmp.file("a.json"), reg);
    write_regularity(tmp.file("b.json"), reg);
    CHECK(read_text(tmp.file("a.json")) == read_text(tmp.file("b.json")));
}

TEST_CASE("values survive the json round-trip exactly", "[json][determinism]") {
    // Shortest-round-trip double formatting restores the same bits.
    lt::Rng rng(809);
    for (int trial = 0; trial < 20; ++trial) {
        const ThetaGrid grid(lt::random_states(rng, 2, 8, -0.3, 0.2));
        std::vector<Distribution> members;
        const std::size_t count = rng.count(1, 4);
        for (std::size_t k = 0; k < count; ++k) {
            members.emplace_back(grid, lt::random_simplex(rng, grid.size()));
        }
        const Regularity reg(grid, members);
        const Regularity back =
            regularity_from_json(nlohmann::json::parse(regularity_to_json(reg).dump()));
        CHECK(back.grid().states() == reg.grid().states());
        REQUIRE(back.size() == reg.size());
        for (std::size_t i = 0; i < reg.size(); ++i) {
            CHECK(back.members()[i].weights() == reg.members()[i].weights());
        }
    }
}
