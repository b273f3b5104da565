// SPDX-License-Identifier: MIT
//
// Scenario file formats. All rates in files are decimals (0.06 means 6%);
// percent units exist only at the command-line boundary.
//
//   regularity: { "states": [..], "members": [[..], ..], "label"?: ".." }
//   scheme:     { "decisions": [{"u":..,"p":..}, ..], "states": [..] }
//   chain:      { "levels": [{"u":..,"p":..}, ..], "primitive": <regularity> }
//   samples:    CSV, one decimal ROI per line, '#' starts a comment
#pragma once

#include "levdec/chain.hpp"
#include "levdec/regularity.hpp"
#include "levdec/scheme.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <vector>

namespace levdec {

[[nodiscard]] Regularity regularity_from_json(const nlohmann::json& payload);
[[nodiscard]] nlohmann::json regularity_to_json(const Regularity& reg);
[[nodiscard]] Regularity read_regularity(const std::filesystem::path& path);
void write_regularity(const std::filesystem::path& path, const Regularity& reg);

[[nodiscard]] DecisionScheme scheme_from_json(const nlohmann::json& payload);
[[nodiscard]] DecisionScheme read_scheme(const std::filesystem::path& path);

[[nodiscard]] LeverageChain chain_from_json(const nlohmann::json& payload);
[[nodiscard]] LeverageChain read_chain(const std::filesystem::path& path);

/// Parses the sample CSV; empty lines and '#' comments are skipped.
[[nodiscard]] std::vector<double> read_samples_csv(const std::filesystem::path& path);

}  // namespace levdec
