// SPDX-License-Identifier: MIT
#include "levdec/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

namespace levdec {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& context, const std::string& detail) {
    throw SchemaError(context + ": " + detail);
}

json parse_file(const std::filesystem::path& path, const char* context) {
    std::ifstream in(path);
    if (!in) {
        schema_fail(std::string(context), "cannot open '" + path.string() + "'");
    }
    json payload = json::parse(in, nullptr, false);
    if (payload.is_discarded()) {
        schema_fail(std::string(context), "'" + path.string() + "' is not valid JSON");
    }
    return payload;
}

std::vector<double> number_array(const json& node, const std::string& context,
                                 const std::string& field) {
    if (!node.is_array() || node.empty()) {
        schema_fail(context, "'" + field + "' must be a non-empty array of numbers");
    }
    std::vector<double> out;
    out.reserve(node.size());
    for (const auto& element : node) {
        if (!element.is_number()) {
            schema_fail(context, "'" + field + "' must contain only numbers");
        }
        out.push_back(element.get<double>());
    }
    return out;
}

std::vector<Decision> decision_array(const json& node, const std::string& context,
                                     const std::string& field) {
    if (!node.is_array() || node.empty()) {
        schema_fail(context, "'" + field + "' must be a non-empty array of {u, p} objects");
    }
    std::vector<Decision> out;
    out.reserve(node.size());
    for (const auto& element : node) {
        if (!element.is_object() || !element.contains("u") || !element.contains("p") ||
            !element["u"].is_number() || !element["p"].is_number()) {
            schema_fail(context, "'" + field + "' entries must be objects with numeric u and p");
        }
        try {
            out.emplace_back(element["u"].get<double>(), element["p"].get<double>());
        } catch (const Error& e) {
            schema_fail(context, e.what());
        }
    }
    return out;
}

}  // namespace

Regularity regularity_from_json(const json& payload) {
    const std::string context = "regularity file";
    if (!payload.is_object()) {
        schema_fail(context, "top level must be an object");
    }
    if (!payload.contains("states") || !payload.contains("members")) {
        schema_fail(context, "'states' and 'members' are required");
    }
    std::string label;
    if (payload.contains("label")) {
        if (!payload["label"].is_string()) {
            schema_fail(context, "'label' must be a string");
        }
        label = payload["label"].get<std::string>();
    }
    std::vector<double> states = number_array(payload["states"], context, "states");

    const json& member_rows = payload["members"];
    if (!member_rows.is_array() || member_rows.empty()) {
        schema_fail(context, "'members' must be a non-empty array of weight rows");
    }
    try {
        ThetaGrid grid(std::move(states));
        std::vector<Distribution> members;
        members.reserve(member_rows.size());
        for (const auto& row : member_rows) {
            members.emplace_back(grid, number_array(row, context, "members"));
        }
        return Regularity(std::move(grid), std::move(members), std::move(label));
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        schema_fail(context, e.what());
    }
}

json regularity_to_json(const Regularity& reg) {
    json payload;
    payload["states"] = reg.grid().states();
    json members = json::array();
    for (const Distribution& member : reg.members()) {
        members.push_back(member.weights());
    }
    payload["members"] = std::move(members);
    if (!reg.label().empty()) {
        payload["label"] = reg.label();
    }
    return payload;
}

Regularity read_regularity(const std::filesystem::path& path) {
    return regularity_from_json(parse_file(path, "regularity file"));
}

void write_regularity(const std::filesystem::path& path, const Regularity& reg) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << regularity_to_json(reg).dump(2) << '\n';
}

DecisionScheme scheme_from_json(const json& payload) {
    const std::string context = "scheme file";
    if (!payload.is_object() || !payload.contains("decisions") || !payload.contains("states")) {
        schema_fail(context, "'decisions' and 'states' are required");
    }
    std::vector<Decision> decisions = decision_array(payload["decisions"], context, "decisions");
    std::vector<double> states = number_array(payload["states"], context, "states");
    try {
        return build_scheme(std::move(decisions), ThetaGrid(std::move(states)));
    } catch (const Error& e) {
        schema_fail(context, e.what());
    }
}

DecisionScheme read_scheme(const std::filesystem::path& path) {
    return scheme_from_json(parse_file(path, "scheme file"));
}

LeverageChain chain_from_json(const json& payload) {
    const std::string context = "chain file";
    if (!payload.is_object() || !payload.contains("levels") || !payload.contains("primitive")) {
        schema_fail(context, "'levels' and 'primitive' are required");
    }
    std::vector<Decision> levels = decision_array(payload["levels"], context, "levels");
    Regularity primitive = regularity_from_json(payload["primitive"]);
    try {
        return LeverageChain(std::move(levels), std::move(primitive));
    } catch (const Error& e) {
        schema_fail(context, e.what());
    }
}

LeverageChain read_chain(const std::filesystem::path& path) {
    return chain_from_json(parse_file(path, "chain file"));
}

std::vector<double> read_samples_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw SchemaError("samples file: cannot open '" + path.string() + "'");
    }
    std::vector<double> samples;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(begin, end - begin + 1);

        double value = 0.0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
            std::ostringstream message;
            message << "samples file: line " << line_number << " is not a number: '" << token
                    << "'";
            throw SchemaError(message.str());
        }
        samples.push_back(value);
    }
    return samples;
}

}  // namespace levdec
