// SPDX-License-Identifier: MIT
//
// levdec: command-line front end for the leverage decision library.
//
// Subcommands: roc, eval, optimize, chain, scheme, regularity build.
// Rate flags (--roi, --cof, --coc, --price) take percent at this boundary
// (--roi 6 means 6%); scenario files and JSON output store decimals.
// Exit codes: 0 success, 2 input error, 3 semantic misuse.
#include "levdec/chain.hpp"
#include "levdec/criteria.hpp"
#include "levdec/json_io.hpp"
#include "levdec/optimizer.hpp"
#include "levdec/regularity.hpp"
#include "levdec/scheme.hpp"
#include "levdec/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <array>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitMisuse = 3;

/// Flag combinations that are individually valid but jointly meaningless.
struct MisuseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flag values the parser accepts but the domain rejects.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest decimal string that round-trips the value.
std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

/// Fixed 4-decimal percent display, e.g. 0.1 -> "10.0000%".
std::string format_percent(double decimal) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.4f%%", decimal * 100.0);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

double percent_to_decimal(double percent) { return percent / 100.0; }

void print_json(const nlohmann::json& payload) { std::cout << payload.dump() << '\n'; }

/// Parses --utility: "identity", "exp:ALPHA" or "pow:GAMMA".
levdec::Utility parse_utility(const std::string& text) {
    if (text == "identity") return levdec::Utility::identity();
    const auto parse_param = [&](std::string_view prefix) {
        const std::string body = text.substr(prefix.size());
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
        if (ec != std::errc{} || ptr != body.data() + body.size()) {
            throw UsageError("--utility: cannot parse parameter in '" + text + "'");
        }
        return value;
    };
    if (text.rfind("exp:", 0) == 0) return levdec::Utility::exponential(parse_param("exp:"));
    if (text.rfind("pow:", 0) == 0) return levdec::Utility::power(parse_param("pow:"));
    throw UsageError("--utility: expected identity, exp:ALPHA or pow:GAMMA, got '" + text + "'");
}

/// Builds the criterion selected by --criterion over the loaded regularity.
levdec::Criterion make_criterion(const std::string& name, const levdec::Regularity& reg,
                                 const levdec::Utility& utility, std::size_t dist_index) {
    if (name == "averse") return levdec::UncertaintyAverse{reg};
    if (name == "prone") return levdec::UncertaintyProne{reg};
    if (name == "wald") return levdec::Wald{reg.grid()};
    if (name == "expected") {
        if (dist_index >= reg.size()) {
            throw UsageError("--dist: index " + std::to_string(dist_index) +
                             " out of range for a family of " + std::to_string(reg.size()) +
                             " members");
        }
        return levdec::ExpectedUtility{reg.members()[dist_index], utility};
    }
    throw UsageError("--criterion: unknown kind '" + name + "'");
}

// ============================================================================
// Subcommand handlers
// ============================================================================

struct GlobalFlags {
    bool json = false;
    bool quiet = false;
};

struct RocArgs {
    double capital = 0.0;
    double borrowed = 0.0;
    double roi_pct = 0.0;
    double cof_pct = 0.0;
    double coc_pct = 0.0;
};

int run_roc(const RocArgs& args, const GlobalFlags& flags) {
    if (!(args.capital > 0.0)) throw UsageError("--capital must be positive");
    if (args.borrowed < 0.0) throw UsageError("--borrowed must be non-negative");

    const levdec::CapitalStructure cs(args.capital, args.borrowed,
                                      percent_to_decimal(args.roi_pct),
                                      percent_to_decimal(args.cof_pct),
                                      percent_to_decimal(args.coc_pct));
    const double lev = levdec::leverage_from_structure(cs);
    const double general = levdec::roc_general(cs);
    const double via_leverage = levdec::roc_decomposed(lev, cs.roi(), cs.cof(), cs.coc());

    if (flags.json) {
        print_json({{"borrowed", cs.borrowed()},
                    {"capital", cs.capital()},
                    {"coc", cs.coc()},
                    {"cof", cs.cof()},
                    {"leverage", lev},
                    {"roc_general", general},
                    {"roc_leverage_form", via_leverage},
                    {"roi", cs.roi()}});
    } else if (flags.quiet) {
        std::cout << format_double(general) << '\n';
    } else {
        std::cout << "leverage             " << format_double(lev) << '\n'
                  << "roc (balance sheet)  " << format_percent(general) << '\n'
                  << "roc (leverage form)  " << format_percent(via_leverage) << '\n';
    }
    return kExitOk;
}

struct EvalArgs {
    std::string regularity_path;
    double u = 0.0;
    double price_pct = 0.0;
    std::string criterion = "averse";
    std::string utility = "identity";
    std::size_t dist_index = 0;
    bool utility_given = false;
    bool dist_given = false;
};

int run_eval(const EvalArgs& args, const GlobalFlags& flags) {
    if ((args.utility_given || args.dist_given) && args.criterion != "expected") {
        throw MisuseError("--utility/--dist apply only to --criterion expected");
    }
    const levdec::Regularity reg = levdec::read_regularity(args.regularity_path);
    const levdec::Utility utility = parse_utility(args.utility);
    const levdec::Criterion criterion =
        make_criterion(args.criterion, reg, utility, args.dist_index);
    const double price = percent_to_decimal(args.price_pct);
    const double value = levdec::evaluate(criterion, levdec::Decision(args.u, price));

    if (flags.json) {
        print_json({{"criterion", args.criterion}, {"p", price}, {"u", args.u},
                    {"value", value}});
    } else if (flags.quiet) {
        std::cout << format_double(value) << '\n';
    } else {
        std::cout << "criterion  " << args.criterion << '\n'
                  << "u          " << format_double(args.u) << '\n'
                  << "p          " << format_double(price) << '\n'
                  << "value      " << format_double(value) << '\n';
    }
    return kExitOk;
}

struct OptimizeArgs {
    std::string regularity_path;
    double u_min = 0.0;
    double u_max = 0.0;
    double price_pct = 0.0;
    std::string criterion = "averse";
    std::string utility = "identity";
    std::size_t dist_index = 0;
    std::size_t grid_steps = 0;
    bool utility_given = false;
    bool dist_given = false;
    bool grid_given = false;
};

int run_optimize(const OptimizeArgs& args, const GlobalFlags& flags) {
    if ((args.utility_given || args.dist_given) && args.criterion != "expected") {
        throw MisuseError("--utility/--dist apply only to --criterion expected");
    }
    const levdec::Regularity reg = levdec::read_regularity(args.regularity_path);
    const levdec::Utility utility = parse_utility(args.utility);
    const levdec::Criterion criterion =
        make_criterion(args.criterion, reg, utility, args.dist_index);
    const levdec::LeverageWindow window(args.u_min, args.u_max,
                                        percent_to_decimal(args.price_pct));

    const levdec::OptimizationOutcome outcome =
        args.grid_given ? levdec::grid_optimize(criterion, window, args.grid_steps)
                        : levdec::optimize(criterion, window);

    if (flags.json) {
        print_json({{"best_u", outcome.best.leverage()},
                    {"best_value", outcome.value},
                    {"edge_case", std::string(levdec::to_string(outcome.edge_case))}});
    } else if (flags.quiet) {
        std::cout << format_double(outcome.best.leverage()) << '\n';
    } else {
        std::cout << "best_u      " << format_double(outcome.best.leverage()) << '\n'
                  << "best_value  " << format_double(outcome.value) << '\n'
                  << "edge_case   " << levdec::to_string(outcome.edge_case) << '\n';
    }
    return kExitOk;
}

int run_chain(const std::string& chain_path, const GlobalFlags& flags) {
    const levdec::LeverageChain chain = levdec::read_chain(chain_path);
    const double lev = levdec::see_through(chain);
    const double averse = levdec::chain_criterion(chain, levdec::Attitude::averse);
    const double prone = levdec::chain_criterion(chain, levdec::Attitude::prone);

    if (flags.json) {
        print_json({{"averse_value", averse}, {"prone_value", prone}, {"see_through", lev}});
    } else if (flags.quiet) {
        std::cout << format_double(lev) << '\n';
    } else {
        std::cout << "see_through   " << format_double(lev) << '\n'
                  << "averse_value  " << format_double(averse) << '\n'
                  << "prone_value   " << format_double(prone) << '\n';
    }
    return kExitOk;
}

/// Consequence matrix as CSV: one row per decision labelled by its (u, p)
/// pair, one column per state.
int run_scheme(const std::string& scheme_path) {
    const levdec::DecisionScheme scheme = levdec::read_scheme(scheme_path);
    std::cout << "u,p";
    for (double theta : scheme.grid().states()) std::cout << ',' << format_double(theta);
    std::cout << '\n';
    for (std::size_t i = 0; i < scheme.decisions().size(); ++i) {
        const levdec::Decision& d = scheme.decisions()[i];
        std::cout << format_double(d.leverage()) << ',' << format_double(d.price());
        for (std::size_t j = 0; j < scheme.grid().size(); ++j) {
            std::cout << ',' << format_double(scheme.at(i, j));
        }
        std::cout << '\n';
    }
    return kExitOk;
}

struct BuildArgs {
    std::string samples_path;
    std::size_t window = 0;
    std::size_t stride = 1;
    std::string out_path;
};

int run_regularity_build(const BuildArgs& args, const GlobalFlags& flags) {
    const std::vector<double> samples = levdec::read_samples_csv(args.samples_path);
    const levdec::Regularity reg =
        levdec::empirical_regularity(samples, args.window, args.stride);
    levdec::write_regularity(args.out_path, reg);

    if (flags.json) {
        print_json({{"members", reg.size()},
                    {"out", args.out_path},
                    {"states", reg.grid().size()}});
    } else if (flags.quiet) {
        std::cout << reg.size() << '\n';
    } else {
        std::cout << "members  " << reg.size() << '\n'
                  << "states   " << reg.grid().size() << '\n'
                  << "out      " << args.out_path << '\n';
    }
    return kExitOk;
}

}  // namespace

// ============================================================================
// Entry point
// ============================================================================

int main(int argc, char** argv) {
    CLI::App app{"Decision-theoretic leverage analysis over statistical regularities"};
    app.set_version_flag("--version", std::string(levdec::kVersionString));
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "Emit machine-readable JSON on stdout");
    app.add_flag("--quiet", flags.quiet, "Print only the headline value");

    // --- roc ---------------------------------------------------------------
    RocArgs roc_args;
    CLI::App* roc_cmd = app.add_subcommand(
        "roc", "Return on capital for an explicit capital structure");
    roc_cmd->fallthrough();
    roc_cmd->add_option("--capital", roc_args.capital, "Own capital C (amount, > 0)")
        ->required();
    roc_cmd->add_option("--borrowed", roc_args.borrowed, "Borrowed funds B (amount, >= 0)")
        ->required();
    roc_cmd->add_option("--roi", roc_args.roi_pct, "Return on investment, percent")->required();
    roc_cmd->add_option("--cof", roc_args.cof_pct, "Cost of borrowed funds, percent");
    roc_cmd->add_option("--coc", roc_args.coc_pct, "Cost of own capital, percent");

    // --- eval --------------------------------------------------------------
    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Evaluate a criterion at a fixed leverage and price");
    eval_cmd->fallthrough();
    eval_cmd->add_option("--regularity", eval_args.regularity_path, "Regularity JSON file")
        ->required();
    eval_cmd->add_option("--u", eval_args.u, "Leverage multiplier (dimensionless)")->required();
    eval_cmd->add_option("--price", eval_args.price_pct, "Price of leverage, percent")
        ->required();
    eval_cmd->add_option("--criterion", eval_args.criterion, "averse|prone|wald|expected")
        ->required()
        ->check(CLI::IsMember({"averse", "prone", "wald", "expected"}));
    CLI::Option* eval_utility =
        eval_cmd->add_option("--utility", eval_args.utility,
                             "identity|exp:ALPHA|pow:GAMMA (expected only)");
    CLI::Option* eval_dist = eval_cmd->add_option(
        "--dist", eval_args.dist_index, "Member index used by expected (default 0)");

    // --- optimize ----------------------------------------------------------
    OptimizeArgs opt_args;
    CLI::App* opt_cmd = app.add_subcommand(
        "optimize", "Best leverage over a window at a fixed price");
    opt_cmd->fallthrough();
    opt_cmd->add_option("--regularity", opt_args.regularity_path, "Regularity JSON file")
        ->required();
    opt_cmd->add_option("--u-min", opt_args.u_min, "Lower leverage bound")->required();
    opt_cmd->add_option("--u-max", opt_args.u_max, "Upper leverage bound")->required();
    opt_cmd->add_option("--price", opt_args.price_pct, "Price of leverage, percent")
        ->required();
    opt_cmd->add_option("--criterion", opt_args.criterion, "averse|prone|wald|expected")
        ->required()
        ->check(CLI::IsMember({"averse", "prone", "wald", "expected"}));
    CLI::Option* opt_utility =
        opt_cmd->add_option("--utility", opt_args.utility,
                            "identity|exp:ALPHA|pow:GAMMA (expected only)");
    CLI::Option* opt_dist = opt_cmd->add_option(
        "--dist", opt_args.dist_index, "Member index used by expected (default 0)");
    CLI::Option* opt_grid = opt_cmd->add_option(
        "--grid-steps", opt_args.grid_steps, "Force the grid search with this many steps");

    // --- chain -------------------------------------------------------------
    std::string chain_path;
    CLI::App* chain_cmd = app.add_subcommand(
        "chain", "See-through leverage and criterion values for a leverage chain");
    chain_cmd->fallthrough();
    chain_cmd->add_option("--chain", chain_path, "Chain JSON file")->required();

    // --- scheme ------------------------------------------------------------
    std::string scheme_path;
    CLI::App* scheme_cmd = app.add_subcommand(
        "scheme", "Print the consequence matrix of a decision scheme as CSV");
    scheme_cmd->fallthrough();
    scheme_cmd->add_option("--scheme", scheme_path, "Scheme JSON file")->required();

    // --- regularity build --------------------------------------------------
    BuildArgs build_args;
    CLI::App* reg_cmd = app.add_subcommand(
        "regularity", "Regularity file utilities");
    reg_cmd->fallthrough();
    reg_cmd->require_subcommand(1);
    CLI::App* build_cmd = reg_cmd->add_subcommand(
        "build", "Sliding-window empirical regularity from a sample CSV");
    build_cmd->fallthrough();
    build_cmd->add_option("--samples", build_args.samples_path, "CSV of decimal ROI samples")
        ->required();
    build_cmd->add_option("--window", build_args.window, "Window length in samples")
        ->required();
    build_cmd->add_option("--stride", build_args.stride, "Window step (default 1)");
    build_cmd->add_option("--out", build_args.out_path, "Output regularity JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    eval_args.utility_given = eval_utility->count() > 0;
    eval_args.dist_given = eval_dist->count() > 0;
    opt_args.utility_given = opt_utility->count() > 0;
    opt_args.dist_given = opt_dist->count() > 0;
    opt_args.grid_given = opt_grid->count() > 0;

    try {
        if (roc_cmd->parsed()) return run_roc(roc_args, flags);
        if (eval_cmd->parsed()) return run_eval(eval_args, flags);
        if (opt_cmd->parsed()) return run_optimize(opt_args, flags);
        if (chain_cmd->parsed()) return run_chain(chain_path, flags);
        if (scheme_cmd->parsed()) return run_scheme(scheme_path);
        if (build_cmd->parsed()) return run_regularity_build(build_args, flags);
    } catch (const MisuseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMisuse;
    } catch (const levdec::UnsupportedCriterion& e) {
        std::cerr << "error: " << e.what()
                  << " (pass --grid-steps to use the grid search)\n";
        return kExitMisuse;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const levdec::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitInputError;
}
