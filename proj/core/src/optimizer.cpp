// SPDX-License-Identifier: MIT
#include "levdec/optimizer.hpp"

#include <cmath>
#include <functional>

namespace levdec {

namespace {

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};

/// Effective expectation m such that the criterion equals u * (m - p).
double effective_mean(const Criterion& criterion) {
    return std::visit(
        Overload{
            [](const ExpectedUtility& c) {
                if (!c.utility.is_identity()) {
                    throw UnsupportedCriterion(
                        "optimize: expected criterion with non-identity utility is not "
                        "linear in leverage; use grid_optimize");
                }
                return c.dist.mean();
            },
            [](const UncertaintyAverse& c) {
                return min_expectation(c.regularity, std::identity{}).value;
            },
            [](const UncertaintyProne& c) {
                return max_expectation(c.regularity, std::identity{}).value;
            },
            [](const Wald& c) { return c.grid.min_state(); },
        },
        criterion);
}

}  // namespace

LeverageWindow::LeverageWindow(double u_min, double u_max, double price)
    : u_min_(u_min), u_max_(u_max), price_(price) {
    if (!std::isfinite(u_min_) || !std::isfinite(u_max_) || u_min_ < 0.0 || u_max_ < u_min_) {
        throw InvalidArgument("leverage window: need 0 <= u_min <= u_max < infinity");
    }
    if (!std::isfinite(price_) || price_ < 0.0) {
        throw InvalidArgument("leverage window: price must be non-negative");
    }
}

std::string_view to_string(EdgeCase edge_case) noexcept {
    switch (edge_case) {
        case EdgeCase::interior_tie: return "interior_tie";
        case EdgeCase::lower_bound: return "lower_bound";
        case EdgeCase::upper_bound: return "upper_bound";
        case EdgeCase::flat: return "flat";
    }
    return "unknown";
}

OptimizationOutcome optimize(const Criterion& criterion, const LeverageWindow& window) {
    const double mean = effective_mean(criterion);
    double best_u = window.u_min();
    EdgeCase edge = EdgeCase::lower_bound;
    if (std::abs(mean - window.price()) <= kFlatTolerance) {
        edge = EdgeCase::flat;
    } else if (mean > window.price()) {
        best_u = window.u_max();
        edge = EdgeCase::upper_bound;
    }
    const Decision best(best_u, window.price());
    return {best, evaluate(criterion, best), edge};
}

OptimizationOutcome grid_optimize(const Criterion& criterion, const LeverageWindow& window,
                                  std::size_t steps) {
    if (steps < 2) {
        throw InvalidArgument("grid_optimize: at least two steps required");
    }
    const double span = window.u_max() - window.u_min();
    const double denom = static_cast<double>(steps - 1);

    std::size_t best_index = 0;
    Decision best(window.u_min(), window.price());
    double best_value = evaluate(criterion, best);
    for (std::size_t k = 1; k < steps; ++k) {
        const double u = k + 1 == steps
                             ? window.u_max()
                             : window.u_min() + span * (static_cast<double>(k) / denom);
        const Decision candidate(u, window.price());
        const double value = evaluate(criterion, candidate);
        if (value > best_value) {
            best_value = value;
            best = candidate;
            best_index = k;
        }
    }

    EdgeCase edge = EdgeCase::interior_tie;
    if (best_index == 0) {
        edge = EdgeCase::lower_bound;
    } else if (best_index + 1 == steps) {
        edge = EdgeCase::upper_bound;
    }
    return {best, best_value, edge};
}

}  // namespace levdec
