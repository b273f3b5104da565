// SPDX-License-Identifier: MIT
//
// Optimal leverage at a fixed price over a compact window. Criteria linear
// in leverage have analytic boundary optima; a grid search covers the rest
// and doubles as an oracle for the closed form.
#pragma once

#include "levdec/criteria.hpp"

#include <cstddef>
#include <string_view>

namespace levdec {

/// |effective mean - price| at or below this counts as a flat criterion.
inline constexpr double kFlatTolerance = 1e-12;

/// Compact leverage interval [u_min, u_max] searched at a fixed price.
class LeverageWindow {
public:
    LeverageWindow(double u_min, double u_max, double price);

    [[nodiscard]] double u_min() const noexcept { return u_min_; }
    [[nodiscard]] double u_max() const noexcept { return u_max_; }
    [[nodiscard]] double price() const noexcept { return price_; }

private:
    double u_min_;
    double u_max_;
    double price_;
};

/// Where the optimum sits relative to the window.
enum class EdgeCase { interior_tie, lower_bound, upper_bound, flat };

[[nodiscard]] std::string_view to_string(EdgeCase edge_case) noexcept;

struct OptimizationOutcome {
    Decision best;
    double value;
    EdgeCase edge_case;
};

/// Analytic optimum for criteria linear in leverage (averse, prone, Wald and
/// expected with identity utility): u_max when the effective mean exceeds the
/// price, u_min when it falls short, u_min with a flat flag at a tie.
/// Throws UnsupportedCriterion for expected criteria with non-identity
/// utility; use grid_optimize for those.
[[nodiscard]] OptimizationOutcome optimize(const Criterion& criterion,
                                           const LeverageWindow& window);

/// Brute-force search over `steps` equispaced leverages including both
/// endpoints; ties resolve to the smallest leverage. Handles every criterion.
[[nodiscard]] OptimizationOutcome grid_optimize(const Criterion& criterion,
                                                const LeverageWindow& window,
                                                std::size_t steps);

}  // namespace levdec
