// SPDX-License-Identifier: MIT
//
// Return-on-capital algebra and the matrix decision scheme: capital
// structures, leverage/price decisions, and the consequence matrix linking
// decisions to ROI states.
#pragma once

#include "levdec/errors.hpp"
#include "levdec/regularity.hpp"

#include <vector>

namespace levdec {

// ============================================================================
// CapitalStructure: equity, debt and the three funding rates
// ============================================================================

/// Capital C > 0, borrowed B >= 0, finite rates. Amounts are abstract
/// positive reals; only ratios enter the return algebra.
class CapitalStructure {
public:
    CapitalStructure(double capital, double borrowed, double roi, double cof, double coc);

    [[nodiscard]] double capital() const noexcept { return capital_; }
    [[nodiscard]] double borrowed() const noexcept { return borrowed_; }
    [[nodiscard]] double assets() const noexcept { return capital_ + borrowed_; }
    [[nodiscard]] double roi() const noexcept { return roi_; }
    [[nodiscard]] double cof() const noexcept { return cof_; }
    [[nodiscard]] double coc() const noexcept { return coc_; }

private:
    double capital_;
    double borrowed_;
    double roi_;
    double cof_;
    double coc_;
};

/// Net return to equity after funding costs:
/// ((C+B)(1+roi) - B(1+cof) - C(1+coc)) / C.
[[nodiscard]] double roc_general(const CapitalStructure& cs) noexcept;

/// Leverage form of the return: lev * (roi - cost). Matches roc_general
/// exactly when cof == coc == cost.
[[nodiscard]] double roc_leverage_form(double leverage, double roi, double cost);

/// Full decomposition lev*roi - (lev-1)*cof - coc; agrees with roc_general
/// for mismatched funding costs and reduces to the leverage form when
/// cof == coc.
[[nodiscard]] double roc_decomposed(double leverage, double roi, double cof,
                                    double coc) noexcept;

/// Assets over capital, (C+B)/C; at least 1 for non-negative borrowing.
[[nodiscard]] double leverage_from_structure(const CapitalStructure& cs) noexcept;

// ============================================================================
// Decision: leverage u and price p
// ============================================================================

/// A point of the decision set R+ x R+: dimensionless leverage and a decimal
/// price rate, both non-negative and finite.
class Decision {
public:
    Decision(double leverage, double price);

    [[nodiscard]] double leverage() const noexcept { return leverage_; }
    [[nodiscard]] double price() const noexcept { return price_; }

private:
    double leverage_;
    double price_;
};

/// Return on capital in state theta under decision d: u * (theta - p).
/// The same function as roc_leverage_form under u = LEV, p = COST.
[[nodiscard]] inline double consequence(double theta, const Decision& d) noexcept {
    return d.leverage() * (theta - d.price());
}

// ============================================================================
// DecisionScheme: decisions x states consequence matrix
// ============================================================================

class DecisionScheme {
public:
    DecisionScheme(std::vector<Decision> decisions, ThetaGrid grid);

    [[nodiscard]] const std::vector<Decision>& decisions() const noexcept { return decisions_; }
    [[nodiscard]] const ThetaGrid& grid() const noexcept { return grid_; }

    /// Rows follow decision order, columns grid order.
    [[nodiscard]] const std::vector<std::vector<double>>& consequences() const noexcept {
        return consequences_;
    }
    [[nodiscard]] double at(std::size_t decision_index, std::size_t state_index) const {
        return consequences_.at(decision_index).at(state_index);
    }

private:
    std::vector<Decision> decisions_;
    ThetaGrid grid_;
    std::vector<std::vector<double>> consequences_;
};

/// Fills the consequence matrix via consequence(); input order is preserved.
[[nodiscard]] DecisionScheme build_scheme(std::vector<Decision> decisions, ThetaGrid grid);

}  // namespace levdec
