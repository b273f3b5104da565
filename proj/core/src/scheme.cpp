// SPDX-License-Identifier: MIT
#include "levdec/scheme.hpp"

#include <cmath>
#include <utility>

namespace levdec {

CapitalStructure::CapitalStructure(double capital, double borrowed, double roi, double cof,
                                   double coc)
    : capital_(capital), borrowed_(borrowed), roi_(roi), cof_(cof), coc_(coc) {
    if (!std::isfinite(capital_) || capital_ <= 0.0) {
        throw InvalidArgument("capital structure: capital must be positive");
    }
    if (!std::isfinite(borrowed_) || borrowed_ < 0.0) {
        throw InvalidArgument("capital structure: borrowed funds must be non-negative");
    }
    if (!std::isfinite(roi_) || !std::isfinite(cof_) || !std::isfinite(coc_)) {
        throw InvalidArgument("capital structure: rates must be finite");
    }
}

double roc_general(const CapitalStructure& cs) noexcept {
    const double assets_return = cs.assets() * (1.0 + cs.roi());
    const double funding_cost = cs.borrowed() * (1.0 + cs.cof());
    const double capital_cost = cs.capital() * (1.0 + cs.coc());
    return (assets_return - funding_cost - capital_cost) / cs.capital();
}

double roc_leverage_form(double leverage, double roi, double cost) {
    if (!std::isfinite(leverage) || leverage < 0.0) {
        throw InvalidArgument("leverage form: leverage must be non-negative");
    }
    return leverage * (roi - cost);
}

double roc_decomposed(double leverage, double roi, double cof, double coc) noexcept {
    return leverage * roi - (leverage - 1.0) * cof - coc;
}

double leverage_from_structure(const CapitalStructure& cs) noexcept {
    return cs.assets() / cs.capital();
}

Decision::Decision(double leverage, double price) : leverage_(leverage), price_(price) {
    if (!std::isfinite(leverage_)) {
        throw InvalidArgument("decision: leverage must be finite");
    }
    if (leverage_ < 0.0) {
        throw NegativeLeverage("decision: leverage must be non-negative");
    }
    if (!std::isfinite(price_) || price_ < 0.0) {
        throw InvalidArgument("decision: price must be non-negative");
    }
}

DecisionScheme::DecisionScheme(std::vector<Decision> decisions, ThetaGrid grid)
    : decisions_(std::move(decisions)), grid_(std::move(grid)) {
    if (decisions_.empty()) {
        throw EmptyDecisionSet("decision scheme: decision set must be non-empty");
    }
    consequences_.reserve(decisions_.size());
    for (const Decision& d : decisions_) {
        std::vector<double> row;
        row.reserve(grid_.size());
        for (double theta : grid_.states()) {
            row.push_back(consequence(theta, d));
        }
        consequences_.push_back(std::move(row));
    }
}

DecisionScheme build_scheme(std::vector<Decision> decisions, ThetaGrid grid) {
    return DecisionScheme(std::move(decisions), std::move(grid));
}

}  // namespace levdec
