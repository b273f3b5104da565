// SPDX-License-Identifier: MIT
//
// Consecutive leverage: a stack of leveraged vehicles where each level's
// return feeds the next. The see-through leverage is the product of the
// per-level leverages, and the chain criterion evaluates the composed return
// against the regularity of the innermost (primitive) variable.
#pragma once

#include "levdec/criteria.hpp"
#include "levdec/regularity.hpp"
#include "levdec/scheme.hpp"

#include <vector>

namespace levdec {

/// Per-level decisions, outermost (investor-facing) first, plus the
/// regularity of the primitive variable on the innermost grid.
class LeverageChain {
public:
    LeverageChain(std::vector<Decision> levels, Regularity primitive);

    [[nodiscard]] const std::vector<Decision>& levels() const noexcept { return levels_; }
    [[nodiscard]] const Regularity& primitive() const noexcept { return primitive_; }
    [[nodiscard]] std::size_t depth() const noexcept { return levels_.size(); }

private:
    std::vector<Decision> levels_;
    Regularity primitive_;
};

/// Product of the per-level leverages: the sensitivity of the outermost
/// return to the primitive variable.
[[nodiscard]] double see_through(const LeverageChain& chain) noexcept;

/// Outermost return for a primitive value, by inward-out recursion
/// x <- u_i * (x - p_i). With all spreads zero this equals
/// see_through(chain) * theta exactly.
[[nodiscard]] double chain_consequence(double theta, const LeverageChain& chain) noexcept;

/// Extremal expected outermost return over the primitive regularity:
/// min for averse, max for prone.
[[nodiscard]] double chain_criterion(const LeverageChain& chain, Attitude attitude);

}  // namespace levdec
