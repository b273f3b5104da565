// SPDX-License-Identifier: MIT
#include "levdec/chain.hpp"

#include <utility>

namespace levdec {

LeverageChain::LeverageChain(std::vector<Decision> levels, Regularity primitive)
    : levels_(std::move(levels)), primitive_(std::move(primitive)) {
    if (levels_.empty()) {
        throw InvalidArgument("leverage chain: at least one level required");
    }
}

double see_through(const LeverageChain& chain) noexcept {
    double product = 1.0;
    for (const Decision& level : chain.levels()) {
        product *= level.leverage();
    }
    return product;
}

double chain_consequence(double theta, const LeverageChain& chain) noexcept {
    double value = theta;
    const auto& levels = chain.levels();
    for (std::size_t i = levels.size(); i-- > 0;) {
        value = consequence(value, levels[i]);
    }
    return value;
}

double chain_criterion(const LeverageChain& chain, Attitude attitude) {
    const auto composed = [&](double theta) { return chain_consequence(theta, chain); };
    return attitude == Attitude::averse
               ? min_expectation(chain.primitive(), composed).value
               : max_expectation(chain.primitive(), composed).value;
}

}  // namespace levdec
