// SPDX-License-Identifier: MIT
#include "levdec/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace levdec {

namespace {

/// Uniform double in [0, 1) from raw engine output; identical on every
/// platform, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

// ============================================================================
// ThetaGrid
// ============================================================================

ThetaGrid::ThetaGrid(std::vector<double> states) : states_(std::move(states)) {
    if (states_.empty()) {
        throw InvalidArgument("theta grid: states must be non-empty");
    }
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (!std::isfinite(states_[i])) {
            throw InvalidArgument("theta grid: states must be finite");
        }
        if (i > 0 && !(states_[i - 1] < states_[i])) {
            throw InvalidArgument("theta grid: states must be strictly increasing");
        }
    }
}

// ============================================================================
// Distribution
// ============================================================================

Distribution::Distribution(ThetaGrid grid, std::vector<double> weights)
    : grid_(std::move(grid)), weights_(std::move(weights)) {
    if (weights_.size() != grid_.size()) {
        throw InvalidArgument("distribution: one weight per state required");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidArgument("distribution: weights must be finite and non-negative");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kWeightSumRepairLimit) {
        throw InvalidArgument("distribution: weights must sum to one");
    }
    // Repair parse round-off only; a sum already within the invariant
    // tolerance stays untouched so files round-trip bit-faithfully.
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        for (double& w : weights_) w /= sum;
    }
}

Distribution Distribution::dirac(ThetaGrid grid, std::size_t state_index) {
    if (state_index >= grid.size()) {
        throw InvalidArgument("dirac: state index out of range");
    }
    std::vector<double> weights(grid.size(), 0.0);
    weights[state_index] = 1.0;
    return Distribution(std::move(grid), std::move(weights));
}

Distribution Distribution::uniform(ThetaGrid grid) {
    std::vector<double> weights(grid.size(), 1.0 / static_cast<double>(grid.size()));
    return Distribution(std::move(grid), std::move(weights));
}

bool same_member(const Distribution& a, const Distribution& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.weights()[i] - b.weights()[i]) > kMemberEqualityTolerance) return false;
    }
    return true;
}

// ============================================================================
// Regularity
// ============================================================================

Regularity::Regularity(ThetaGrid grid, std::vector<Distribution> members, std::string label)
    : grid_(std::move(grid)), label_(std::move(label)) {
    if (members.empty()) {
        throw InvalidArgument("regularity: member list must be non-empty");
    }
    members_.reserve(members.size());
    for (auto& member : members) {
        if (!(member.grid() == grid_)) {
            throw InvalidArgument("regularity: all members must share the grid");
        }
        const bool duplicate = std::any_of(
            members_.begin(), members_.end(),
            [&](const Distribution& kept) { return same_member(kept, member); });
        if (!duplicate) members_.push_back(std::move(member));
    }
}

// ============================================================================
// Builders
// ============================================================================

Regularity dirac_family(const ThetaGrid& grid) {
    std::vector<Distribution> members;
    members.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        members.push_back(Distribution::dirac(grid, i));
    }
    return Regularity(grid, std::move(members));
}

Regularity empirical_regularity(std::span<const double> samples, std::size_t window,
                                std::size_t stride, std::string label) {
    if (samples.empty()) {
        throw EmptySamples("empirical regularity: sample series is empty");
    }
    if (window == 0) {
        throw InvalidArgument("empirical regularity: window must be positive");
    }
    if (stride == 0) {
        throw InvalidArgument("empirical regularity: stride must be positive");
    }
    if (window > samples.size()) {
        throw WindowTooLarge("empirical regularity: window exceeds sample count");
    }

    std::vector<double> states(samples.begin(), samples.end());
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    ThetaGrid grid(std::move(states));

    const auto state_index = [&grid](double value) {
        const auto& s = grid.states();
        return static_cast<std::size_t>(
            std::lower_bound(s.begin(), s.end(), value) - s.begin());
    };

    std::vector<Distribution> members;
    for (std::size_t start = 0; start + window <= samples.size(); start += stride) {
        std::vector<double> weights(grid.size(), 0.0);
        for (std::size_t i = start; i < start + window; ++i) {
            weights[state_index(samples[i])] += 1.0;
        }
        for (double& w : weights) w /= static_cast<double>(window);
        members.emplace_back(grid, std::move(weights));
    }
    // Regularity collapses duplicate windows.
    return Regularity(std::move(grid), std::move(members), std::move(label));
}

Distribution convex_combination(const Regularity& reg, std::span<const double> coefficients) {
    const auto& members = reg.members();
    if (coefficients.size() != members.size()) {
        throw InvalidArgument("convex combination: one coefficient per member required");
    }
    for (double c : coefficients) {
        if (!std::isfinite(c) || c < 0.0) {
            throw InvalidArgument("convex combination: coefficients must be finite and non-negative");
        }
    }
    std::vector<double> weights(reg.grid().size(), 0.0);
    for (std::size_t k = 0; k < members.size(); ++k) {
        const auto& member_weights = members[k].weights();
        for (std::size_t j = 0; j < weights.size(); ++j) {
            weights[j] += coefficients[k] * member_weights[j];
        }
    }
    // The Distribution constructor enforces the simplex invariant; coefficient
    // sums off by more than the repair limit are rejected there.
    return Distribution(reg.grid(), std::move(weights));
}

std::vector<Distribution> convex_samples(const Regularity& reg, std::size_t count,
                                         std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    const std::size_t member_count = reg.members().size();
    std::vector<Distribution> out;
    out.reserve(count);
    std::vector<double> lambda(member_count);
    for (std::size_t c = 0; c < count; ++c) {
        double total = 0.0;
        for (std::size_t k = 0; k < member_count; ++k) {
            // Exp(1) draw; Dirichlet(1,...,1) after normalization.
            lambda[k] = -std::log1p(-uniform01(engine));
            total += lambda[k];
        }
        if (total > 0.0) {
            for (double& l : lambda) l /= total;
        } else {
            std::fill(lambda.begin(), lambda.end(),
                      1.0 / static_cast<double>(member_count));
        }
        out.push_back(convex_combination(reg, lambda));
    }
    return out;
}

}  // namespace levdec
