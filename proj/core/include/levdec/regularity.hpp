// SPDX-License-Identifier: MIT
//
// State space, probability distributions and statistical regularities.
//
// A statistical regularity is a finite family of probability vectors over one
// finite grid of ROI states. Criterion values over a regularity are linear in
// the member distribution, so min/max over any closed family is attained at a
// generator; storing the generators is enough.
#pragma once

#include "levdec/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace levdec {

/// Absolute tolerance on the weights-sum-to-one invariant.
inline constexpr double kWeightSumTolerance = 1e-12;

/// Constructors renormalize weight vectors whose sum is off by at most this
/// much and reject anything worse.
inline constexpr double kWeightSumRepairLimit = 1e-9;

/// Element-wise tolerance under which two weight vectors count as the same
/// regularity member.
inline constexpr double kMemberEqualityTolerance = 1e-12;

// ============================================================================
// ThetaGrid: ordered finite set of ROI states
// ============================================================================

/// Finite, strictly increasing set of ROI states in decimal rate units
/// (0.06 means 6%).
class ThetaGrid {
public:
    /// States must be non-empty, finite and strictly increasing.
    explicit ThetaGrid(std::vector<double> states);

    [[nodiscard]] const std::vector<double>& states() const noexcept { return states_; }
    [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }
    [[nodiscard]] double min_state() const noexcept { return states_.front(); }
    [[nodiscard]] double max_state() const noexcept { return states_.back(); }

    friend bool operator==(const ThetaGrid&, const ThetaGrid&) = default;

private:
    std::vector<double> states_;
};

// ============================================================================
// Distribution: probability vector over a grid
// ============================================================================

class Distribution {
public:
    /// Weights must be non-negative with one entry per state. Sums within
    /// kWeightSumRepairLimit of one are renormalized; worse sums are rejected.
    Distribution(ThetaGrid grid, std::vector<double> weights);

    /// Point mass on the state at `state_index`.
    static Distribution dirac(ThetaGrid grid, std::size_t state_index);

    /// Equal weight on every state.
    static Distribution uniform(ThetaGrid grid);

    [[nodiscard]] const ThetaGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }
    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }

    /// Exact finite weighted sum of f over the states; no sampling involved.
    template <typename F>
    [[nodiscard]] double expectation(F&& f) const {
        double acc = 0.0;
        const auto& states = grid_.states();
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            acc += weights_[i] * f(states[i]);
        }
        return acc;
    }

    /// Expected state: expectation of the identity.
    [[nodiscard]] double mean() const { return expectation(std::identity{}); }

private:
    ThetaGrid grid_;
    std::vector<double> weights_;
};

/// True when the weight vectors agree element-wise within
/// kMemberEqualityTolerance. Both must live on the same grid.
[[nodiscard]] bool same_member(const Distribution& a, const Distribution& b);

// ============================================================================
// Regularity: finite family of distributions on one grid
// ============================================================================

class Regularity {
public:
    /// Members must be non-empty and share the grid. Duplicate members
    /// (element-wise within kMemberEqualityTolerance) collapse to the first
    /// occurrence, so the stored family is duplicate-free by construction.
    Regularity(ThetaGrid grid, std::vector<Distribution> members, std::string label = {});

    [[nodiscard]] const ThetaGrid& grid() const noexcept { return grid_; }
    [[nodiscard]] const std::vector<Distribution>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] const std::string& label() const noexcept { return label_; }

private:
    ThetaGrid grid_;
    std::vector<Distribution> members_;
    std::string label_;
};

/// Extremal expectation over a regularity: the value and the first member
/// index attaining it.
struct ExtremalExpectation {
    double value;
    std::size_t member_index;
};

/// Minimum of expectation(member, f) over the family; ties resolve to the
/// first member in list order.
template <typename F>
[[nodiscard]] ExtremalExpectation min_expectation(const Regularity& reg, F&& f) {
    const auto& members = reg.members();
    ExtremalExpectation best{members.front().expectation(f), 0};
    for (std::size_t i = 1; i < members.size(); ++i) {
        const double value = members[i].expectation(f);
        if (value < best.value) best = {value, i};
    }
    return best;
}

/// Mirror of min_expectation with max.
template <typename F>
[[nodiscard]] ExtremalExpectation max_expectation(const Regularity& reg, F&& f) {
    const auto& members = reg.members();
    ExtremalExpectation best{members.front().expectation(f), 0};
    for (std::size_t i = 1; i < members.size(); ++i) {
        const double value = members[i].expectation(f);
        if (value > best.value) best = {value, i};
    }
    return best;
}

// ============================================================================
// Builders
// ============================================================================

/// All Dirac distributions on the grid, in grid order: complete uncertainty
/// on a finite grid.
[[nodiscard]] Regularity dirac_family(const ThetaGrid& grid);

/// Sliding-window relative-frequency family over an ROI sample series.
/// The grid is the sorted distinct sample values; one member per window
/// position (start 0, then stride, ... while the window fits), duplicates
/// collapsed.
[[nodiscard]] Regularity empirical_regularity(std::span<const double> samples,
                                              std::size_t window, std::size_t stride,
                                              std::string label = {});

/// Mixture of the family's members with the given non-negative coefficients
/// (renormalized under the same rule as Distribution weights).
[[nodiscard]] Distribution convex_combination(const Regularity& reg,
                                              std::span<const double> coefficients);

/// `count` random convex combinations of the members, deterministic in `seed`.
/// Mixing weights are Dirichlet(1,...,1) draws built from raw mt19937_64
/// output, so results are identical across platforms.
[[nodiscard]] std::vector<Distribution> convex_samples(const Regularity& reg,
                                                       std::size_t count, std::uint64_t seed);

}  // namespace levdec
