// SPDX-License-Identifier: MIT
//
// Criterion functionals over decisions for four decision-maker classes:
// expected utility against a single distribution, min-expectation for the
// uncertainty averse, max-expectation for the uncertainty prone, and the
// worst-state (Wald) rule for complete uncertainty.
#pragma once

#include "levdec/regularity.hpp"
#include "levdec/scheme.hpp"

#include <utility>
#include <variant>

namespace levdec {

/// Uncertainty attitude: evaluate by the worst or the best expectation over
/// the regularity.
enum class Attitude { averse, prone };

// ============================================================================
// Utility on consequences
// ============================================================================

/// Utility menu for the expected-value criterion: identity (risk neutral),
/// exponential (concave for alpha > 0, convex for alpha < 0) and power
/// (concave on gains for gamma < 1, convex for gamma > 1).
class Utility {
public:
    enum class Kind { identity, exponential, power };

    static Utility identity() { return Utility(Kind::identity, 0.0); }

    /// v(x) = (1 - exp(-alpha x)) / alpha, alpha != 0.
    static Utility exponential(double alpha);

    /// v(x) = sign(x) |x|^gamma, gamma > 0.
    static Utility power(double gamma);

    [[nodiscard]] double operator()(double consequence_value) const;

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double parameter() const noexcept { return parameter_; }
    [[nodiscard]] bool is_identity() const noexcept { return kind_ == Kind::identity; }

private:
    Utility(Kind kind, double parameter) : kind_(kind), parameter_(parameter) {}

    Kind kind_;
    double parameter_;
};

// ============================================================================
// Criterion variants
// ============================================================================

/// Expected utility of the consequence under one distribution; the utility
/// applies to consequences, not to states.
struct ExpectedUtility {
    Distribution dist;
    Utility utility;
};

/// Worst expected consequence over the regularity, identity utility.
struct UncertaintyAverse {
    Regularity regularity;
};

/// Best expected consequence over the regularity, identity utility.
struct UncertaintyProne {
    Regularity regularity;
};

/// Worst-state rule: u * (min state - p). Equivalent to UncertaintyAverse
/// over the all-Dirac family, at O(1) instead of O(|grid|^2).
struct Wald {
    ThetaGrid grid;
};

using Criterion = std::variant<ExpectedUtility, UncertaintyAverse, UncertaintyProne, Wald>;

/// Evaluates the criterion at decision d.
[[nodiscard]] double evaluate(const Criterion& criterion, const Decision& d);

/// Factored min/max form u * (extremal mean - p); equals the enumerated
/// criterion because non-negative leverage preserves the extremum.
[[nodiscard]] double evaluate_factored(const Regularity& regularity, const Decision& d,
                                       Attitude attitude = Attitude::averse);

/// Both sides of the complete-uncertainty degeneration: the averse criterion
/// over the all-Dirac family, and the worst-state rule. Equal by contract.
[[nodiscard]] std::pair<double, double> wald_is_dirac_limit(const ThetaGrid& grid,
                                                            const Decision& d);

}  // namespace levdec
