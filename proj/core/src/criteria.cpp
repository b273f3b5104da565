// SPDX-License-Identifier: MIT
#include "levdec/criteria.hpp"

#include <cmath>

namespace levdec {

namespace {

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};

}  // namespace

Utility Utility::exponential(double alpha) {
    if (!std::isfinite(alpha) || alpha == 0.0) {
        throw InvalidArgument("utility: exponential parameter must be finite and non-zero");
    }
    return Utility(Kind::exponential, alpha);
}

Utility Utility::power(double gamma) {
    if (!std::isfinite(gamma) || gamma <= 0.0) {
        throw InvalidArgument("utility: power parameter must be finite and positive");
    }
    return Utility(Kind::power, gamma);
}

double Utility::operator()(double consequence_value) const {
    switch (kind_) {
        case Kind::identity:
            return consequence_value;
        case Kind::exponential:
            return (1.0 - std::exp(-parameter_ * consequence_value)) / parameter_;
        case Kind::power:
            return std::copysign(std::pow(std::abs(consequence_value), parameter_),
                                 consequence_value);
    }
    return consequence_value;  // unreachable
}

double evaluate(const Criterion& criterion, const Decision& d) {
    return std::visit(
        Overload{
            [&](const ExpectedUtility& c) {
                return c.dist.expectation(
                    [&](double theta) { return c.utility(consequence(theta, d)); });
            },
            [&](const UncertaintyAverse& c) {
                return min_expectation(c.regularity,
                                       [&](double theta) { return consequence(theta, d); })
                    .value;
            },
            [&](const UncertaintyProne& c) {
                return max_expectation(c.regularity,
                                       [&](double theta) { return consequence(theta, d); })
                    .value;
            },
            [&](const Wald& c) { return consequence(c.grid.min_state(), d); },
        },
        criterion);
}

double evaluate_factored(const Regularity& regularity, const Decision& d, Attitude attitude) {
    if (d.leverage() < 0.0) {
        // Unreachable through the Decision invariant; kept for raw callers.
        throw NegativeLeverage("factored criterion: leverage must be non-negative");
    }
    const double extremal_mean = attitude == Attitude::averse
                                     ? min_expectation(regularity, std::identity{}).value
                                     : max_expectation(regularity, std::identity{}).value;
    return d.leverage() * (extremal_mean - d.price());
}

std::pair<double, double> wald_is_dirac_limit(const ThetaGrid& grid, const Decision& d) {
    const double enumerated = evaluate(Criterion{UncertaintyAverse{dirac_family(grid)}}, d);
    const double worst_state = evaluate(Criterion{Wald{grid}}, d);
    return {enumerated, worst_state};
}

}  // namespace levdec
