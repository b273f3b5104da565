// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>

namespace levdec {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A constructor or operation argument violates its contract.
struct InvalidArgument : Error {
    using Error::Error;
};

/// empirical_regularity: the sample series is empty.
struct EmptySamples : Error {
    using Error::Error;
};

/// empirical_regularity: the window is longer than the sample series.
struct WindowTooLarge : Error {
    using Error::Error;
};

/// build_scheme: no decisions supplied.
struct EmptyDecisionSet : Error {
    using Error::Error;
};

/// Factored criterion evaluation requires non-negative leverage.
struct NegativeLeverage : Error {
    using Error::Error;
};

/// The closed-form optimizer cannot handle a criterion nonlinear in leverage.
struct UnsupportedCriterion : Error {
    using Error::Error;
};

/// A scenario file does not match its schema.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace levdec
