// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_ERRORS_HPP
#define MFPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfpp {

/// Invalid argument values (non-positive parameters, NaN inputs, ...).
struct InvalidParams : std::invalid_argument {
    explicit InvalidParams(const std::string& what) : std::invalid_argument(what) {}
};

/// A series or iteration hit its term cap before reaching tolerance.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A formula was requested in a regime where it is undefined
/// (e.g. an asymptote whose required weight is zero).
struct DegenerateRegime : std::domain_error {
    explicit DegenerateRegime(const std::string& what) : std::domain_error(what) {}
};

/// Argument outside the mathematical domain of the function.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Subordinator walk exceeded its operational-time cap before crossing.
struct SCapExceeded : std::runtime_error {
    explicit SCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A required observation time is missing from the simulation grid.
struct GridMismatch : std::invalid_argument {
    explicit GridMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// The supplied intensity function decreased on the sampled values.
struct NonMonotoneLambda : std::runtime_error {
    explicit NonMonotoneLambda(const std::string& what) : std::runtime_error(what) {}
};

/// Not enough replicates/points for the requested estimate.
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mfpp

#endif  // MFPP_ERRORS_HPP
