// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_GAMMAFN_HPP
#define MFPP_GAMMAFN_HPP

namespace mfpp {

/// Gamma(x) for x > 0, Lanczos rational approximation (~1e-14 relative).
/// Overflows to +inf for x > ~171.6.
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double lgamma_fn(double x);

/// 1/Gamma(x) for any real x; exactly 0 at the poles x = 0, -1, -2, ...
/// Negative arguments go through the reflection formula.
double rgamma_fn(double x);

/// log Beta(a, b) = lgamma(a) + lgamma(b) - lgamma(a+b), a, b > 0.
double lbeta_fn(double a, double b);

}  // namespace mfpp

#endif  // MFPP_GAMMAFN_HPP
