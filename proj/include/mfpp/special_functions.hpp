// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_SPECIAL_FUNCTIONS_HPP
#define MFPP_SPECIAL_FUNCTIONS_HPP

namespace mfpp {

/// Which evaluation path produced a value.
enum class MlRegime { series, integral, asymptotic };

const char* to_string(MlRegime r);

/// Value plus error estimate. `est_abs_error` is an estimate (the first
/// neglected series term, the first dropped asymptotic correction, or the
/// last quadrature refinement), not a rigorous bound.
struct EvalResult {
    double value = 0.0;
    double est_abs_error = 0.0;
    MlRegime regime = MlRegime::series;
};

/// Arguments of the Mittag-Leffler family, as parsed by the CLI.
struct MlArgs {
    double alpha = 1.0;  // series exponent step, > 0
    double beta = 1.0;   // series offset, > 0
    double gamma = 1.0;  // Prabhakar power, > 0
    double x = 0.0;      // argument, finite
    void validate() const;  // throws InvalidParams
};

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(x),
/// sum_{k>=0} x^k / Gamma(k*alpha + beta).
///
/// Validated domain: any x <= 0 when 0 < alpha < 1; x <= 0 with
/// |x|^(1/alpha) <= 30 when alpha >= 1; any x >= 0 whose value is
/// representable in double (|x|^(1/alpha) <~ 700). Within it the result
/// carries <= ~1e-11 relative error.
EvalResult ml2(double alpha, double beta, double x);

/// Three-parameter (Prabhakar) Mittag-Leffler function E^gamma_{alpha,beta}(x),
/// (1/Gamma(gamma)) sum_{k>=0} Gamma(k+gamma) x^k / (k! Gamma(k*alpha+beta)).
/// For gamma = 1 it reduces to ml2. Non-integer gamma is supported except in
/// the mid-range negative-x zone when beta >= 1 + alpha*gamma (NoConvergence).
EvalResult ml3(double alpha, double beta, double gamma, double x);

/// Leading large-t behaviour of E^gamma_{alpha,beta}(-lam * t^alpha):
/// lam^{-gamma} t^{-alpha gamma} / Gamma(beta - alpha gamma).
/// Requires beta != alpha*gamma (DegenerateRegime otherwise).
double ml3_asymptotic(double alpha, double beta, double gamma, double lam, double t);

/// n-th derivative of ml2 via E^{(n)}_{a,b}(x) = n! E^{n+1}_{a, n a + b}(x).
double ml2_derivative(int n, double alpha, double beta, double x);

/// Lower incomplete Beta function B(a,b;x) = int_0^x y^{a-1}(1-y)^{b-1} dy,
/// a, b > 0, x in [0,1]. Continued-fraction evaluation, absolute error
/// <= ~1e-12 on the in-scope ranges. B(a,b;1) is the complete Beta function.
double incomplete_beta(double a, double b, double x);

/// Two-term small-x expansion x^a/a + (1-b) x^{a+1}/(a+1); for asymptotic
/// cross-checks only.
double incomplete_beta_small_x(double a, double b, double x);

}  // namespace mfpp

#endif  // MFPP_SPECIAL_FUNCTIONS_HPP
