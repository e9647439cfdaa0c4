// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_MOMENTS_HPP
#define MFPP_MOMENTS_HPP

#include <utility>
#include <vector>

namespace mfpp {

/// Parameters of the mixed stable subordinator: Laplace exponent
/// C1 s^{alpha1} + C2 s^{alpha2} with 0 < alpha2 < alpha1 < 1,
/// C1, C2 >= 0, C1 + C2 = 1. C2 = 0 reduces to the pure alpha1-stable
/// subordinator, C1 = 0 to the pure alpha2-stable one.
struct MixedStableParams {
    double alpha1 = 0.9;
    double alpha2 = 0.5;
    double c1 = 0.5;
    double c2 = 0.5;

    void validate() const;  // throws InvalidParams
    double d() const { return alpha1 - alpha2; }
    bool pure_alpha1() const { return c2 == 0.0; }
    bool pure_alpha2() const { return c1 == 0.0; }
};

/// MixedStableParams plus Poisson rate and increment lag.
struct MfppConfig {
    MixedStableParams params;
    double lambda = 1.0;  // Poisson rate, > 0
    double delta = 1.0;   // MFPN lag, > 0

    void validate() const;
};

enum class TailRegime { small_t, large_t };

/// Renewal function U(t) = E[Y(t)] of the inverse mixed stable subordinator.
double renewal_U(const MixedStableParams& p, double t);

/// dU/dt, t > 0.
double renewal_density(const MixedStableParams& p, double t);

/// Power-law ends of U: t^{a1}/(C1 Gamma(1+a1)) as t->0,
/// t^{a2}/(C2 Gamma(1+a2)) as t->inf.
double renewal_U_asymptotic(const MixedStableParams& p, double t, TailRegime regime);

/// Var Y(t). Roundoff values in (-1e-9, 0) are clamped to 0 (sets *clamped
/// when provided); anything below -1e-9 throws NoConvergence.
double var_Y(const MixedStableParams& p, double t, bool* clamped = nullptr);

/// Large-t variance asymptote (t^{2 a2}/C2^2)(2/Gamma(2 a2+1) - 1/Gamma(a2+1)^2).
double var_Y_asymptotic(const MixedStableParams& p, double t);

/// Exact Cov(Y(s), Y(t)). Arguments in either order (covariance is
/// symmetric). Uses the double-series representation where it is
/// numerically safe and an equivalent convolution quadrature elsewhere.
double cov_Y_series(const MixedStableParams& p, double s, double t);

/// Limit of Cov(Y(s), Y(t)) as t -> inf at fixed s.
double cov_Y_asymptotic(const MixedStableParams& p, double s);

/// Two-term large-t approximation cov_Y_asymptotic(s) - t^{a2-1} K(s).
double cov_Y_corrected(const MixedStableParams& p, double s, double t);

/// K0(s), K(s) = C1 K0(s) / (C2 Gamma(a2)), and
/// L(s) = U(s) + lambda s^{2 a1}/C1^2 * E^2_{d, 2 a1 + 1}(-C2 s^d / C1).
double k0_const(const MixedStableParams& p, double s);
double k_const(const MixedStableParams& p, double s);
double l_const(const MfppConfig& cfg, double s);

/// MFPP moments: mean = lambda U(t), var = lambda U(t) + lambda^2 Var Y(t),
/// cov = lambda U(s^t) + lambda^2 Cov(Y(s), Y(t)).
double mfpp_mean(const MfppConfig& cfg, double t);
double mfpp_var(const MfppConfig& cfg, double t);
double mfpp_cov(const MfppConfig& cfg, double s, double t);

/// Two-term large-t MFPP covariance: lambda L(s) - lambda^2 t^{a2-1} K(s).
double mfpp_cov_asymptotic(const MfppConfig& cfg, double s, double t);

/// Large-t MFPN variance: lambda a2 delta t^{a2-1} / (C2 Gamma(1+a2)).
double mfpn_var_asymptotic(const MfppConfig& cfg, double t);

/// Large-t MFPN covariance:
/// (1-a2) delta lambda^2 (K(s+delta) - K(s)) t^{a2-2}.
double mfpn_cov_asymptotic(const MfppConfig& cfg, double s, double t);

/// Correlation decay exponents: (a2, (3-a2)/2) for the mixed process;
/// the pure alpha1-stable reduction (C2 = 0) decays with alpha1 instead.
std::pair<double, double> theoretical_exponents(const MixedStableParams& p);

/// Analytic values on a time grid, ready for CSV/JSON output.
struct MomentReport {
    std::vector<double> t_grid;
    std::vector<double> U, varY, U_asym, varY_asym, mfpp_mean_col, mfpp_var_col;
    // optional covariance columns for a fixed s (empty when unused)
    double cov_s = 0.0;
    std::vector<double> covY_col, mfpp_cov_col;

    void validate() const;
};

MomentReport build_moment_report(const MfppConfig& cfg,
                                 const std::vector<double>& t_grid,
                                 const double* cov_s = nullptr);

}  // namespace mfpp

#endif  // MFPP_MOMENTS_HPP
