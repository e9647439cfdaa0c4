// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_ESTIMATION_HPP
#define MFPP_ESTIMATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mfpp/moments.hpp"
#include "mfpp/simulation.hpp"

namespace mfpp {

/// Empirical correlation of X(s) with X(t) over a window of later times.
struct CorrCurve {
    double s = 0.0;
    std::vector<double> t_points;  // strictly increasing, > s
    std::vector<double> corr;      // clamped to [-1, 1]
    std::vector<double> stderr_;   // grouped-jackknife standard errors
    std::uint64_t n_paths = 0;

    void validate() const;
};

enum class Verdict { consistent, inconsistent };

const char* to_string(Verdict v);

/// Least-squares fit of log corr against log t.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    int n_used = 0;
    int dropped = 0;      // non-positive correlations excluded before the log
    double target = 0.0;  // theoretical decay exponent h
    double tolerance = 0.0;
    Verdict verdict = Verdict::inconsistent;

    double fitted_h() const { return -slope; }
};

/// Unbiased sample covariance of two ensemble columns, with a delta-method
/// standard error from fourth sample moments. Throws InsufficientData for
/// fewer than two replicates.
std::pair<double, double> empirical_cov(const PathEnsemble& e, std::size_t s_index,
                                        std::size_t t_index);

/// Correlation curve of column s against each t in `t_points` (all must be
/// grid points of the ensemble).
CorrCurve corr_curve(const PathEnsemble& e, double s, const std::vector<double>& t_points);

/// OLS on (log t, log corr); the estimate of h is minus the slope. Points
/// with corr <= 0 are dropped (counted), at least three must remain.
/// verdict = consistent iff |h - target| <= max(3 * slope_stderr, tolerance).
SlopeFit fit_decay_exponent(const CorrCurve& curve, double target, double tolerance);

/// Options for the end-to-end decay reports. Window and step defaults
/// follow the library conventions: [50, 500] x max(s, s+delta), 8 log-spaced
/// points, ds = 1e-3 x (smallest grid spacing).
struct ReportOptions {
    std::uint64_t paths = 100000;
    std::uint64_t seed = 0;
    int threads = 0;        // 0 = hardware
    double ds = 0.0;        // <= 0: default
    double s_cap = 0.0;     // <= 0: default
    double s = 1.0;         // fixed earlier time
    double window_lo = 0.0; // <= 0: default
    double window_hi = 0.0;
    int n_points = 8;
    double tolerance = 0.0; // <= 0: 0.1 (LRD) / 0.15 (SRD)
};

/// Everything a decay run produces: the fitted exponent, the curve it was
/// fitted to, and the resolved inputs.
struct DecayReport {
    std::string kind;  // "lrd" or "srd"
    MfppConfig config;
    ReportOptions options;  // with defaults resolved
    CorrCurve curve;
    SlopeFit fit;
};

/// Simulate an MFPP ensemble and fit Corr(N(s), N(t)) ~ c t^{-h} against
/// the theoretical LRD exponent.
DecayReport lrd_report(const MfppConfig& cfg, const ReportOptions& opt);

/// Same for the increment process Z_delta: Corr(Z(s), Z(t)) against the
/// theoretical SRD exponent.
DecayReport srd_report(const MfppConfig& cfg, const ReportOptions& opt);

/// n logarithmically spaced points on [lo, hi].
std::vector<double> log_spaced(double lo, double hi, int n);

}  // namespace mfpp

#endif  // MFPP_ESTIMATION_HPP
