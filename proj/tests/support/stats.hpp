// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only statistics: Kolmogorov-Smirnov and chi-square p-values.

#ifndef MFPP_TESTS_STATS_HPP
#define MFPP_TESTS_STATS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace mfpp_tests {

/// One-sample KS statistic against a CDF.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        d = std::max(d, std::fabs((i + 1) / n - F));
        d = std::max(d, std::fabs(F - i / n));
    }
    return d;
}

/// Two-sample KS statistic.
inline double ks_statistic_2(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            ++i;
        } else {
            ++j;
        }
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    return d;
}

/// Asymptotic Kolmogorov p-value with the Stephens small-sample correction.
inline double ks_p_value(double d, double n_eff) {
    const double sn = std::sqrt(n_eff);
    const double lam = (sn + 0.12 + 0.11 / sn) * d;
    double p = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = 2.0 * ((j % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * j * j * lam * lam);
        p += term;
        if (std::fabs(term) < 1e-12) break;
    }
    return std::clamp(p, 0.0, 1.0);
}

/// Regularized lower incomplete gamma P(a, x) (series / continued fraction).
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_p domain");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) {
        double ap = a, sum = 1.0 / a, del = sum;
        for (int n = 0; n < 500; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    // Lentz continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    return 1.0 - q;
}

/// Chi-square survival function (p-value of statistic x at k dof).
inline double chi2_sf(double x, double k) { return 1.0 - gamma_p(0.5 * k, 0.5 * x); }

/// Two-sample chi-square test over shared bins; returns the p-value.
inline double chi2_two_sample_p(const std::vector<long long>& n1,
                                const std::vector<long long>& n2) {
    if (n1.size() != n2.size()) throw std::invalid_argument("chi2: bin mismatch");
    double t1 = 0.0, t2 = 0.0;
    for (std::size_t i = 0; i < n1.size(); ++i) {
        t1 += static_cast<double>(n1[i]);
        t2 += static_cast<double>(n2[i]);
    }
    const double k1 = std::sqrt(t2 / t1), k2 = std::sqrt(t1 / t2);
    double stat = 0.0;
    int dof = -1;  // totals constrain one dof
    for (std::size_t i = 0; i < n1.size(); ++i) {
        const double a = static_cast<double>(n1[i]), b = static_cast<double>(n2[i]);
        if (a + b == 0.0) continue;
        const double d = k1 * a - k2 * b;
        stat += d * d / (a + b);
        ++dof;
    }
    if (dof < 1) throw std::invalid_argument("chi2: no populated bins");
    return chi2_sf(stat, dof);
}

}  // namespace mfpp_tests

#endif  // MFPP_TESTS_STATS_HPP
