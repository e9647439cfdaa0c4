// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the library's evaluation paths:
// extended-precision (MPFR) Mittag-Leffler partial sums and quadrature
// reference values.

#ifndef MFPP_TESTS_ORACLES_HPP
#define MFPP_TESTS_ORACLES_HPP

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

#include "mfpp/quadrature.hpp"

namespace mfpp_tests {

/// Prabhakar series sum_{k} C(g,k) x^k / Gamma(k a + b) in MPFR arithmetic.
/// Precision adapts to the alternating-series cancellation (~|x|^{1/a} bits).
/// `fixed_terms > 0` forces exactly that many terms (brute-force oracle).
inline double ml_series_oracle(double alpha, double beta, double gamma, double x,
                               long fixed_terms = 0) {
    const double u = x < 0.0 ? std::pow(-x, 1.0 / alpha) : 0.0;
    const auto prec = static_cast<mpfr_prec_t>(u * 1.4427 + 192);
    if (prec > 4000000) throw std::runtime_error("ml_series_oracle: precision blow-up");

    mpfr_t sum, coef, xk, term, arg, g;
    mpfr_inits2(prec, sum, coef, xk, term, arg, g, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    mpfr_set_d(coef, 1.0, MPFR_RNDN);
    mpfr_set_d(xk, 1.0, MPFR_RNDN);

    long quiet = 0;
    for (long k = 0; k < 2000000; ++k) {
        // arg = k*alpha + beta, from the exact double inputs
        mpfr_set_d(arg, alpha, MPFR_RNDN);
        mpfr_mul_si(arg, arg, k, MPFR_RNDN);
        mpfr_add_d(arg, arg, beta, MPFR_RNDN);
        mpfr_gamma(g, arg, MPFR_RNDN);
        mpfr_mul(term, coef, xk, MPFR_RNDN);
        mpfr_div(term, term, g, MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);

        if (fixed_terms > 0) {
            if (k + 1 >= fixed_terms) break;
        } else {
            // stop once |term| is negligible at working precision
            const long se = mpfr_zero_p(sum) ? -prec : mpfr_get_exp(sum);
            const long te = mpfr_zero_p(term) ? se - prec - 64 : mpfr_get_exp(term);
            if (te < se - static_cast<long>(prec) - 16) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
        }
        // coef *= (k + gamma) / (k + 1)
        mpfr_set_d(arg, gamma, MPFR_RNDN);
        mpfr_add_si(arg, arg, k, MPFR_RNDN);
        mpfr_mul(coef, coef, arg, MPFR_RNDN);
        mpfr_div_si(coef, coef, k + 1, MPFR_RNDN);
        // xk *= x
        mpfr_mul_d(xk, xk, x, MPFR_RNDN);
    }
    const double out = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, coef, xk, term, arg, g, static_cast<mpfr_ptr>(nullptr));
    return out;
}

/// erfc by quadrature of the defining integral (independent of any erf in
/// the library or libm): erfc(x) = (2/sqrt(pi)) int_x^inf e^{-t^2} dt.
inline double erfc_quad(double x) {
    const double hi = x + std::sqrt(745.0) + 2.0;  // e^{-t^2} below 1e-300 past here
    auto f = [](double t) { return std::exp(-t * t); };
    const double v = mfpp::gauss_adaptive(f, x, hi, 1e-16);
    return 2.0 / std::sqrt(M_PI) * v;
}

/// K(s) reference: 200-term MPFR sum of
/// (C1/(C2 Gamma(a2))) * (s^{a1+1}/C1^2) sum_k (k d + a1)(-C2 s^d/C1)^k / Gamma(k d + a1 + 2).
inline double k_const_oracle(double a1, double a2, double c1, double c2, double s) {
    const mpfr_prec_t prec = 512;
    mpfr_t sum, term, xk, arg, g, tmp;
    mpfr_inits2(prec, sum, term, xk, arg, g, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(sum, 1);
    mpfr_set_d(xk, 1.0, MPFR_RNDN);
    const double d = a1 - a2;
    const double z = -c2 * std::pow(s, d) / c1;
    for (long k = 0; k < 200; ++k) {
        mpfr_set_d(arg, d, MPFR_RNDN);
        mpfr_mul_si(arg, arg, k, MPFR_RNDN);
        mpfr_add_d(arg, arg, a1 + 2.0, MPFR_RNDN);
        mpfr_gamma(g, arg, MPFR_RNDN);
        mpfr_set_d(term, k * d + a1, MPFR_RNDN);
        mpfr_mul(term, term, xk, MPFR_RNDN);
        mpfr_div(term, term, g, MPFR_RNDN);
        mpfr_add(sum, sum, term, MPFR_RNDN);
        mpfr_mul_d(xk, xk, z, MPFR_RNDN);
    }
    double out = mpfr_get_d(sum, MPFR_RNDN);
    mpfr_clears(sum, term, xk, arg, g, tmp, static_cast<mpfr_ptr>(nullptr));
    out *= std::pow(s, a1 + 1.0) / (c1 * c1);
    return out * c1 / (c2 * std::tgamma(a2));
}

}  // namespace mfpp_tests

#endif  // MFPP_TESTS_ORACLES_HPP
