// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mfpp/errors.hpp"
#include "mfpp/gammafn.hpp"
#include "mfpp/quadrature.hpp"
#include "mfpp/special_functions.hpp"
#include "support/oracles.hpp"

using namespace mfpp;
using mfpp_tests::erfc_quad;
using mfpp_tests::ml_series_oracle;

TEST_CASE("ml2 closed-form values") {
    // E_{1,1} is the exponential
    auto r = ml2(1.0, 1.0, 1.5);
    CHECK(r.value == doctest::Approx(std::exp(1.5)).epsilon(1e-13));
    CHECK(r.regime == MlRegime::series);

    // only the k = 0 term survives at x = 0
    CHECK(ml2(0.7, 2.3, 0.0).value == doctest::Approx(1.0 / std::tgamma(2.3)).epsilon(1e-13));

    // E_{1/2,1}(-1) = e * erfc(1), erfc from quadrature
    CHECK(ml2(0.5, 1.0, -1.0).value ==
          doctest::Approx(std::exp(1.0) * erfc_quad(1.0)).epsilon(1e-12));
}

TEST_CASE("ml2 parameter validation") {
    CHECK_THROWS_AS(ml2(0.0, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(ml2(0.5, -1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(ml2(0.5, 1.0, std::nan("")), InvalidParams);
    // alpha >= 1 with deeply negative argument: unsupported regime
    CHECK_THROWS_AS(ml2(1.2, 1.0, -100.0), NoConvergence);
}

TEST_CASE("ml2 oracle sweep across all three regimes") {
    std::mt19937_64 gen(20260809);
    std::uniform_real_distribution<double> ua(0.03, 0.99), ub(1.0, 3.0), ux(0.0, 40.0);
    int cases = 0;
    double worst = 0.0;
    while (cases < 60) {
        const double a = ua(gen), b = ub(gen), x = -ux(gen);
        if (x < 0.0 && std::pow(-x, 1.0 / a) > 500.0) continue;
        ++cases;
        const double ref = ml_series_oracle(a, b, 1.0, x);
        const double rel = std::fabs(ml2(a, b, x).value - ref) / std::max(std::fabs(ref), 1e-300);
        worst = std::max(worst, rel);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("ml2 series/asymptotic agreement at the regime boundary") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> ua(0.2, 0.95), ub(1.0, 3.0);
    for (int i = 0; i < 12; ++i) {
        const double a = ua(gen), b = ub(gen);
        for (double u : {34.0, 36.0, 38.0}) {
            const double x = -std::pow(u, a);
            const auto r = ml2(a, b, x);
            const double ref = ml_series_oracle(a, b, 1.0, x);
            const double tol = std::max(3.0 * r.est_abs_error, 1e-11 * std::fabs(ref));
            CHECK(std::fabs(r.value - ref) <= tol);
        }
    }
}

TEST_CASE("ml2 complete monotonicity on the negative axis") {
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double b : {1.0, 1.5, 2.0}) {
            double prev = ml2(a, b, 0.0).value;
            for (double x = 0.5; x <= 30.0; x += 0.5) {
                const double v = ml2(a, b, -x).value;
                CHECK(v > 0.0);
                CHECK(v < prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("ml3 closed-form values and gamma=1 reduction") {
    // gamma = 1 reduces to ml2
    auto r3 = ml3(0.4, 1.6, 1.0, -2.0);
    auto r2 = ml2(0.4, 1.6, -2.0);
    CHECK(std::fabs(r3.value - r2.value) <= r3.est_abs_error + r2.est_abs_error + 1e-15);

    CHECK(ml3(0.3, 2.1, 2.0, 0.0).value ==
          doctest::Approx(1.0 / std::tgamma(2.1)).epsilon(1e-13));

    // brute-force 5000-term extended-precision partial sum
    const double ref = ml_series_oracle(0.4, 2.8, 2.0, -5.0, 5000);
    CHECK(ml3(0.4, 2.8, 2.0, -5.0).value == doctest::Approx(ref).epsilon(1e-11));
}

TEST_CASE("ml3 gamma=1 randomized reduction sweep") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> ua(0.05, 0.95), ub(1.0, 3.0), ux(-20.0, 3.0);
    for (int i = 0; i < 40; ++i) {
        const double a = ua(gen), b = ub(gen);
        double x = ux(gen);
        if (x < 0.0 && std::pow(-x, 1.0 / a) > 400.0) x = -std::pow(400.0, a);
        const auto r3 = ml3(a, b, 1.0, x);
        const auto r2 = ml2(a, b, x);
        const double tol =
            r3.est_abs_error + r2.est_abs_error + 1e-12 * std::fabs(r2.value) + 1e-300;
        CHECK(std::fabs(r3.value - r2.value) <= tol);
    }
}

TEST_CASE("ml3 gamma=2 oracle sweep") {
    std::mt19937_64 gen(123);
    std::uniform_real_distribution<double> ua(0.05, 0.98), ub(1.0, 3.0), ux(0.0, 40.0);
    int cases = 0;
    double worst = 0.0;
    while (cases < 60) {
        const double a = ua(gen), b = ub(gen), x = -ux(gen);
        if (std::pow(-x, 1.0 / a) > 500.0) continue;
        ++cases;
        const double ref = ml_series_oracle(a, b, 2.0, x);
        const double rel = std::fabs(ml3(a, b, 2.0, x).value - ref) / std::max(std::fabs(ref), 1e-300);
        worst = std::max(worst, rel);
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("ml3 non-integer gamma where the contour integral applies") {
    // beta < 1 + alpha*gamma so the direct integral route is valid
    const double v = ml3(0.5, 1.2, 1.5, -9.0).value;
    const double ref = ml_series_oracle(0.5, 1.2, 1.5, -9.0);
    CHECK(v == doctest::Approx(ref).epsilon(1e-10));
    // unsupported corner raises rather than silently degrading
    CHECK_THROWS_AS(ml3(0.5, 2.9, 1.5, -9.0), NoConvergence);
}

TEST_CASE("ml3_asymptotic") {
    // direct substitution: E^2_{0.4,2.1}(-t^{0.4}) ~ t^{-0.8}/Gamma(1.3)
    for (double t : {10.0, 100.0, 1000.0}) {
        CHECK(ml3_asymptotic(0.4, 2.1, 2.0, 1.0, t) ==
              doctest::Approx(std::pow(t, -0.8) / std::tgamma(1.3)).epsilon(1e-13));
    }
    // agreement with the full evaluation at large argument
    const double t = 1e4;
    const double full = ml3(0.4, 1.8, 2.0, -std::pow(t, 0.4)).value;
    const double asym = ml3_asymptotic(0.4, 1.8, 2.0, 1.0, t);
    CHECK(std::fabs(asym / full - 1.0) < 0.01);
    // beta = alpha*gamma is out of the formula's stated domain
    CHECK_THROWS_AS(ml3_asymptotic(0.5, 1.0, 2.0, 1.0, 10.0), DegenerateRegime);
}

TEST_CASE("ml2_derivative") {
    // zeroth derivative is the function itself
    CHECK(ml2_derivative(0, 0.6, 1.4, -0.8) ==
          doctest::Approx(ml2(0.6, 1.4, -0.8).value).epsilon(1e-13));
    // derivative of exp is exp
    CHECK(ml2_derivative(1, 1.0, 1.0, 0.7) == doctest::Approx(std::exp(0.7)).epsilon(1e-12));
    // finite-difference oracle
    const double h = 1e-5;
    const double fd = (ml2(0.4, 1.3, -0.7 + h).value - ml2(0.4, 1.3, -0.7 - h).value) / (2 * h);
    CHECK(ml2_derivative(1, 0.4, 1.3, -0.7) == doctest::Approx(fd).epsilon(1e-6));
    CHECK_THROWS_AS(ml2_derivative(-1, 0.5, 1.0, 0.0), InvalidParams);
}

TEST_CASE("derivative identity randomized sweep") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> ua(0.3, 0.95), ub(1.0, 3.0), ux(-2.0, 1.0);
    const double h = 1e-5;
    for (int i = 0; i < 20; ++i) {
        const double a = ua(gen), b = ub(gen), x = ux(gen);
        const double fd = (ml2(a, b, x + h).value - ml2(a, b, x - h).value) / (2 * h);
        const double an = ml2_derivative(1, a, b, x);
        if (std::fabs(fd) > 1e-6) {
            CHECK(std::fabs(an - fd) / std::fabs(fd) < 1e-6);
        }
    }
}

TEST_CASE("convolution identity against adaptive quadrature") {
    // int_0^x (x-t)^{mu-1} E_{rho,mu}(w (x-t)^rho) t^{nu-1} E_{rho,nu}(w t^rho) dt
    //   = x^{mu+nu-1} E^2_{rho,mu+nu}(w x^rho)
    std::mt19937_64 gen(777);
    std::uniform_real_distribution<double> urho(0.15, 1.0), umu(1.0, 3.0), uw(-3.0, -0.1),
        uxx(0.5, 5.0);
    for (int i = 0; i < 10; ++i) {
        const double rho = urho(gen), mu = umu(gen), nu = umu(gen), w = uw(gen);
        const double x = uxx(gen);
        auto f = [&](double q) {
            const double t = x * q;
            const double left = std::pow(x - t, mu - 1.0) * ml2(rho, mu, w * std::pow(x - t, rho)).value;
            const double right = std::pow(t, nu - 1.0) * ml2(rho, nu, w * std::pow(t, rho)).value;
            return left * right * x;
        };
        const double quad = tanh_sinh_01(f, 1e-12).value;
        const double rhs = std::pow(x, mu + nu - 1.0) * ml3(rho, mu + nu, 2.0, w * std::pow(x, rho)).value;
        CHECK(std::fabs(quad - rhs) / std::fabs(rhs) < 1e-6);
    }
}

TEST_CASE("incomplete_beta") {
    CHECK(incomplete_beta(1.0, 1.0, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
    for (double x : {0.1, 0.45, 0.8}) {
        CHECK(incomplete_beta(2.0, 1.0, x) == doctest::Approx(x * x / 2.0).epsilon(1e-13));
    }
    // quadrature oracle
    auto integrand = [](double y) { return std::pow(y, 0.7) * std::pow(1.0 - y, 1.4); };
    const double ref = gauss_adaptive(integrand, 0.0, 0.6, 1e-15);
    CHECK(std::fabs(incomplete_beta(1.7, 2.4, 0.6) - ref) < 1e-13);
    // complete value
    CHECK(incomplete_beta(1.7, 2.4, 1.0) ==
          doctest::Approx(std::exp(lbeta_fn(1.7, 2.4))).epsilon(1e-13));
    CHECK_THROWS_AS(incomplete_beta(0.0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(incomplete_beta(1.0, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(incomplete_beta(1.0, 1.0, -0.1), DomainError);
}

TEST_CASE("incomplete_beta_small_x") {
    CHECK(incomplete_beta_small_x(1.0, 1.0, 0.01) == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(incomplete_beta_small_x(2.0, 3.0, 0.05) ==
          doctest::Approx(0.05 * 0.05 / 2.0 - 2.0 * std::pow(0.05, 3) / 3.0).epsilon(1e-13));
    // remainder is O(x^{a+2}): calibrate the constant at a larger x, then
    // check the bound at a smaller one
    const double a = 1.5, b = 2.5;
    const double d1 = std::fabs(incomplete_beta(a, b, 0.08) - incomplete_beta_small_x(a, b, 0.08));
    const double C = d1 / std::pow(0.08, a + 2.0);
    const double d2 = std::fabs(incomplete_beta(a, b, 0.02) - incomplete_beta_small_x(a, b, 0.02));
    CHECK(d2 <= 2.5 * C * std::pow(0.02, a + 2.0));
}

TEST_CASE("series cap raises NoConvergence") {
    // alpha tiny with x just above the series-safe range but below the
    // integral zone would be routed; force the cap via a positive x whose
    // series is astronomically long but representable? Not reachable:
    // positive-x series always converges within the cap on the validated
    // domain, so exercise the documented alpha >= 1 corner instead.
    CHECK_THROWS_AS(ml3(1.5, 1.0, 2.0, -80.0), NoConvergence);
}
