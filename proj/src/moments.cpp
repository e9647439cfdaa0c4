// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#include "mfpp/moments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfpp/errors.hpp"
#include "mfpp/gammafn.hpp"
#include "mfpp/quadrature.hpp"
#include "mfpp/special_functions.hpp"

namespace mfpp {
namespace {

// -C2 t^d / C1, the Mittag-Leffler argument of every mixed formula
double ml_arg(const MixedStableParams& p, double t) {
    return -p.c2 * std::pow(t, p.d()) / p.c1;
}

// s^{2 a1}/C1^2 * E^2_{d, 2 a1 + 1}(-C2 s^d / C1), with pure reductions.
double e2_term(const MixedStableParams& p, double s) {
    if (s == 0.0) return 0.0;
    if (p.pure_alpha1()) return std::pow(s, 2.0 * p.alpha1) * rgamma_fn(2.0 * p.alpha1 + 1.0);
    if (p.pure_alpha2()) return std::pow(s, 2.0 * p.alpha2) * rgamma_fn(2.0 * p.alpha2 + 1.0);
    const double v = ml3(p.d(), 2.0 * p.alpha1 + 1.0, 2.0, ml_arg(p, s)).value;
    return std::pow(s, 2.0 * p.alpha1) / (p.c1 * p.c1) * v;
}

// Shell-summed double series for I(s,t); valid while the lattice terms do
// not overwhelm double precision (see cov_Y_series for the guard).
double cov_I_series(const MixedStableParams& p, double s, double t) {
    const double d = p.d();
    const double a1 = p.alpha1;
    const double lt = std::log(t);
    const double lq = std::log(p.c2 / p.c1);
    const double x = s / t;

    double sum = 0.0, comp = 0.0;
    int quiet = 0;
    for (int n = 0; n < 500; ++n) {
        double shell = 0.0;
        for (int k = 0; k <= n; ++k) {
            const int m = n - k;
            const double ak = k * d + a1;
            const double bm = m * d + a1 + 1.0;
            const double lmag = n * lq + (n * d + 2.0 * a1) * lt - lgamma_fn(bm) - lgamma_fn(ak);
            const double B = incomplete_beta(ak, bm, x);
            if (B == 0.0) continue;
            shell += std::exp(lmag) * B;
        }
        if (n % 2 == 1) shell = -shell;
        const double tsum = sum + shell;
        if (std::fabs(sum) >= std::fabs(shell)) {
            comp += (sum - tsum) + shell;
        } else {
            comp += (shell - tsum) + sum;
        }
        sum = tsum;
        if (std::fabs(shell) < 1e-14 * std::fabs(sum + comp)) {
            if (++quiet >= 3) return (sum + comp) / (p.c1 * p.c1);
        } else {
            quiet = 0;
        }
    }
    throw NoConvergence("cov_Y_series: shell cap reached");
}

// I(s,t) = int_0^s U(t - tau) dU(tau) by tanh-sinh quadrature; exact route
// for any t (the series above is its expansion).
double cov_I_quadrature(const MixedStableParams& p, double s, double t) {
    auto f = [&](double q) {
        const double tau = s * q;
        return renewal_U(p, t - tau) * renewal_density(p, tau) * s;
    };
    return tanh_sinh_01(f, 1e-13, 12).value;
}

double pure_alpha(const MixedStableParams& p) {
    return p.pure_alpha1() ? p.alpha1 : p.alpha2;
}

}  // namespace

void MixedStableParams::validate() const {
    if (!(alpha2 > 0.0) || !(alpha1 < 1.0) || !(alpha2 < alpha1)) {
        throw InvalidParams("params: need 0 < alpha2 < alpha1 < 1");
    }
    if (!(c1 >= 0.0) || !(c2 >= 0.0)) {
        throw InvalidParams("params: weights must be nonnegative");
    }
    if (std::fabs(c1 + c2 - 1.0) > 1e-12) {
        throw InvalidParams("params: C1 + C2 must equal 1");
    }
}

void MfppConfig::validate() const {
    params.validate();
    if (!(lambda > 0.0)) throw InvalidParams("config: lambda must be > 0");
    if (!(delta > 0.0)) throw InvalidParams("config: delta must be > 0");
}

double renewal_U(const MixedStableParams& p, double t) {
    if (t < 0.0) throw InvalidParams("renewal_U: t must be >= 0");
    if (t == 0.0) return 0.0;
    if (p.pure_alpha1()) return std::pow(t, p.alpha1) * rgamma_fn(1.0 + p.alpha1);
    if (p.pure_alpha2()) return std::pow(t, p.alpha2) * rgamma_fn(1.0 + p.alpha2);
    return std::pow(t, p.alpha1) / p.c1 * ml2(p.d(), p.alpha1 + 1.0, ml_arg(p, t)).value;
}

double renewal_density(const MixedStableParams& p, double t) {
    if (!(t > 0.0)) throw InvalidParams("renewal_density: t must be > 0");
    if (p.pure_alpha1()) return p.alpha1 * std::pow(t, p.alpha1 - 1.0) * rgamma_fn(1.0 + p.alpha1);
    if (p.pure_alpha2()) return p.alpha2 * std::pow(t, p.alpha2 - 1.0) * rgamma_fn(1.0 + p.alpha2);
    return std::pow(t, p.alpha1 - 1.0) / p.c1 * ml2(p.d(), p.alpha1, ml_arg(p, t)).value;
}

double renewal_U_asymptotic(const MixedStableParams& p, double t, TailRegime regime) {
    if (!(t > 0.0)) throw InvalidParams("renewal_U_asymptotic: t must be > 0");
    if (regime == TailRegime::small_t) {
        if (p.c1 == 0.0) throw DegenerateRegime("renewal_U_asymptotic: small-t form needs C1 > 0");
        return std::pow(t, p.alpha1) / p.c1 * rgamma_fn(1.0 + p.alpha1);
    }
    if (p.c2 == 0.0) throw DegenerateRegime("renewal_U_asymptotic: large-t form needs C2 > 0");
    return std::pow(t, p.alpha2) / p.c2 * rgamma_fn(1.0 + p.alpha2);
}

double var_Y(const MixedStableParams& p, double t, bool* clamped) {
    if (clamped) *clamped = false;
    if (t < 0.0) throw InvalidParams("var_Y: t must be >= 0");
    if (t == 0.0) return 0.0;
    double v;
    if (p.pure_alpha1() || p.pure_alpha2()) {
        const double a = pure_alpha(p);
        const double g1 = rgamma_fn(1.0 + a);
        v = std::pow(t, 2.0 * a) * (2.0 * rgamma_fn(2.0 * a + 1.0) - g1 * g1);
    } else {
        const double u = renewal_U(p, t);
        v = 2.0 * e2_term(p, t) - u * u;
    }
    if (v < 0.0) {
        if (v < -1e-9) {
            throw NoConvergence("var_Y: negative beyond roundoff tolerance at t=" +
                                std::to_string(t));
        }
        if (clamped) *clamped = true;
        return 0.0;
    }
    return v;
}

double var_Y_asymptotic(const MixedStableParams& p, double t) {
    if (p.c2 == 0.0) throw DegenerateRegime("var_Y_asymptotic: needs C2 > 0");
    if (!(t > 0.0)) throw InvalidParams("var_Y_asymptotic: t must be > 0");
    const double g1 = rgamma_fn(p.alpha2 + 1.0);
    return std::pow(t, 2.0 * p.alpha2) / (p.c2 * p.c2) *
           (2.0 * rgamma_fn(2.0 * p.alpha2 + 1.0) - g1 * g1);
}

double cov_Y_series(const MixedStableParams& p, double s, double t) {
    if (s < 0.0 || t < 0.0) throw InvalidParams("cov_Y_series: times must be >= 0");
    if (s > t) std::swap(s, t);
    if (s == 0.0) return 0.0;
    if (s == t) return var_Y(p, t);

    if (p.pure_alpha1() || p.pure_alpha2()) {
        const double a = pure_alpha(p);
        const double I = std::pow(t, 2.0 * a) * rgamma_fn(a + 1.0) * rgamma_fn(a) *
                         incomplete_beta(a, a + 1.0, s / t);
        return I + std::pow(s, 2.0 * a) * rgamma_fn(2.0 * a + 1.0) -
               renewal_U(p, s) * renewal_U(p, t);
    }

    // The lattice terms grow like exp(W) with W = t (C2/C1)^{1/d} before the
    // Gamma factors win; beyond W ~ 15 double-precision shells cancel away,
    // so evaluate I(s,t) by its defining convolution instead.
    const double W = t * std::pow(p.c2 / p.c1, 1.0 / p.d());
    const double I = (W <= 15.0) ? cov_I_series(p, s, t) : cov_I_quadrature(p, s, t);
    return I + e2_term(p, s) - renewal_U(p, s) * renewal_U(p, t);
}

double cov_Y_asymptotic(const MixedStableParams& p, double s) {
    if (s < 0.0) throw InvalidParams("cov_Y_asymptotic: s must be >= 0");
    if (p.pure_alpha2()) {
        return std::pow(s, 2.0 * p.alpha2) * rgamma_fn(2.0 * p.alpha2 + 1.0);
    }
    return e2_term(p, s);
}

double k0_const(const MixedStableParams& p, double s) {
    if (s < 0.0) throw InvalidParams("k0_const: s must be >= 0");
    if (p.c1 == 0.0) throw DegenerateRegime("k0_const: needs C1 > 0");
    if (s == 0.0) return 0.0;
    const double pre = std::pow(s, p.alpha1 + 1.0) / (p.c1 * p.c1);
    if (p.pure_alpha1()) {
        return pre * p.alpha1 * rgamma_fn(p.alpha1 + 2.0);
    }
    // sum_k (k d + a1) x^k / Gamma(k d + a1 + 2)
    //   = E_{d, a1+1}(x) - E_{d, a1+2}(x)   (termwise, via Gamma(z+1) = z Gamma(z))
    const double x = ml_arg(p, s);
    return pre * (ml2(p.d(), p.alpha1 + 1.0, x).value - ml2(p.d(), p.alpha1 + 2.0, x).value);
}

double k_const(const MixedStableParams& p, double s) {
    if (p.c2 == 0.0) throw DegenerateRegime("k_const: needs C2 > 0");
    return p.c1 * k0_const(p, s) / (p.c2 * gamma_fn(p.alpha2));
}

double l_const(const MfppConfig& cfg, double s) {
    if (s < 0.0) throw InvalidParams("l_const: s must be >= 0");
    if (s == 0.0) return 0.0;
    return renewal_U(cfg.params, s) + cfg.lambda * e2_term(cfg.params, s);
}

double cov_Y_corrected(const MixedStableParams& p, double s, double t) {
    if (s > t) std::swap(s, t);
    if (s < 0.0) throw InvalidParams("cov_Y_corrected: times must be >= 0");
    if (p.pure_alpha1()) {
        // pure-stable limit: the correction decays as t^{a1-1} with
        // coefficient K0(s)/Gamma(a1).
        return cov_Y_asymptotic(p, s) -
               std::pow(t, p.alpha1 - 1.0) * k0_const(p, s) * rgamma_fn(p.alpha1);
    }
    return cov_Y_asymptotic(p, s) - std::pow(t, p.alpha2 - 1.0) * k_const(p, s);
}

double mfpp_mean(const MfppConfig& cfg, double t) {
    return cfg.lambda * renewal_U(cfg.params, t);
}

double mfpp_var(const MfppConfig& cfg, double t) {
    return cfg.lambda * renewal_U(cfg.params, t) +
           cfg.lambda * cfg.lambda * var_Y(cfg.params, t);
}

double mfpp_cov(const MfppConfig& cfg, double s, double t) {
    return cfg.lambda * renewal_U(cfg.params, std::min(s, t)) +
           cfg.lambda * cfg.lambda * cov_Y_series(cfg.params, s, t);
}

double mfpp_cov_asymptotic(const MfppConfig& cfg, double s, double t) {
    if (cfg.params.c2 == 0.0) throw DegenerateRegime("mfpp_cov_asymptotic: needs C2 > 0");
    return cfg.lambda * l_const(cfg, s) -
           cfg.lambda * cfg.lambda * std::pow(t, cfg.params.alpha2 - 1.0) *
               k_const(cfg.params, s);
}

double mfpn_var_asymptotic(const MfppConfig& cfg, double t) {
    if (cfg.params.c2 == 0.0) throw DegenerateRegime("mfpn_var_asymptotic: needs C2 > 0");
    if (!(t > 0.0)) throw InvalidParams("mfpn_var_asymptotic: t must be > 0");
    const double a2 = cfg.params.alpha2;
    return cfg.lambda * a2 * cfg.delta * std::pow(t, a2 - 1.0) /
           (cfg.params.c2 * gamma_fn(1.0 + a2));
}

double mfpn_cov_asymptotic(const MfppConfig& cfg, double s, double t) {
    if (cfg.params.c2 == 0.0) throw DegenerateRegime("mfpn_cov_asymptotic: needs C2 > 0");
    if (!(s >= 0.0) || !(s + cfg.delta <= t)) {
        throw InvalidParams("mfpn_cov_asymptotic: need 0 <= s + delta <= t");
    }
    const double a2 = cfg.params.alpha2;
    const double dk = k_const(cfg.params, s + cfg.delta) - k_const(cfg.params, s);
    return (1.0 - a2) * cfg.delta * cfg.lambda * cfg.lambda * dk * std::pow(t, a2 - 2.0);
}

std::pair<double, double> theoretical_exponents(const MixedStableParams& p) {
    const double a = p.pure_alpha1() ? p.alpha1 : p.alpha2;
    return {a, (3.0 - a) / 2.0};
}

void MomentReport::validate() const {
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw InvalidParams("MomentReport: grid must be strictly increasing");
        }
    }
    for (double v : varY) {
        if (v < -1e-9) throw InvalidParams("MomentReport: negative variance entry");
    }
}

MomentReport build_moment_report(const MfppConfig& cfg, const std::vector<double>& t_grid,
                                 const double* cov_s) {
    cfg.validate();
    MomentReport r;
    r.t_grid = t_grid;
    const auto& p = cfg.params;
    for (double t : t_grid) {
        r.U.push_back(renewal_U(p, t));
        r.varY.push_back(var_Y(p, t));
        r.U_asym.push_back(t > 0.0
                               ? renewal_U_asymptotic(
                                     p, t, p.c2 > 0.0 ? TailRegime::large_t : TailRegime::small_t)
                               : 0.0);
        r.varY_asym.push_back(t > 0.0 && p.c2 > 0.0 ? var_Y_asymptotic(p, t) : 0.0);
        r.mfpp_mean_col.push_back(mfpp_mean(cfg, t));
        r.mfpp_var_col.push_back(mfpp_var(cfg, t));
        if (cov_s) {
            r.covY_col.push_back(cov_Y_series(p, *cov_s, t));
            r.mfpp_cov_col.push_back(mfpp_cov(cfg, *cov_s, t));
        }
    }
    if (cov_s) r.cov_s = *cov_s;
    r.validate();
    return r;
}

}  // namespace mfpp
