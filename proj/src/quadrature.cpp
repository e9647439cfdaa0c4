// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#include "mfpp/quadrature.hpp"

#include <cmath>

namespace mfpp {
namespace {

struct TsNode {
    double x;  // abscissa measured from the left endpoint, in (0, 1)
    double w;  // weight
};

// x(t) = 1/(1 + exp(-pi*sinh(t))), w(t) = (pi/2) cosh(t) / cosh^2((pi/2) sinh(t))
TsNode ts_node(double t) {
    const double u = 0.5 * M_PI * std::sinh(t);
    TsNode n;
    if (std::fabs(u) > 300.0) {
        n.x = (u > 0.0) ? 1.0 : 0.0;
        n.w = 0.0;
        return n;
    }
    if (u >= 0.0) {
        const double e = std::exp(-2.0 * u);
        n.x = 1.0 / (1.0 + e);
    } else {
        const double e = std::exp(2.0 * u);
        n.x = e / (1.0 + e);
    }
    const double ch = std::cosh(u);
    n.w = 0.25 * M_PI * std::cosh(t) / (ch * ch);
    return n;
}

// 15-point Gauss-Legendre abscissas/weights on [-1, 1].
constexpr double kGlX[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854,
};
constexpr double kGlW[15] = {
    0.03075324199611727, 0.07036604748810812, 0.10715922046717194,
    0.13957067792615432, 0.16626920581699392, 0.18616100001556221,
    0.19843148532711158, 0.20257824192556128, 0.19843148532711158,
    0.18616100001556221, 0.16626920581699392, 0.13957067792615432,
    0.10715922046717194, 0.07036604748810812, 0.03075324199611727,
};

double gl_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 15; ++i) s += kGlW[i] * f(mid + h * kGlX[i]);
    return s * h;
}

double gl_recurse(const std::function<double(double)>& f, double a, double b,
                  double whole, double abs_tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl_panel(f, a, mid);
    const double right = gl_panel(f, mid, b);
    if (std::fabs(left + right - whole) <= abs_tol || depth <= 0) {
        return left + right;
    }
    return gl_recurse(f, a, mid, left, 0.5 * abs_tol, depth - 1) +
           gl_recurse(f, mid, b, right, 0.5 * abs_tol, depth - 1);
}

}  // namespace

QuadResult tanh_sinh_01(const std::function<double(double)>& f, double rel_tol,
                        int max_level) {
    double h = 1.0;
    const TsNode n0 = ts_node(0.0);
    double sum = n0.w * f(n0.x);

    // complete the h = 1 trapezoid
    int dead = 0;
    for (int k = 1; k <= 400; ++k) {
        double c = 0.0;
        TsNode n = ts_node(k * h);
        if (n.w > 0.0 && n.x > 0.0 && n.x < 1.0) c += n.w * f(n.x);
        n = ts_node(-k * h);
        if (n.w > 0.0 && n.x > 0.0 && n.x < 1.0) c += n.w * f(n.x);
        sum += c;
        if (std::fabs(c) <= 1e-18 * std::fabs(sum)) {
            if (++dead >= 3) break;
        } else {
            dead = 0;
        }
    }

    double prev = sum * h;
    double est = std::fabs(prev);
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        dead = 0;
        for (long k = 1; k <= (4L << 22); k += 2) {
            const double t = static_cast<double>(k) * h;
            double c = 0.0;
            TsNode n = ts_node(t);
            if (n.w > 0.0 && n.x > 0.0 && n.x < 1.0) c += n.w * f(n.x);
            n = ts_node(-t);
            if (n.w > 0.0 && n.x > 0.0 && n.x < 1.0) c += n.w * f(n.x);
            sum += c;
            if (std::fabs(c) <= 1e-18 * std::fabs(sum)) {
                if (++dead >= 3) break;
            } else {
                dead = 0;
            }
        }
        const double val = sum * h;
        est = std::fabs(val - prev);
        if (est <= rel_tol * std::fabs(val)) return {val, est};
        prev = val;
    }
    return {prev, est};
}

QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                     double rel_tol, int max_level) {
    const double len = b - a;
    auto g = [&](double q) { return f(a + len * q) * len; };
    return tanh_sinh_01(g, rel_tol, max_level);
}

double gauss_adaptive(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, int max_depth) {
    return gl_recurse(f, a, b, gl_panel(f, a, b), abs_tol, max_depth);
}

}  // namespace mfpp
