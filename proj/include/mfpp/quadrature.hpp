// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_QUADRATURE_HPP
#define MFPP_QUADRATURE_HPP

#include <functional>

namespace mfpp {

/// Result of a quadrature pass: value plus an a-posteriori error estimate
/// (magnitude of the last refinement step).
struct QuadResult {
    double value = 0.0;
    double est_error = 0.0;
};

/// Double-exponential (tanh-sinh) quadrature over the open interval (0, 1).
/// Nodes near 0 are generated in distance-to-endpoint form, so integrands
/// with an integrable singularity at 0 (r^{p-1}, log r) converge to full
/// precision. A singularity at 1 only sees the quantized distance 1 - x and
/// converges to ~1e-8; put the singular end at 0.
QuadResult tanh_sinh_01(const std::function<double(double)>& f,
                        double rel_tol = 5e-15, int max_level = 11);

/// Convenience wrapper: tanh-sinh over (a, b).
QuadResult tanh_sinh(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 5e-15, int max_level = 11);

/// Adaptive Gauss-Legendre (15-point panels, bisection refinement) over
/// [a, b] for smooth integrands. `abs_tol` is the panel acceptance level.
double gauss_adaptive(const std::function<double(double)>& f, double a, double b,
                      double abs_tol, int max_depth = 42);

}  // namespace mfpp

#endif  // MFPP_QUADRATURE_HPP
