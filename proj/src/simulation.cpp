// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#include "mfpp/simulation.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "mfpp/errors.hpp"
#include "mfpp/gammafn.hpp"

namespace mfpp {

void SimGrid::validate() const {
    if (t_grid.empty()) throw InvalidParams("grid: empty observation grid");
    if (t_grid.front() < 0.0) throw InvalidParams("grid: times must be >= 0");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw InvalidParams("grid: times must be strictly increasing");
        }
    }
    if (!(ds > 0.0)) throw InvalidParams("grid: ds must be > 0");
    const double cap = s_cap > 0.0 ? s_cap : 1.0;
    if (cap / ds > 9.2e18) throw InvalidParams("grid: s_cap/ds does not fit in 64 bits");
}

double default_s_cap(const MixedStableParams& p, double t_max) {
    const double t = std::max(t_max, 1e-12);
    if (p.c2 > 0.0) {
        return 10.0 * std::pow(t, p.alpha2) / (p.c2 * gamma_fn(1.0 + p.alpha2));
    }
    return 10.0 * std::pow(t, p.alpha1) / (p.c1 * gamma_fn(1.0 + p.alpha1));
}

double default_ds(const std::vector<double>& t_grid) {
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        min_gap = std::min(min_gap, t_grid[i] - t_grid[i - 1]);
    }
    if (!std::isfinite(min_gap)) min_gap = std::max(t_grid.front(), 1.0);
    return 1e-3 * min_gap;
}

void validate_grid_params(const SimGrid& grid, const MixedStableParams& p) {
    p.validate();
    grid.validate();
}

double sample_stable_increment(double alpha, double ds, SplitMix64& rng) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw InvalidParams("sample_stable_increment: need 0 < alpha < 1");
    }
    if (!(ds > 0.0)) throw InvalidParams("sample_stable_increment: ds must be > 0");
    const double u = M_PI * rng.next_open01();
    const double e = rng.next_exp();
    // X = (sa/s) * [ s1a / (E s) ]^{(1-alpha)/alpha}; Laplace E e^{-uX} = e^{-u^alpha}
    const double sa = std::sin(alpha * u);
    const double s1a = std::sin((1.0 - alpha) * u);
    const double s = std::sin(u);
    const double x = (sa / s) * std::pow(s1a / (e * s), (1.0 - alpha) / alpha);
    const double v = std::pow(ds, 1.0 / alpha) * x;
    if (!std::isfinite(v)) return 1e300;  // astronomically deep tail draw
    return v;
}

double sample_mixed_increment(const MixedStableParams& p, double ds, SplitMix64& comp1,
                              SplitMix64& comp2) {
    double inc = 0.0;
    if (p.c1 > 0.0) inc += sample_stable_increment(p.alpha1, p.c1 * ds, comp1);
    if (p.c2 > 0.0) inc += sample_stable_increment(p.alpha2, p.c2 * ds, comp2);
    return inc;
}

long long poisson_sample(double mean, SplitMix64& rng) {
    if (!(mean >= 0.0)) throw InvalidParams("poisson_sample: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean < 12.0) {
        const double limit = std::exp(-mean);
        double prod = 1.0;
        long long k = -1;
        do {
            ++k;
            prod *= rng.next_open01();
        } while (prod > limit);
        return k;
    }
    // PTRS transformed rejection (Hormann)
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    const double lmean = std::log(mean);
    for (;;) {
        double u = rng.next_open01() - 0.5;
        const double v = rng.next_open01();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long long>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        const double rhs = kf * lmean - mean - lgamma_fn(kf + 1.0);
        if (lhs <= rhs) return static_cast<long long>(kf);
    }
}

std::vector<double> simulate_inverse_path(const MixedStableParams& p, const SimGrid& grid,
                                          PathStreams& streams) {
    const auto& ts = grid.t_grid;
    std::vector<double> y(ts.size(), 0.0);
    const double ds = grid.ds;
    const double cap = grid.s_cap > 0.0 ? grid.s_cap : default_s_cap(p, ts.back());
    const long long max_steps = static_cast<long long>(std::ceil(cap / ds)) + 1;

    double L = 0.0;
    std::size_t j = 0;
    for (long long step = 1; j < ts.size(); ++step) {
        if (step > max_steps) {
            throw SCapExceeded("simulate_inverse_path: no crossing by s_cap (check ds/s_cap)");
        }
        L += sample_mixed_increment(p, ds, streams.comp1, streams.comp2);
        while (j < ts.size() && L > ts[j]) {
            y[j] = static_cast<double>(step - 1) * ds;
            ++j;
        }
    }
    return y;
}

std::vector<long long> simulate_mfpp_path(const MfppConfig& cfg, const SimGrid& grid,
                                          PathStreams& streams) {
    const std::vector<double> y = simulate_inverse_path(cfg.params, grid, streams);
    std::vector<long long> n(y.size(), 0);
    double prev_y = 0.0;
    long long acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        acc += poisson_sample(cfg.lambda * (y[j] - prev_y), streams.poisson);
        n[j] = acc;
        prev_y = y[j];
    }
    return n;
}

namespace {

std::size_t partner_index(const SimGrid& grid, std::size_t base, double delta) {
    const double want = grid.t_grid[base] + delta;
    const double tol = 1e-9 * std::max(1.0, std::fabs(want));
    for (std::size_t k = base + 1; k < grid.t_grid.size(); ++k) {
        if (std::fabs(grid.t_grid[k] - want) <= tol) return k;
        if (grid.t_grid[k] > want + tol) break;
    }
    throw GridMismatch("mfpn: grid lacks t + delta for t = " +
                       std::to_string(grid.t_grid[base]));
}

}  // namespace

std::vector<long long> mfpn_from_mfpp(const std::vector<long long>& counts,
                                      const SimGrid& grid, double delta,
                                      const std::vector<std::size_t>& base_indices) {
    if (!(delta > 0.0)) throw InvalidParams("mfpn: delta must be > 0");
    if (counts.size() != grid.t_grid.size()) {
        throw InvalidParams("mfpn: row length does not match grid");
    }
    std::vector<long long> z;
    z.reserve(base_indices.size());
    for (std::size_t b : base_indices) {
        const std::size_t k = partner_index(grid, b, delta);
        z.push_back(counts[k] - counts[b]);
    }
    return z;
}

std::vector<long long> mfpn_from_mfpp(const std::vector<long long>& counts,
                                      const SimGrid& grid, double delta) {
    std::vector<std::size_t> bases;
    for (std::size_t b = 0; b < grid.t_grid.size(); ++b) {
        try {
            (void)partner_index(grid, b, delta);
            bases.push_back(b);
        } catch (const GridMismatch&) {
        }
    }
    if (bases.empty()) throw GridMismatch("mfpn: no (t, t+delta) pair on the grid");
    return mfpn_from_mfpp(counts, grid, delta, bases);
}

std::vector<long long> simulate_mfnpp_path(const MixedStableParams& p,
                                           const std::function<double(double)>& Lambda,
                                           const SimGrid& grid, PathStreams& streams) {
    const std::vector<double> y = simulate_inverse_path(p, grid, streams);
    std::vector<long long> n(y.size(), 0);
    double prev = Lambda(0.0);
    long long acc = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double cur = Lambda(y[j]);
        double mean = cur - prev;
        if (mean < 0.0) {
            if (mean < -1e-12 * std::max(1.0, std::fabs(cur))) {
                throw NonMonotoneLambda("mfnpp: Lambda decreased on sampled values");
            }
            mean = 0.0;
        }
        acc += poisson_sample(mean, streams.poisson);
        n[j] = acc;
        prev = cur;
    }
    return n;
}

void parallel_chunks(std::uint64_t n, std::uint64_t chunk_size, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& work) {
    if (n == 0) return;
    const std::uint64_t n_chunks = (n + chunk_size - 1) / chunk_size;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned n_workers =
        static_cast<unsigned>(std::min<std::uint64_t>(threads > 0 ? threads : hw, n_chunks));

    if (n_workers <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) {
            work(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        }
        return;
    }

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};
    auto body = [&]() {
        try {
            for (;;) {
                const std::uint64_t c = next.fetch_add(1);
                if (c >= n_chunks || failed.load(std::memory_order_relaxed)) return;
                work(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
            }
        } catch (...) {
            if (!failed.exchange(true)) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (failed && first_error) std::rethrow_exception(first_error);
}

namespace {

template <typename RowFn>
PathEnsemble materialize(const SimGrid& grid_in, const MixedStableParams& p,
                         std::size_t n_paths, std::uint64_t seed, int threads,
                         std::size_t n_cols, PathKind kind, RowFn&& row_fn) {
    SimGrid grid = grid_in;
    if (grid.s_cap <= 0.0) grid.s_cap = default_s_cap(p, grid.t_grid.back());
    validate_grid_params(grid, p);

    PathEnsemble e;
    e.grid = grid;
    e.kind = kind;
    e.seed = seed;
    e.params = p;
    e.n_rows = n_paths;
    e.values.assign(n_paths * n_cols, 0.0);
    parallel_chunks(n_paths, kEnsembleChunk, threads,
                    [&](std::uint64_t, std::uint64_t begin, std::uint64_t end) {
                        for (std::uint64_t r = begin; r < end; ++r) {
                            PathStreams streams = PathStreams::make(seed, r);
                            row_fn(grid, streams, &e.values[r * n_cols]);
                        }
                    });
    return e;
}

}  // namespace

PathEnsemble simulate_ensemble_Y(const MixedStableParams& p, const SimGrid& grid,
                                 std::size_t n_paths, std::uint64_t seed, int threads) {
    return materialize(grid, p, n_paths, seed, threads, grid.t_grid.size(),
                       PathKind::inverse_subordinator,
                       [&](const SimGrid& g, PathStreams& st, double* out) {
                           const auto row = simulate_inverse_path(p, g, st);
                           for (std::size_t j = 0; j < row.size(); ++j) out[j] = row[j];
                       });
}

PathEnsemble simulate_ensemble_mfpp(const MfppConfig& cfg, const SimGrid& grid,
                                    std::size_t n_paths, std::uint64_t seed, int threads) {
    cfg.validate();
    PathEnsemble e = materialize(grid, cfg.params, n_paths, seed, threads, grid.t_grid.size(),
                                 PathKind::mfpp,
                                 [&](const SimGrid& g, PathStreams& st, double* out) {
                                     const auto row = simulate_mfpp_path(cfg, g, st);
                                     for (std::size_t j = 0; j < row.size(); ++j) {
                                         out[j] = static_cast<double>(row[j]);
                                     }
                                 });
    e.lambda = cfg.lambda;
    return e;
}

PathEnsemble simulate_ensemble_mfpn(const MfppConfig& cfg, const SimGrid& grid,
                                    std::size_t n_paths, std::uint64_t seed, int threads) {
    cfg.validate();
    // resolve the (t, t+delta) pairs once
    SimGrid g = grid;
    if (g.s_cap <= 0.0) g.s_cap = default_s_cap(cfg.params, g.t_grid.back());
    validate_grid_params(g, cfg.params);
    std::vector<std::size_t> bases;
    for (std::size_t b = 0; b < g.t_grid.size(); ++b) {
        try {
            (void)partner_index(g, b, cfg.delta);
            bases.push_back(b);
        } catch (const GridMismatch&) {
        }
    }
    if (bases.empty()) throw GridMismatch("mfpn ensemble: no (t, t+delta) pair on the grid");

    PathEnsemble e = materialize(g, cfg.params, n_paths, seed, threads, bases.size(),
                                 PathKind::mfpn,
                                 [&](const SimGrid& gg, PathStreams& st, double* out) {
                                     const auto counts = simulate_mfpp_path(cfg, gg, st);
                                     const auto z = mfpn_from_mfpp(counts, gg, cfg.delta, bases);
                                     for (std::size_t j = 0; j < z.size(); ++j) {
                                         out[j] = static_cast<double>(z[j]);
                                     }
                                 });
    e.lambda = cfg.lambda;
    e.delta = cfg.delta;
    // the ensemble's nominal grid is the base points of each increment
    std::vector<double> base_times;
    base_times.reserve(bases.size());
    for (std::size_t b : bases) base_times.push_back(g.t_grid[b]);
    e.grid.t_grid = base_times;
    return e;
}

}  // namespace mfpp
