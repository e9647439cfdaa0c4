// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#include "mfpp/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "mfpp/errors.hpp"

namespace mfpp {
namespace {

// Running sums for one chunk of replicates: the s column against J later
// columns. Combined strictly in chunk order, so results do not depend on
// the number of workers.
struct ChunkStats {
    double n = 0.0;
    double s1 = 0.0, s2 = 0.0;       // sum x_s, sum x_s^2
    std::vector<double> t1, t2, st;  // per j: sum x_j, sum x_j^2, sum x_s x_j

    explicit ChunkStats(std::size_t j = 0) : t1(j, 0.0), t2(j, 0.0), st(j, 0.0) {}

    void add(double xs, const double* xt, std::size_t j_count) {
        n += 1.0;
        s1 += xs;
        s2 += xs * xs;
        for (std::size_t j = 0; j < j_count; ++j) {
            t1[j] += xt[j];
            t2[j] += xt[j] * xt[j];
            st[j] += xs * xt[j];
        }
    }
};

struct Totals {
    double n = 0.0, s1 = 0.0, s2 = 0.0;
    std::vector<double> t1, t2, st;
};

Totals combine(const std::vector<ChunkStats>& chunks, std::size_t j_count) {
    Totals tot;
    tot.t1.assign(j_count, 0.0);
    tot.t2.assign(j_count, 0.0);
    tot.st.assign(j_count, 0.0);
    for (const auto& c : chunks) {
        tot.n += c.n;
        tot.s1 += c.s1;
        tot.s2 += c.s2;
        for (std::size_t j = 0; j < j_count; ++j) {
            tot.t1[j] += c.t1[j];
            tot.t2[j] += c.t2[j];
            tot.st[j] += c.st[j];
        }
    }
    return tot;
}

double corr_from_sums(double n, double s1, double s2, double t1, double t2, double st) {
    const double vs = s2 / n - (s1 / n) * (s1 / n);
    const double vt = t2 / n - (t1 / n) * (t1 / n);
    if (!(vs > 0.0) || !(vt > 0.0)) return std::nan("");
    double c = (st / n - (s1 / n) * (t1 / n)) / std::sqrt(vs * vt);
    return std::clamp(c, -1.0, 1.0);
}

CorrCurve curve_from_chunks(const std::vector<ChunkStats>& chunks, double s,
                            const std::vector<double>& t_points) {
    const std::size_t J = t_points.size();
    const Totals tot = combine(chunks, J);
    if (tot.n < 2.0) throw InsufficientData("corr_curve: need at least 2 replicates");

    CorrCurve out;
    out.s = s;
    out.t_points = t_points;
    out.n_paths = static_cast<std::uint64_t>(tot.n);
    out.corr.resize(J);
    out.stderr_.resize(J);

    std::vector<double> jack(chunks.size());
    for (std::size_t j = 0; j < J; ++j) {
        out.corr[j] = corr_from_sums(tot.n, tot.s1, tot.s2, tot.t1[j], tot.t2[j], tot.st[j]);
        // grouped jackknife over the fixed chunks
        std::size_t used = 0;
        double mean = 0.0;
        for (const auto& c : chunks) {
            if (c.n == 0.0) continue;
            const double v =
                corr_from_sums(tot.n - c.n, tot.s1 - c.s1, tot.s2 - c.s2, tot.t1[j] - c.t1[j],
                               tot.t2[j] - c.t2[j], tot.st[j] - c.st[j]);
            jack[used++] = v;
            mean += v;
        }
        if (used >= 2 && std::isfinite(mean)) {
            mean /= static_cast<double>(used);
            double ss = 0.0;
            for (std::size_t c = 0; c < used; ++c) {
                const double d = jack[c] - mean;
                ss += d * d;
            }
            const double g = static_cast<double>(used);
            out.stderr_[j] = std::sqrt(std::max(0.0, (g - 1.0) / g * ss));
        } else {
            out.stderr_[j] = 0.0;
        }
    }
    return out;
}

std::size_t grid_index(const std::vector<double>& grid, double t) {
    const double tol = 1e-9 * std::max(1.0, std::fabs(t));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::fabs(grid[i] - t) <= tol) return i;
    }
    throw InsufficientData("grid point not present in ensemble: t = " + std::to_string(t));
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (out.empty() || x - out.back() > 1e-9 * std::max(1.0, std::fabs(x))) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace

void CorrCurve::validate() const {
    if (t_points.size() != corr.size() || t_points.size() != stderr_.size()) {
        throw InvalidParams("CorrCurve: column lengths differ");
    }
    for (std::size_t i = 0; i < t_points.size(); ++i) {
        if (i > 0 && !(t_points[i] > t_points[i - 1])) {
            throw InvalidParams("CorrCurve: t_points must be strictly increasing");
        }
        if (std::isfinite(corr[i]) && std::fabs(corr[i]) > 1.0) {
            throw InvalidParams("CorrCurve: correlation outside [-1, 1]");
        }
        if (stderr_[i] < 0.0) throw InvalidParams("CorrCurve: negative stderr");
    }
}

const char* to_string(Verdict v) {
    return v == Verdict::consistent ? "consistent" : "inconsistent";
}

std::pair<double, double> empirical_cov(const PathEnsemble& e, std::size_t s_index,
                                        std::size_t t_index) {
    const std::size_t R = e.n_rows;
    if (R < 2) throw InsufficientData("empirical_cov: need at least 2 replicates");
    if (s_index >= e.cols() || t_index >= e.cols()) {
        throw InsufficientData("empirical_cov: column index out of range");
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t r = 0; r < R; ++r) {
        mx += e.at(r, s_index);
        my += e.at(r, t_index);
    }
    mx /= static_cast<double>(R);
    my /= static_cast<double>(R);
    double c = 0.0, m22 = 0.0;
    for (std::size_t r = 0; r < R; ++r) {
        const double dx = e.at(r, s_index) - mx;
        const double dy = e.at(r, t_index) - my;
        c += dx * dy;
        m22 += dx * dx * dy * dy;
    }
    const double cov = c / static_cast<double>(R - 1);
    m22 /= static_cast<double>(R);
    const double var_cov = std::max(0.0, m22 - cov * cov) / static_cast<double>(R);
    return {cov, std::sqrt(var_cov)};
}

CorrCurve corr_curve(const PathEnsemble& e, double s, const std::vector<double>& t_points) {
    if (e.n_rows < 2) throw InsufficientData("corr_curve: need at least 2 replicates");
    const std::size_t si = grid_index(e.grid.t_grid, s);
    std::vector<std::size_t> ti(t_points.size());
    for (std::size_t j = 0; j < t_points.size(); ++j) {
        ti[j] = grid_index(e.grid.t_grid, t_points[j]);
    }
    const std::uint64_t n_chunks = (e.n_rows + kEnsembleChunk - 1) / kEnsembleChunk;
    std::vector<ChunkStats> chunks(n_chunks, ChunkStats(t_points.size()));
    std::vector<double> xt(t_points.size());
    for (std::size_t r = 0; r < e.n_rows; ++r) {
        for (std::size_t j = 0; j < ti.size(); ++j) xt[j] = e.at(r, ti[j]);
        chunks[r / kEnsembleChunk].add(e.at(r, si), xt.data(), xt.size());
    }
    CorrCurve c = curve_from_chunks(chunks, s, t_points);
    c.validate();
    return c;
}

SlopeFit fit_decay_exponent(const CorrCurve& curve, double target, double tolerance) {
    std::vector<double> xs, ys;
    int dropped = 0;
    for (std::size_t i = 0; i < curve.t_points.size(); ++i) {
        if (std::isfinite(curve.corr[i]) && curve.corr[i] > 0.0) {
            xs.push_back(std::log(curve.t_points[i]));
            ys.push_back(std::log(curve.corr[i]));
        } else {
            ++dropped;
        }
    }
    const int n = static_cast<int>(xs.size());
    if (n < 3) throw InsufficientData("fit_decay_exponent: fewer than 3 usable points");

    double xb = 0.0, yb = 0.0;
    for (int i = 0; i < n; ++i) {
        xb += xs[i];
        yb += ys[i];
    }
    xb /= n;
    yb /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - xb) * (xs[i] - xb);
        sxy += (xs[i] - xb) * (ys[i] - yb);
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = yb - fit.slope * xb;
    double rss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double e = ys[i] - fit.intercept - fit.slope * xs[i];
        rss += e * e;
    }
    fit.slope_stderr = (n > 2) ? std::sqrt(std::max(rss, 0.0) / (n - 2) / sxx) : 0.0;
    fit.n_used = n;
    fit.dropped = dropped;
    fit.target = target;
    fit.tolerance = tolerance;
    const double band = std::max(3.0 * fit.slope_stderr, tolerance);
    fit.verdict =
        (std::fabs(fit.fitted_h() - target) <= band) ? Verdict::consistent : Verdict::inconsistent;
    return fit;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw InvalidParams("log_spaced: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(n);
    const double r = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) out[i] = lo * std::exp(r * i);
    return out;
}

namespace {

DecayReport decay_pipeline(const MfppConfig& cfg, ReportOptions opt, bool srd) {
    cfg.validate();
    if (opt.paths < 2) throw InsufficientData("decay report: need at least 2 paths");
    const double s = opt.s;
    if (!(s > 0.0)) throw InvalidParams("decay report: s must be > 0");

    const double s_bar = srd ? s + cfg.delta : s;
    if (opt.window_lo <= 0.0) opt.window_lo = 50.0 * s_bar;
    if (opt.window_hi <= 0.0) opt.window_hi = 500.0 * s_bar;
    if (opt.n_points < 3) throw InvalidParams("decay report: need at least 3 window points");
    if (opt.window_lo <= s_bar) {
        throw InvalidParams("decay report: window must start after s (or s + delta)");
    }
    if (opt.tolerance <= 0.0) opt.tolerance = srd ? 0.15 : 0.1;

    const std::vector<double> t_points =
        log_spaced(opt.window_lo, opt.window_hi, opt.n_points);

    // observation grid
    std::vector<double> pts{s};
    if (srd) pts.push_back(s + cfg.delta);
    for (double t : t_points) {
        pts.push_back(t);
        if (srd) pts.push_back(t + cfg.delta);
    }
    SimGrid grid;
    grid.t_grid = sorted_unique(std::move(pts));
    grid.ds = opt.ds > 0.0 ? opt.ds : default_ds(grid.t_grid);
    grid.s_cap =
        opt.s_cap > 0.0 ? opt.s_cap : default_s_cap(cfg.params, grid.t_grid.back());
    opt.ds = grid.ds;
    opt.s_cap = grid.s_cap;
    validate_grid_params(grid, cfg.params);

    // column indices of the observables
    const std::size_t si = grid_index(grid.t_grid, s);
    const std::size_t si2 = srd ? grid_index(grid.t_grid, s + cfg.delta) : 0;
    std::vector<std::size_t> ti(t_points.size()), ti2(t_points.size());
    for (std::size_t j = 0; j < t_points.size(); ++j) {
        ti[j] = grid_index(grid.t_grid, t_points[j]);
        if (srd) ti2[j] = grid_index(grid.t_grid, t_points[j] + cfg.delta);
    }

    const std::uint64_t n_chunks = (opt.paths + kEnsembleChunk - 1) / kEnsembleChunk;
    std::vector<ChunkStats> chunks(n_chunks, ChunkStats(t_points.size()));
    parallel_chunks(opt.paths, kEnsembleChunk, opt.threads,
                    [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
                        std::vector<double> xt(t_points.size());
                        for (std::uint64_t r = begin; r < end; ++r) {
                            PathStreams streams = PathStreams::make(opt.seed, r);
                            const auto row = simulate_mfpp_path(cfg, grid, streams);
                            double xs;
                            if (srd) {
                                xs = static_cast<double>(row[si2] - row[si]);
                                for (std::size_t j = 0; j < ti.size(); ++j) {
                                    xt[j] = static_cast<double>(row[ti2[j]] - row[ti[j]]);
                                }
                            } else {
                                xs = static_cast<double>(row[si]);
                                for (std::size_t j = 0; j < ti.size(); ++j) {
                                    xt[j] = static_cast<double>(row[ti[j]]);
                                }
                            }
                            chunks[c].add(xs, xt.data(), xt.size());
                        }
                    });

    DecayReport rep;
    rep.kind = srd ? "srd" : "lrd";
    rep.config = cfg;
    rep.options = opt;
    rep.curve = curve_from_chunks(chunks, s, t_points);
    rep.curve.validate();
    const auto exps = theoretical_exponents(cfg.params);
    rep.fit = fit_decay_exponent(rep.curve, srd ? exps.second : exps.first, opt.tolerance);
    return rep;
}

}  // namespace

DecayReport lrd_report(const MfppConfig& cfg, const ReportOptions& opt) {
    return decay_pipeline(cfg, opt, false);
}

DecayReport srd_report(const MfppConfig& cfg, const ReportOptions& opt) {
    return decay_pipeline(cfg, opt, true);
}

}  // namespace mfpp
