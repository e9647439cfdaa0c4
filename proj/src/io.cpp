// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#include "mfpp/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "mfpp/errors.hpp"

namespace mfpp {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp-" + std::to_string(static_cast<unsigned>(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DomainError("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw DomainError("short write: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string csv_metadata(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string out = "# tool=mfpp\n# version=" + std::string(kToolVersion) + "\n";
    for (const auto& [k, v] : kv) out += "# " + k + "=" + v + "\n";
    return out;
}

namespace {

std::vector<std::pair<std::string, std::string>> config_kv(const MfppConfig& cfg) {
    return {
        {"alpha1", format_double(cfg.params.alpha1)},
        {"alpha2", format_double(cfg.params.alpha2)},
        {"c1", format_double(cfg.params.c1)},
        {"c2", format_double(cfg.params.c2)},
        {"lambda", format_double(cfg.lambda)},
        {"delta", format_double(cfg.delta)},
    };
}

void put_config(ordered_json& j, const MfppConfig& cfg) {
    j["alpha1"] = cfg.params.alpha1;
    j["alpha2"] = cfg.params.alpha2;
    j["c1"] = cfg.params.c1;
    j["c2"] = cfg.params.c2;
    j["lambda"] = cfg.lambda;
    j["delta"] = cfg.delta;
}

}  // namespace

std::string moment_report_csv(const MomentReport& r, const MfppConfig& cfg) {
    auto kv = config_kv(cfg);
    if (!r.covY_col.empty()) kv.emplace_back("cov_s", format_double(r.cov_s));
    std::string out = csv_metadata(kv);
    out += "t,U,varY,U_asym,varY_asym,mfpp_mean,mfpp_var";
    if (!r.covY_col.empty()) out += ",covY,mfpp_cov";
    out += "\n";
    for (std::size_t i = 0; i < r.t_grid.size(); ++i) {
        out += format_double(r.t_grid[i]) + "," + format_double(r.U[i]) + "," +
               format_double(r.varY[i]) + "," + format_double(r.U_asym[i]) + "," +
               format_double(r.varY_asym[i]) + "," + format_double(r.mfpp_mean_col[i]) + "," +
               format_double(r.mfpp_var_col[i]);
        if (!r.covY_col.empty()) {
            out += "," + format_double(r.covY_col[i]) + "," + format_double(r.mfpp_cov_col[i]);
        }
        out += "\n";
    }
    return out;
}

std::string moment_report_json(const MomentReport& r, const MfppConfig& cfg) {
    ordered_json j;
    j["tool"] = "mfpp";
    j["version"] = kToolVersion;
    put_config(j, cfg);
    j["t"] = r.t_grid;
    j["u"] = r.U;
    j["var_y"] = r.varY;
    j["u_asym"] = r.U_asym;
    j["var_y_asym"] = r.varY_asym;
    j["mfpp_mean"] = r.mfpp_mean_col;
    j["mfpp_var"] = r.mfpp_var_col;
    if (!r.covY_col.empty()) {
        j["cov_s"] = r.cov_s;
        j["cov_y"] = r.covY_col;
        j["mfpp_cov"] = r.mfpp_cov_col;
    }
    return j.dump(2) + "\n";
}

std::string ensemble_csv(const PathEnsemble& e) {
    std::string out = csv_metadata({
        {"kind", e.kind == PathKind::inverse_subordinator
                     ? "inverse_subordinator"
                     : (e.kind == PathKind::mfpp ? "mfpp" : "mfpn")},
        {"alpha1", format_double(e.params.alpha1)},
        {"alpha2", format_double(e.params.alpha2)},
        {"c1", format_double(e.params.c1)},
        {"c2", format_double(e.params.c2)},
        {"lambda", format_double(e.lambda)},
        {"delta", format_double(e.delta)},
        {"ds", format_double(e.grid.ds)},
        {"s_cap", format_double(e.grid.s_cap)},
        {"paths", std::to_string(e.n_rows)},
        {"seed", std::to_string(e.seed)},
    });
    out += "replicate,t,value\n";
    for (std::size_t r = 0; r < e.n_rows; ++r) {
        for (std::size_t j = 0; j < e.cols(); ++j) {
            out += std::to_string(r) + "," + format_double(e.grid.t_grid[j]) + "," +
                   format_double(e.at(r, j)) + "\n";
        }
    }
    return out;
}

namespace {

void append_raw(std::string& s, const void* p, std::size_t n) {
    s.append(static_cast<const char*>(p), n);
}

}  // namespace

std::string ensemble_summary(const PathEnsemble& e) {
    std::string out = "MFPPSUM1";
    const std::uint64_t n_pts = e.cols();
    const std::uint64_t n_paths = e.n_rows;
    append_raw(out, &n_pts, 8);
    append_raw(out, &n_paths, 8);
    for (std::size_t j = 0; j < e.cols(); ++j) {
        double sum = 0.0, sum_sq = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t r = 0; r < e.n_rows; ++r) {
            const double v = e.at(r, j);
            sum += v;
            sum_sq += v * v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        const double t = e.grid.t_grid[j];
        append_raw(out, &t, 8);
        append_raw(out, &sum, 8);
        append_raw(out, &sum_sq, 8);
        append_raw(out, &lo, 8);
        append_raw(out, &hi, 8);
    }
    return out;
}

std::string decay_report_json(const DecayReport& rep) {
    ordered_json j;
    j["tool"] = "mfpp";
    j["version"] = kToolVersion;
    j["kind"] = rep.kind;
    put_config(j, rep.config);
    j["s"] = rep.options.s;
    j["window_lo"] = rep.options.window_lo;
    j["window_hi"] = rep.options.window_hi;
    j["n_points"] = rep.options.n_points;
    j["paths"] = rep.options.paths;
    j["seed"] = rep.options.seed;
    j["ds"] = rep.options.ds;
    j["s_cap"] = rep.options.s_cap;
    j["slope"] = rep.fit.slope;
    j["intercept"] = rep.fit.intercept;
    j["slope_stderr"] = rep.fit.slope_stderr;
    j["n_used"] = rep.fit.n_used;
    j["dropped"] = rep.fit.dropped;
    j["target"] = rep.fit.target;
    j["tolerance"] = rep.fit.tolerance;
    j["fitted_h"] = rep.fit.fitted_h();
    j["verdict"] = to_string(rep.fit.verdict);
    ordered_json curve;
    curve["t"] = rep.curve.t_points;
    curve["corr"] = rep.curve.corr;
    curve["stderr"] = rep.curve.stderr_;
    curve["n_paths"] = rep.curve.n_paths;
    j["curve"] = curve;
    return j.dump(2) + "\n";
}

std::string decay_curve_csv(const DecayReport& rep) {
    auto kv = config_kv(rep.config);
    kv.emplace_back("kind", rep.kind);
    kv.emplace_back("s", format_double(rep.options.s));
    kv.emplace_back("paths", std::to_string(rep.options.paths));
    kv.emplace_back("seed", std::to_string(rep.options.seed));
    kv.emplace_back("ds", format_double(rep.options.ds));
    std::string out = csv_metadata(kv);
    out += "t,corr,stderr\n";
    for (std::size_t i = 0; i < rep.curve.t_points.size(); ++i) {
        out += format_double(rep.curve.t_points[i]) + "," + format_double(rep.curve.corr[i]) +
               "," + format_double(rep.curve.stderr_[i]) + "\n";
    }
    return out;
}

}  // namespace mfpp
