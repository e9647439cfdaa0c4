// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#include "mfpp/cli.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfpp/errors.hpp"
#include "mfpp/estimation.hpp"
#include "mfpp/io.hpp"
#include "mfpp/moments.hpp"
#include "mfpp/simulation.hpp"
#include "mfpp/special_functions.hpp"

namespace mfpp::cli {
namespace {

struct ParamsOpts {
    double alpha1 = 0.9, alpha2 = 0.5, c1 = 0.5;
    double c2 = -1.0;  // default: 1 - c1

    MixedStableParams resolve() const {
        MixedStableParams p{alpha1, alpha2, c1, c2 < 0.0 ? 1.0 - c1 : c2};
        p.validate();
        return p;
    }
};

void add_params(CLI::App* app, ParamsOpts& p) {
    app->add_option("--alpha1", p.alpha1, "larger stable index (0,1)")->required();
    app->add_option("--alpha2", p.alpha2, "smaller stable index (0,1)")->required();
    app->add_option("--c1", p.c1, "weight of the alpha1 component")->required();
    app->add_option("--c2", p.c2, "weight of the alpha2 component (default 1-c1)");
}

struct GridOpts {
    double t_min = 0.1, t_max = 100.0;
    int points = 20;
    std::string spacing = "log";

    std::vector<double> resolve() const {
        if (points < 1) throw InvalidParams("grid: points must be >= 1");
        if (!(t_max > t_min)) throw InvalidParams("grid: need t-max > t-min");
        std::vector<double> g(points);
        if (points == 1) {
            g[0] = t_min;
        } else if (spacing == "log") {
            if (!(t_min > 0.0)) throw InvalidParams("grid: log spacing needs t-min > 0");
            const double r = std::log(t_max / t_min) / (points - 1);
            for (int i = 0; i < points; ++i) g[i] = t_min * std::exp(r * i);
        } else {
            const double h = (t_max - t_min) / (points - 1);
            for (int i = 0; i < points; ++i) g[i] = t_min + h * i;
        }
        return g;
    }
};

void add_grid(CLI::App* app, GridOpts& g) {
    app->add_option("--t-min", g.t_min, "first observation time")->required();
    app->add_option("--t-max", g.t_max, "last observation time")->required();
    app->add_option("--points", g.points, "number of grid points")->required();
    app->add_option("--spacing", g.spacing, "grid spacing: linear|log")
        ->check(CLI::IsMember({"linear", "log"}));
}

int run_impl(const std::vector<std::string>& args) {
    CLI::App app{"mixed fractional Poisson process toolkit"};
    app.require_subcommand(1);

    // --- ml ---------------------------------------------------------------
    MlArgs ml_args;
    auto* ml_cmd = app.add_subcommand("ml", "evaluate the Mittag-Leffler family");
    ml_cmd->add_option("--alpha", ml_args.alpha)->required();
    ml_cmd->add_option("--beta", ml_args.beta)->required();
    ml_cmd->add_option("--gamma", ml_args.gamma, "Prabhakar power (default 1)");
    ml_cmd->add_option("--x", ml_args.x)->required();

    // --- moments ------------------------------------------------------------
    ParamsOpts mo_params;
    GridOpts mo_grid;
    double mo_lambda = 1.0, mo_delta = 1.0, mo_s = -1.0;
    std::string mo_out, mo_format = "csv";
    auto* mo_cmd = app.add_subcommand("moments", "analytic moment tables");
    add_params(mo_cmd, mo_params);
    add_grid(mo_cmd, mo_grid);
    mo_cmd->add_option("--lambda", mo_lambda, "Poisson rate")->required();
    mo_cmd->add_option("--delta", mo_delta, "MFPN lag (default 1)");
    mo_cmd->add_option("--s", mo_s, "fixed earlier time for covariance columns");
    mo_cmd->add_option("--out", mo_out, "output file")->required();
    mo_cmd->add_option("--format", mo_format)->check(CLI::IsMember({"csv", "json"}));

    // --- simulate -----------------------------------------------------------
    ParamsOpts si_params;
    GridOpts si_grid;
    std::string si_kind = "y";
    double si_lambda = 1.0, si_delta = 1.0, si_ds = 0.0, si_scap = 0.0;
    std::uint64_t si_paths = 0, si_seed = 0;
    int si_threads = 0;
    std::string si_out, si_format = "csv";
    auto* si_cmd = app.add_subcommand("simulate", "sample path ensembles");
    add_params(si_cmd, si_params);
    add_grid(si_cmd, si_grid);
    si_cmd->add_option("--kind", si_kind, "y|mfpp|mfpn")
        ->check(CLI::IsMember({"y", "mfpp", "mfpn"}));
    si_cmd->add_option("--lambda", si_lambda, "Poisson rate (mfpp/mfpn)");
    si_cmd->add_option("--delta", si_delta, "increment lag (mfpn)");
    si_cmd->add_option("--ds", si_ds, "operational-time step (default 1e-3 x min spacing)");
    si_cmd->add_option("--s-cap", si_scap, "operational-time abort threshold");
    si_cmd->add_option("--paths", si_paths, "number of replicates")->required();
    si_cmd->add_option("--seed", si_seed, "master seed (required: reproducibility)")->required();
    si_cmd->add_option("--threads", si_threads, "worker threads (0 = auto)");
    si_cmd->add_option("--out", si_out)->required();
    si_cmd->add_option("--format", si_format)->check(CLI::IsMember({"csv", "summary"}));

    // --- lrd / srd ------------------------------------------------------------
    struct DecayOpts {
        ParamsOpts params;
        double lambda = 1.0, delta = 1.0;
        ReportOptions ropt;
        std::string out, curve_out;
    };
    DecayOpts dec[2];
    CLI::App* dec_cmd[2];
    const char* dec_name[2] = {"lrd", "srd"};
    const char* dec_desc[2] = {"fit the MFPP correlation decay exponent",
                               "fit the MFPN correlation decay exponent"};
    for (int i = 0; i < 2; ++i) {
        auto* c = app.add_subcommand(dec_name[i], dec_desc[i]);
        dec_cmd[i] = c;
        add_params(c, dec[i].params);
        c->add_option("--lambda", dec[i].lambda, "Poisson rate")->required();
        c->add_option("--delta", dec[i].delta, "increment lag");
        c->add_option("--s", dec[i].ropt.s, "fixed earlier time (default 1)");
        c->add_option("--window-lo", dec[i].ropt.window_lo, "fit window start");
        c->add_option("--window-hi", dec[i].ropt.window_hi, "fit window end");
        c->add_option("--points", dec[i].ropt.n_points, "fit points (default 8)");
        c->add_option("--ds", dec[i].ropt.ds, "operational-time step");
        c->add_option("--s-cap", dec[i].ropt.s_cap, "operational-time cap");
        c->add_option("--tolerance", dec[i].ropt.tolerance, "verdict tolerance");
        c->add_option("--paths", dec[i].ropt.paths, "replicates")->required();
        c->add_option("--seed", dec[i].ropt.seed, "master seed")->required();
        c->add_option("--threads", dec[i].ropt.threads, "workers (0 = auto)");
        c->add_option("--out", dec[i].out, "SlopeFit JSON output")->required();
        c->add_option("--curve-out", dec[i].curve_out, "correlation curve CSV");
    }

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);

    if (ml_cmd->parsed()) {
        ml_args.validate();
        const EvalResult r = (ml_args.gamma == 1.0)
                                 ? ml2(ml_args.alpha, ml_args.beta, ml_args.x)
                                 : ml3(ml_args.alpha, ml_args.beta, ml_args.gamma, ml_args.x);
        std::printf("%s %s est_abs_error=%.3g\n", format_double(r.value).c_str(),
                    to_string(r.regime), r.est_abs_error);
        return 0;
    }

    if (mo_cmd->parsed()) {
        MfppConfig cfg{mo_params.resolve(), mo_lambda, mo_delta};
        const auto grid = mo_grid.resolve();
        const double* sp = mo_s >= 0.0 ? &mo_s : nullptr;
        const MomentReport rep = build_moment_report(cfg, grid, sp);
        atomic_write(mo_out, mo_format == "json" ? moment_report_json(rep, cfg)
                                                 : moment_report_csv(rep, cfg));
        return 0;
    }

    if (si_cmd->parsed()) {
        const MixedStableParams p = si_params.resolve();
        SimGrid grid;
        grid.t_grid = si_grid.resolve();
        grid.ds = si_ds > 0.0 ? si_ds : default_ds(grid.t_grid);
        grid.s_cap = si_scap;
        PathEnsemble e;
        if (si_kind == "y") {
            e = simulate_ensemble_Y(p, grid, si_paths, si_seed, si_threads);
        } else {
            MfppConfig cfg{p, si_lambda, si_delta};
            e = (si_kind == "mfpp") ? simulate_ensemble_mfpp(cfg, grid, si_paths, si_seed, si_threads)
                                    : simulate_ensemble_mfpn(cfg, grid, si_paths, si_seed, si_threads);
        }
        atomic_write(si_out, si_format == "summary" ? ensemble_summary(e) : ensemble_csv(e));
        return 0;
    }

    for (int i = 0; i < 2; ++i) {
        if (!dec_cmd[i]->parsed()) continue;
        MfppConfig cfg{dec[i].params.resolve(), dec[i].lambda, dec[i].delta};
        const DecayReport rep =
            (i == 0) ? lrd_report(cfg, dec[i].ropt) : srd_report(cfg, dec[i].ropt);
        atomic_write(dec[i].out, decay_report_json(rep));
        if (!dec[i].curve_out.empty()) atomic_write(dec[i].curve_out, decay_curve_csv(rep));
        std::printf("%s: fitted_h=%s target=%s slope_stderr=%s verdict=%s\n", rep.kind.c_str(),
                    format_double(rep.fit.fitted_h()).c_str(),
                    format_double(rep.fit.target).c_str(),
                    format_double(rep.fit.slope_stderr).c_str(), to_string(rep.fit.verdict));
        return 0;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    try {
        return run_impl(args);
    } catch (const CLI::CallForHelp& e) {
        std::cout << e.what() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "mfpp: " << e.what() << "\n";
        return 1;
    } catch (const InvalidParams& e) {
        std::cerr << "mfpp: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "mfpp: " << e.what() << "\n";
        return 1;
    } catch (const GridMismatch& e) {
        std::cerr << "mfpp: " << e.what() << "\n";
        return 1;
    } catch (const DegenerateRegime& e) {
        std::cerr << "mfpp: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {  // NoConvergence, SCapExceeded, ...
        std::cerr << "mfpp: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mfpp::cli
