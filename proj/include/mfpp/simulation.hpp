// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_SIMULATION_HPP
#define MFPP_SIMULATION_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "mfpp/moments.hpp"
#include "mfpp/rng.hpp"

namespace mfpp {

/// Observation grid plus the operational-time discretization of the
/// subordinator walk. `s_cap <= 0` selects the default
/// 10 * max(t)^{a2} / (C2 Gamma(1+a2)) (alpha1 analogue when C2 = 0).
struct SimGrid {
    std::vector<double> t_grid;  // strictly increasing, >= 0
    double ds = 1e-3;            // operational-time step
    double s_cap = 0.0;          // abort threshold on operational time

    void validate() const;
};

enum class PathKind { inverse_subordinator, mfpp, mfpn };

/// R sampled rows over a common grid, row-major.
struct PathEnsemble {
    SimGrid grid;
    PathKind kind = PathKind::inverse_subordinator;
    std::uint64_t seed = 0;
    MixedStableParams params;
    double lambda = 0.0;
    double delta = 0.0;
    std::size_t n_rows = 0;
    std::vector<double> values;  // n_rows x t_grid.size()

    std::size_t cols() const { return grid.t_grid.size(); }
    double at(std::size_t row, std::size_t col) const { return values[row * cols() + col]; }
};

/// The per-replicate RNG substreams (fixed labels; worker-count independent).
struct PathStreams {
    SplitMix64 comp1, comp2, poisson;
    static PathStreams make(std::uint64_t master_seed, std::uint64_t replicate) {
        return {substream(master_seed, replicate, StreamLabel::subordinator_comp1),
                substream(master_seed, replicate, StreamLabel::subordinator_comp2),
                substream(master_seed, replicate, StreamLabel::poisson_layer)};
    }
};

/// One-sided alpha-stable increment with Laplace transform e^{-ds u^alpha},
/// 0 < alpha < 1 (Kanter's construction: one uniform, one exponential).
double sample_stable_increment(double alpha, double ds, SplitMix64& rng);

/// Increment of the mixed subordinator over operational time ds:
/// C1^{1/a1} X1 + C2^{1/a2} X2 with independent stable components.
double sample_mixed_increment(const MixedStableParams& p, double ds,
                              SplitMix64& comp1, SplitMix64& comp2);

/// Poisson variate (exact; inversion for small means, PTRS for large).
long long poisson_sample(double mean, SplitMix64& rng);

/// One row of Y values: walk L on the ds lattice, report the left lattice
/// point at each first crossing (one-sided discretization bias in [-ds, 0]).
std::vector<double> simulate_inverse_path(const MixedStableParams& p, const SimGrid& grid,
                                          PathStreams& streams);

/// One row of MFPP counts: conditionally independent Poisson increments
/// with means lambda * (Y(t_j) - Y(t_{j-1})) on the sampled Y row.
std::vector<long long> simulate_mfpp_path(const MfppConfig& cfg, const SimGrid& grid,
                                          PathStreams& streams);

/// MFPN row from an MFPP count row: Z(t) = N(t+delta) - N(t) for every grid
/// point whose partner t+delta is also on the grid. Throws GridMismatch if
/// any requested base point has no partner.
std::vector<long long> mfpn_from_mfpp(const std::vector<long long>& counts,
                                      const SimGrid& grid, double delta,
                                      const std::vector<std::size_t>& base_indices);

/// Convenience: all base points with a partner (GridMismatch when none).
std::vector<long long> mfpn_from_mfpp(const std::vector<long long>& counts,
                                      const SimGrid& grid, double delta);

/// Non-homogeneous variant: counts with Poisson means
/// Lambda(Y(t_j)) - Lambda(Y(t_{j-1})); Lambda must be nondecreasing with
/// Lambda(0) = 0 (NonMonotoneLambda if it decreases on the sampled values).
std::vector<long long> simulate_mfnpp_path(const MixedStableParams& p,
                                           const std::function<double(double)>& Lambda,
                                           const SimGrid& grid, PathStreams& streams);

/// Deterministic chunked parallel driver: replicates are processed in
/// fixed-size chunks; `work(chunk_index, begin, end)` owns chunk
/// `chunk_index` exclusively. Results must be combined in chunk order by
/// the caller; output is then independent of `threads`.
void parallel_chunks(std::uint64_t n, std::uint64_t chunk_size, int threads,
                     const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)>& work);

/// Fixed chunk size used by all ensemble aggregation.
constexpr std::uint64_t kEnsembleChunk = 4096;

/// Materialized ensembles (for moderate R; CSV export, empirical moments).
PathEnsemble simulate_ensemble_Y(const MixedStableParams& p, const SimGrid& grid,
                                 std::size_t n_paths, std::uint64_t seed, int threads);
PathEnsemble simulate_ensemble_mfpp(const MfppConfig& cfg, const SimGrid& grid,
                                    std::size_t n_paths, std::uint64_t seed, int threads);
/// Z rows for every (t, t+delta) pair on the grid.
PathEnsemble simulate_ensemble_mfpn(const MfppConfig& cfg, const SimGrid& grid,
                                    std::size_t n_paths, std::uint64_t seed, int threads);

/// Default abort threshold (10x the large-t scale of E[Y]).
double default_s_cap(const MixedStableParams& p, double t_max);

/// Default operational step: 1e-3 times the smallest grid spacing.
double default_ds(const std::vector<double>& t_grid);

void validate_grid_params(const SimGrid& grid, const MixedStableParams& p);

}  // namespace mfpp

#endif  // MFPP_SIMULATION_HPP
