// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_IO_HPP
#define MFPP_IO_HPP

#include <string>
#include <vector>

#include "mfpp/estimation.hpp"
#include "mfpp/moments.hpp"
#include "mfpp/simulation.hpp"

namespace mfpp {

inline constexpr const char* kToolVersion = "0.1.0";

/// Round-trippable decimal formatting ("%.17g").
std::string format_double(double v);

/// Write `content` to `path` atomically (temp file + rename).
void atomic_write(const std::string& path, const std::string& content);

/// '#'-prefixed metadata record echoing a parameter set, one key=value per
/// line. Execution details that do not affect the numbers (thread count)
/// are deliberately not part of it.
std::string csv_metadata(const std::vector<std::pair<std::string, std::string>>& kv);

std::string moment_report_csv(const MomentReport& r, const MfppConfig& cfg);
std::string moment_report_json(const MomentReport& r, const MfppConfig& cfg);

/// Ensemble as CSV rows `replicate,t,value` (replicate-major order).
std::string ensemble_csv(const PathEnsemble& e);

/// Compact binary summary: "MFPPSUM1", then point count and path count
/// (uint64 little-endian), then per grid point t, sum, sum-of-squares,
/// min, max as doubles.
std::string ensemble_summary(const PathEnsemble& e);

std::string decay_report_json(const DecayReport& rep);
std::string decay_curve_csv(const DecayReport& rep);

}  // namespace mfpp

#endif  // MFPP_IO_HPP
