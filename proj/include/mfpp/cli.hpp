// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFPP_CLI_HPP
#define MFPP_CLI_HPP

#include <string>
#include <vector>

namespace mfpp::cli {

/// Run one CLI invocation. Exit codes: 0 success, 1 validation/usage error
/// (one-line diagnostic on stderr), 2 numeric failure (NoConvergence,
/// SCapExceeded, ...). Output files are written atomically.
int run(const std::vector<std::string>& args);

}  // namespace mfpp::cli

#endif  // MFPP_CLI_HPP
