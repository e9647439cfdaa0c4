// Copyright (c) 2026 the mfpp developers.
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "mfpp/cli.hpp"

int main(int argc, char** argv) {
    return mfpp::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
