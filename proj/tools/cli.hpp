// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qpm::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kBadInput = 2 };

/// Runs the `qpm` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpm::cli
