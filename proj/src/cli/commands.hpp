// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "vf/spectral.hpp"

namespace vf::cli {

/// Exit codes: 0 success, 1 failed verification, 2 invalid input or
/// configuration, 3 any other error. CLI11 usage errors keep CLI11's codes.
int run_cli(int argc, char** argv);

/// "first-last:index[:amplitude]" items separated by commas, 1-based.
std::vector<SignalSegment> parse_segments(const std::string& text);

}  // namespace vf::cli
