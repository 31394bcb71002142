// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <ostream>

#include "cli/config.hpp"
#include "json.hpp"

namespace vf::cli {

/// Relative tolerance shared by every invariant in a report.
inline constexpr double kReportTol = 1e-8;

/// Writes the experiment artifacts under out_root (joined with the config's
/// output dir when set) and returns the report that was written.
nlohmann::json run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_root);

/// Recomputes every invariant from the artifacts next to the report and
/// prints `invariant,status,value,tolerance,note` rows. True when none fail.
bool verify_run(const std::filesystem::path& report_path, std::ostream& out);

}  // namespace vf::cli
