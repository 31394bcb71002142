// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vf/spectral.hpp"

namespace vf::cli {

struct GraphSpec {
  std::string kind = "swiss-roll";  // swiss-roll | path | cycle | directed-cycle | file
  int n = 100;
  std::uint64_t seed = 1;
  double alpha = 20.0;
  int kappa = 7;
  std::string file;
};

struct SignalSpec {
  std::vector<SignalSegment> segments;
  std::string file;
  std::optional<double> noise_snr_db;
  std::uint64_t noise_seed = 1;
};

struct TransformSpec {
  std::string form = "rihaczek";  // rihaczek | rid | lgft-window | lgft-bank | wavelet
  std::string basis = "laplacian";
  std::string window = "heat";    // heat | hann | rectangular
  double tau = 3.0;
  int D = 3;
  std::string bank = "raised-cosine";
  int K = 15;
  bool squared = false;
  double scale_factor = 2.0;
  int order = 0;  // Chebyshev terms; 0 uses the eigendecomposition
  std::string kernel = "sinc";
  bool reassign = false;
  std::optional<double> threshold;
  std::vector<double> focus;
  double focus_width = 0.1;
};

struct ExperimentConfig {
  GraphSpec graph;
  SignalSpec signal;
  TransformSpec transform;
  std::string output_dir;
  std::filesystem::path source;  // directory of the config file
};

/// Parses the flat `[section]` / `key = value` format. Values use JSON
/// syntax (numbers, "strings", true/false, nested arrays); `#` starts a
/// comment. Errors carry `name:line: message`.
ExperimentConfig parse_config(const std::string& text, const std::string& name = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace vf::cli
