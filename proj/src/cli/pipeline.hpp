// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <filesystem>
#include <optional>
#include <string>

#include "cli/config.hpp"
#include "json.hpp"
#include "vf/graph.hpp"
#include "vf/lgft.hpp"
#include "vf/polyops.hpp"
#include "vf/spectral.hpp"
#include "vf/windows.hpp"

namespace vf::cli {

namespace fs = std::filesystem;

/// `p` if absolute, otherwise base / p.
fs::path resolve(const fs::path& base, const fs::path& p);

Graph make_graph(const GraphSpec& spec, const fs::path& base, int* kappa_used = nullptr);

Eigen::VectorXd make_signal(const SignalSpec& spec, const SpectralBasis& basis,
                            const fs::path& base);

/// Seeded N(0, 1) noise rescaled so that the result has exactly the given SNR.
Eigen::VectorXd add_noise(const Eigen::VectorXd& x, double snr_db, std::uint64_t seed);

TransferBank make_bank(const std::string& kind, int K, double lambda_max, bool squared,
                       double scale_factor, const std::vector<double>& focus = {},
                       double focus_width = 0.1);
TransferBank make_bank(const TransformSpec& t, double lambda_max);

VertexWindowSet make_windows(const TransformSpec& t, const Graph& g, const SpectralBasis& basis);

/// The map written by `run` together with what is needed to check it.
struct Representation {
  VertexFrequencyMap map;
  bool is_energy = false;  // map holds E(n, k) rather than coefficients
  std::optional<TransferBank> bank;
  std::optional<ChebyshevApprox> approx;  // polynomial mode
  std::optional<VertexWindowSet> windows;
  /// Energy the unreassigned map must carry; empty when no identity applies.
  std::optional<double> expected_energy;
};

Representation compute_representation(const TransformSpec& t, const Graph& g,
                                       const SpectralBasis& basis, const Eigen::VectorXd& x);

/// Real part of E for energy maps, |S|^2 otherwise.
Eigen::MatrixXd energy_matrix(const VertexFrequencyMap& map, bool is_energy);

/// Inverse of the representation, or empty when none applies.
std::optional<Eigen::VectorXd> invert(const Representation& rep, const SpectralBasis& basis);

/// Long-format `axis,index,value` with 1-based indices.
void write_marginals(const fs::path& path, const Marginals& m);
Marginals read_marginals(const fs::path& path);

nlohmann::json to_json(const TransformSpec& t);
TransformSpec transform_from_json(const nlohmann::json& j);

}  // namespace vf::cli
