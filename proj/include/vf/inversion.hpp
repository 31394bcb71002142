// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <functional>

#include "vf/lgft.hpp"
#include "vf/spectral.hpp"
#include "vf/windows.hpp"

namespace vf {

/// Tolerance used by every admissibility check.
inline constexpr double kConditionTol = 1e-8;

/// x(n) = sum_m sum_k S(m,k) u_k(n) / sum_m h_m(n), sums over the map's rows.
Eigen::VectorXcd invert_summation(const VertexFrequencyMap& map,
                                  const VertexWindowSet& windows, const SpectralBasis& basis);

/// x = sum_k s_k; requires sum_k H_k(lambda_p) = 1.
Eigen::VectorXd invert_band_sum(const VertexFrequencyMap& map, const TransferBank& bank,
                                const SpectralBasis& basis);

/// x(n) = sum_m sum_k S(m,k) h_m(n) u_k(n) / sum_m h_m(n)^2.
Eigen::VectorXcd invert_kernel(const VertexFrequencyMap& map, const VertexWindowSet& windows,
                               const SpectralBasis& basis);

/// x = sum_k H_k(L) s_k; requires sum_k H_k(lambda_p)^2 = 1.
Eigen::VectorXd invert_kernel(const VertexFrequencyMap& map, const TransferBank& bank,
                              const SpectralBasis& basis);

/// Entries in [0, 1], same shape as the map.
using FilterMask = Eigen::MatrixXd;

/// B(m,k) = 1 where |S(m,k)| >= T.
FilterMask threshold_mask(const VertexFrequencyMap& map, double T);

using Inverter = std::function<Eigen::VectorXd(const VertexFrequencyMap&)>;

/// Inverts the masked map S o B.
Eigen::VectorXd vertex_varying_filter(const VertexFrequencyMap& map, const FilterMask& mask,
                                      const Inverter& inverter);

/// 10 log10(||ref||^2 / ||ref - est||^2).
double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate);

struct ThresholdChoice {
  double T = 0.0;
  double snr_out = 0.0;
  Eigen::VectorXd filtered;
};

/// Threshold maximizing output SNR over a uniform grid on [0, max |S|].
ThresholdChoice tune_threshold(const VertexFrequencyMap& map, const Inverter& inverter,
                               const Eigen::VectorXd& clean, int grid_points = 400);

}  // namespace vf
