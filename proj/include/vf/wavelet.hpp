// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "vf/graph.hpp"
#include "vf/polyops.hpp"
#include "vf/spectral.hpp"
#include "vf/windows.hpp"

namespace vf {

/// W(m, i): column 0 is the low-pass (scaling) response, column k the
/// response at scale s_{K-k}.
struct WaveletCoefficients {
  Eigen::MatrixXd W;
  TransferBank bank;

  int scales() const noexcept { return bank.K; }
};

/// W(m, s_i) = sum_p H(s_i lambda_p) X(p) u_p(m) plus the scaling column.
WaveletCoefficients wavelet_transform(const Eigen::VectorXd& x, const SpectralBasis& basis,
                                      double M, int K);
/// Same kernels through Chebyshev fits with `terms` coefficients.
WaveletCoefficients wavelet_transform_polynomial(const Eigen::VectorXd& x, const Graph& g,
                                                 double lambda_max, double M, int K,
                                                 int terms, const ApplyOptions& options = {});

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;

  bool tight(double tol = 1e-8) const noexcept;
};

/// g(lambda) = sum_k H_k(lambda)^2 at the given points.
Eigen::VectorXd frame_function(const TransferBank& bank, const Eigen::VectorXd& lambdas);
/// min / max of g over the eigenvalues.
FrameBounds frame_bounds(const TransferBank& bank, const SpectralBasis& basis);
/// min / max of g over the eigenvalues and a uniform grid of `points`.
FrameBounds frame_bounds_grid(const TransferBank& bank, const SpectralBasis& basis,
                              int points = 1000);
/// min / max of sum_k P_k(lambda)^2 for a polynomial approximation.
FrameBounds frame_bounds_grid(const ChebyshevApprox& approx, const Eigen::VectorXd& lambdas);

/// x = sum_i sum_p H_i(lambda_p) W_i^(p) u_p. Refuses a non-tight bank unless
/// `correct` is set, in which case the response is divided by g(lambda_p).
Eigen::VectorXd wavelet_inverse(const WaveletCoefficients& coeffs, const SpectralBasis& basis,
                                bool correct = false);

}  // namespace vf
