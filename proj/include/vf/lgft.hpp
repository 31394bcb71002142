// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include "vf/graph.hpp"
#include "vf/polyops.hpp"
#include "vf/spectral.hpp"
#include "vf/windows.hpp"

namespace vf {

enum class MapAxis { spectral_index, band_index, eigenvalue_assigned };

std::string_view to_string(MapAxis axis) noexcept;

/// S(m, k): rows are vertices (or the chosen vertex subset), columns are
/// spectral indices or bands.
struct VertexFrequencyMap {
  Eigen::MatrixXcd S;
  MapAxis axis = MapAxis::spectral_index;
  std::vector<int> vertices;        // 0-based vertex of each row
  std::vector<double> band_centers; // band axis only

  int rows() const noexcept { return static_cast<int>(S.rows()); }
  int cols() const noexcept { return static_cast<int>(S.cols()); }
  /// Real part; throws when the imaginary part exceeds tol * max |S|.
  Eigen::MatrixXd real(double tol = 1e-10) const;
  double max_imag() const;
};

/// S(m, k) = sum_n x(n) h_m(n) u_k^*(n) for m in `vertices` (all if empty).
VertexFrequencyMap lgft_window(const Eigen::VectorXd& x, const VertexWindowSet& windows,
                               const SpectralBasis& basis,
                               const std::vector<int>& vertices = {});
VertexFrequencyMap lgft_window(const Eigen::VectorXcd& x, const VertexWindowSet& windows,
                               const SpectralBasis& basis,
                               const std::vector<int>& vertices = {});

/// Kernel H_{m,k}(n) = h_m(n) u_k(n) as a length-N vector.
Eigen::VectorXcd lgft_kernel(const VertexWindowSet& windows, const SpectralBasis& basis,
                             int m, int k);

/// Window over spectral index offsets: H(d) = taps[d + origin] when the
/// index is in range, 0 otherwise.
struct IndexWindow {
  std::vector<double> taps;
  int origin = 0;

  double at(int offset) const noexcept;
};

/// Samples exp(-d^2 / (2 sigma^2)) for |d| <= half_width.
IndexWindow gaussian_index_window(int half_width, double sigma);

/// S(m, k) = sum_p X(p) H(k - p) u_p(m).
VertexFrequencyMap lgft_spectral_shift(const Eigen::VectorXcd& spectrum,
                                       const IndexWindow& window, const SpectralBasis& basis);

/// Column k is s_k = H_k(L) x. The spectral form uses the basis; the
/// polynomial form applies a Chebyshev fit with `terms` coefficients through
/// the sparse Laplacian.
VertexFrequencyMap lgft_bank(const Eigen::VectorXd& x, const TransferBank& bank,
                             const SpectralBasis& basis);
VertexFrequencyMap lgft_bank_polynomial(const Eigen::VectorXd& x, const TransferBank& bank,
                                        const Graph& g, int terms,
                                        const ApplyOptions& options = {});

/// Keeps S(m, k*) with k* = argmax_k |S(m, k)| (lowest k on ties).
VertexFrequencyMap reassign(const VertexFrequencyMap& map);
/// Argmax column of each row.
std::vector<int> ridge(const VertexFrequencyMap& map);

Eigen::MatrixXd spectrogram(const VertexFrequencyMap& map);

struct Marginals {
  Eigen::VectorXd vertex;     // row sums
  Eigen::VectorXd frequency;  // column sums
};

Marginals marginals(const Eigen::MatrixXd& P);

/// ||S||_1 / ||S||_F.
double concentration(const VertexFrequencyMap& map);
double concentration(const Eigen::MatrixXcd& S);

/// Concentration of the heat-window LGFT of x.
double heat_concentration(const Eigen::VectorXd& x, const SpectralBasis& basis, double tau);

struct TauOptions {
  double tau0 = 1.0;
  double alpha = 1.0;
  double tol = 1e-4;
  int max_iter = 100;
};

struct TauResult {
  double tau = 0.0;
  double measure = 0.0;
  std::vector<std::pair<double, double>> trace;  // (tau, M(tau))
  bool converged = false;
};

/// Finite-difference descent on M(tau) using secant slope estimates.
TauResult minimize_tau(const std::function<double(double)>& measure, const TauOptions& options);
TauResult optimize_tau(const Eigen::VectorXd& x, const SpectralBasis& basis,
                       const TauOptions& options);

}  // namespace vf
