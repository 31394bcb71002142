// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "vf/graph.hpp"
#include "vf/spectral.hpp"

namespace vf {

/// Samples H(k) over the spectral index axis.
struct SpectralWindow {
  Eigen::VectorXd H;
  double amplitude = 1.0;
  double tau = 0.0;
};

enum class WindowNorm { none, sum_one, sum_squares_one };

/// h(n, m) = h_m(n): column m is the window localized at vertex m.
struct VertexWindowSet {
  Eigen::MatrixXd h;
  WindowNorm normalization = WindowNorm::none;

  int size() const noexcept { return static_cast<int>(h.rows()); }
};

/// H(k) = C exp(-lambda_k tau).
SpectralWindow heat_window(double tau, double amplitude, const SpectralBasis& basis);

/// h_m(n) = sum_k H(k) u_k(m) u_k(n). Complex bases are accepted when the
/// result is real to 1e-10.
VertexWindowSet spectral_window_shift(const SpectralWindow& window,
                                      const SpectralBasis& basis);

enum class VertexShape { rectangular, hann, custom };

/// Taps g(d) for d = 0..D-1; hann is 0.5 (1 + cos(pi d / D)).
std::vector<double> vertex_taps(VertexShape shape, int width);

/// Windows h_m(n) = g(d_mn) built from the per-distance matrices.
VertexWindowSet vertex_window(const DistanceMatrices& dm, VertexShape shape,
                              const std::vector<double>& custom_taps = {});

/// Windows h_m(n) = w((n - m) mod N) on N vertices, taps indexed by the
/// circular offset (taps.size() <= N, missing offsets are zero).
VertexWindowSet circular_window(const std::vector<double>& taps, int n);

/// Rescales each vertex row so that sum_m h_m(n) = 1 (sum_one) or
/// sum_m h_m(n)^2 = 1 (sum_squares_one).
VertexWindowSet normalize_windows(VertexWindowSet windows, WindowNorm norm);

enum class BankKind { binomial, raised_cosine, meyer, adaptive, wavelet, custom };
enum class BankCondition { none, sum, sum_of_squares };

std::string_view to_string(BankKind kind) noexcept;
BankKind parse_bank_kind(std::string_view name);
std::string_view to_string(BankCondition c) noexcept;

/// Rising edge on (a, b], falling edge on (b, c].
struct Band {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// v(x) = x^4 (35 - 84x + 70x^2 - 20x^3), clamped to [0, 1].
double meyer_v(double x);

/// K transfer functions H_k(lambda), k = 0..K-1, over [0, lambda_max].
struct TransferBank {
  BankKind kind = BankKind::custom;
  int K = 0;
  double lambda_max = 0.0;
  BankCondition condition = BankCondition::none;
  bool squared = false;         // raised cosine: sin^2/cos^2 pieces
  std::vector<Band> bands;      // raised cosine, meyer, adaptive
  double scale_factor = 0.0;    // wavelet: M
  std::vector<double> scales;   // wavelet: s_1..s_{K-1}
  Eigen::VectorXd sample_lambdas;  // custom: ascending sample points
  Eigen::MatrixXd sample_values;   // custom: K x P

  double operator()(int k, double lambda) const;
  /// K x P matrix of H_k(lambdas(p)).
  Eigen::MatrixXd sample(const Eigen::VectorXd& lambdas) const;
  /// Representative lambda of each band (peak location).
  std::vector<double> centers() const;
};

/// H_k = C(K-1, k) (1 - lambda/lmax)^{K-1-k} (lambda/lmax)^k.
TransferBank binomial_bank(int K, double lambda_max);
TransferBank binomial_bank(int K, const SpectralBasis& basis);

/// Uniform bands with step lambda_max / (K - 1). squared = true gives
/// sum_k H_k = 1, squared = false gives sum_k H_k^2 = 1.
TransferBank raised_cosine_bank(int K, double lambda_max, bool squared);

/// Uniform bands with the smooth v(x) profile; sum_k H_k^2 = 1.
TransferBank meyer_bank(int K, double lambda_max);

/// Scales s_i = M^i / lambda_max, band 0 is the low-pass G and band k is
/// H(s_{K-k} lambda); sum_k H_k^2 = 1.
TransferBank meyer_wavelet_bank(double M, int K, double lambda_max);

/// Generating kernel H(mu) of the wavelet bank.
double meyer_wavelet_kernel(double M, double mu);

/// Meyer-profile bands centred at the given ascending points in
/// [0, lambda_max]; H_0 = 1 below the first centre, H_{K-1} = 1 above the last.
TransferBank adaptive_bank(const std::vector<double>& centers, double lambda_max);

/// K centres concentrated around the requested focus points: equal
/// quantiles of 1 + gain * sum exp(-(lambda - f)^2 / (2 width^2)).
std::vector<double> adaptive_centers(int K, double lambda_max,
                                     const std::vector<double>& focus,
                                     double width, double gain = 8.0);

/// Band samples given directly; evaluation interpolates linearly.
TransferBank custom_bank(const Eigen::VectorXd& lambdas, const Eigen::MatrixXd& values,
                         BankCondition condition = BankCondition::none);

/// Uniform grid of `points` values on [0, lambda_max] merged with `extra`.
Eigen::VectorXd validation_grid(double lambda_max, int points,
                                const Eigen::VectorXd& extra = {});

/// max_p |sum_k H_k(lambda_p) - 1| (sum) or of the squares (sum_of_squares).
double condition_error(const TransferBank& bank, BankCondition condition,
                       const Eigen::VectorXd& lambdas);

}  // namespace vf
