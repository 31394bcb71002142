// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/wavelet.hpp"

#include <cmath>
#include <sstream>

#include "detail.hpp"
#include "vf/lgft.hpp"

namespace vf {

WaveletCoefficients wavelet_transform(const Eigen::VectorXd& x, const SpectralBasis& basis,
                                      double M, int K) {
  WaveletCoefficients out;
  out.bank = meyer_wavelet_bank(M, K, basis.lambda_max());
  out.W = lgft_bank(x, out.bank, basis).S.real();
  return out;
}

WaveletCoefficients wavelet_transform_polynomial(const Eigen::VectorXd& x, const Graph& g,
                                                 double lambda_max, double M, int K,
                                                 int terms, const ApplyOptions& options) {
  WaveletCoefficients out;
  out.bank = meyer_wavelet_bank(M, K, lambda_max);
  out.W = lgft_bank_polynomial(x, out.bank, g, terms, options).S.real();
  return out;
}

bool FrameBounds::tight(double tol) const noexcept {
  return std::abs(A - 1.0) <= tol && std::abs(B - 1.0) <= tol;
}

Eigen::VectorXd frame_function(const TransferBank& bank, const Eigen::VectorXd& lambdas) {
  return bank.sample(lambdas).cwiseAbs2().colwise().sum().transpose();
}

FrameBounds frame_bounds(const TransferBank& bank, const SpectralBasis& basis) {
  const Eigen::VectorXd g = frame_function(bank, basis.eigenvalues);
  return {g.minCoeff(), g.maxCoeff()};
}

FrameBounds frame_bounds_grid(const TransferBank& bank, const SpectralBasis& basis,
                              int points) {
  const Eigen::VectorXd grid = validation_grid(bank.lambda_max, points, basis.eigenvalues);
  const Eigen::VectorXd g = frame_function(bank, grid);
  return {g.minCoeff(), g.maxCoeff()};
}

FrameBounds frame_bounds_grid(const ChebyshevApprox& approx, const Eigen::VectorXd& lambdas) {
  const Eigen::VectorXd g = approx.evaluate(lambdas).cwiseAbs2().colwise().sum().transpose();
  return {g.minCoeff(), g.maxCoeff()};
}

Eigen::VectorXd wavelet_inverse(const WaveletCoefficients& coeffs, const SpectralBasis& basis,
                                bool correct) {
  detail::require(!basis.is_complex, Errc::unsupported_kind,
                  "wavelet inversion needs a real basis");
  detail::require_size(coeffs.W.rows(), basis.size(), "wavelet coefficient rows");
  detail::require_size(coeffs.W.cols(), coeffs.bank.K, "wavelet coefficient columns");
  const Eigen::MatrixXd H = coeffs.bank.sample(basis.eigenvalues);  // K x N
  const Eigen::VectorXd g = H.cwiseAbs2().colwise().sum().transpose();
  const FrameBounds fb{g.minCoeff(), g.maxCoeff()};
  if (!fb.tight()) {
    if (!correct) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "wavelet kernels are not a tight frame: A = " << fb.A << ", B = " << fb.B;
      throw Error(Errc::condition_violated, msg.str());
    }
    detail::require(fb.A > 0.0, Errc::condition_violated,
                    "wavelet kernels vanish at some eigenvalue; cannot correct");
  }
  // Column i is the GFT of coefficient column i.
  const Eigen::MatrixXd spectra = basis.vectors.transpose() * coeffs.W;  // N x K
  Eigen::VectorXd X = (spectra.array() * H.transpose().array()).rowwise().sum();
  if (correct) X = X.cwiseQuotient(g);
  return basis.vectors * X;
}

}  // namespace vf
