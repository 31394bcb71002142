// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/inversion.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "detail.hpp"

namespace vf {

namespace {

// Column r of the result is x(n) h_{m_r}(n), the IGFT of row r of S.
Eigen::MatrixXcd windowed_signals(const VertexFrequencyMap& map, const SpectralBasis& basis) {
  detail::require(map.axis == MapAxis::spectral_index, Errc::invalid_argument,
                  "window inversion needs a spectral-index map");
  detail::require_size(map.cols(), basis.size(), "map columns");
  detail::require_size(static_cast<Eigen::Index>(map.vertices.size()), map.rows(),
                       "map vertex list");
  return basis.complex_vectors() * map.S.transpose();
}

Eigen::MatrixXd window_columns(const VertexFrequencyMap& map, const VertexWindowSet& windows,
                               int n) {
  detail::require_size(windows.size(), n, "inversion windows");
  Eigen::MatrixXd h(n, map.rows());
  for (int r = 0; r < map.rows(); ++r) h.col(r) = windows.h.col(map.vertices[r]);
  return h;
}

void require_nonvanishing(const Eigen::VectorXd& denom, const char* what) {
  const double scale = std::max(denom.cwiseAbs().maxCoeff(), 1e-300);
  for (Eigen::Index n = 0; n < denom.size(); ++n) {
    if (std::abs(denom(n)) <= 1e-12 * scale) {
      throw Error(Errc::condition_violated, std::string(what) + " vanishes at vertex " +
                                                std::to_string(n + 1));
    }
  }
}

void require_bank_condition(const TransferBank& bank, BankCondition condition,
                            const SpectralBasis& basis) {
  const double err = condition_error(bank, condition, basis.eigenvalues);
  if (err > kConditionTol) {
    std::ostringstream msg;
    msg.precision(6);
    msg << "bank violates the " << to_string(condition) << " condition (max error " << err
        << ")";
    throw Error(Errc::condition_violated, msg.str());
  }
}

void require_band_map(const VertexFrequencyMap& map, const TransferBank& bank,
                      const SpectralBasis& basis) {
  detail::require(!basis.is_complex, Errc::unsupported_kind,
                  "band inversion needs a real basis");
  detail::require_size(map.rows(), basis.size(), "band map rows");
  detail::require_size(map.cols(), bank.K, "band map columns");
}

}  // namespace

Eigen::VectorXcd invert_summation(const VertexFrequencyMap& map,
                                  const VertexWindowSet& windows, const SpectralBasis& basis) {
  const Eigen::MatrixXcd y = windowed_signals(map, basis);
  const Eigen::VectorXd denom = window_columns(map, windows, basis.size()).rowwise().sum();
  const Eigen::VectorXcd numer = y.rowwise().sum();
  if ((denom.array() - 1.0).abs().maxCoeff() <= 1e-12) return numer;
  require_nonvanishing(denom, "window sum");
  return numer.cwiseQuotient(denom.cast<std::complex<double>>());
}

Eigen::VectorXd invert_band_sum(const VertexFrequencyMap& map, const TransferBank& bank,
                                const SpectralBasis& basis) {
  require_band_map(map, bank, basis);
  require_bank_condition(bank, BankCondition::sum, basis);
  return map.S.real().rowwise().sum();
}

Eigen::VectorXcd invert_kernel(const VertexFrequencyMap& map, const VertexWindowSet& windows,
                               const SpectralBasis& basis) {
  const Eigen::MatrixXcd y = windowed_signals(map, basis);
  const Eigen::MatrixXd h = window_columns(map, windows, basis.size());
  const Eigen::VectorXd denom = h.cwiseAbs2().rowwise().sum();
  require_nonvanishing(denom, "squared window sum");
  const Eigen::VectorXcd numer =
      y.cwiseProduct(h.cast<std::complex<double>>()).rowwise().sum();
  return numer.cwiseQuotient(denom.cast<std::complex<double>>());
}

Eigen::VectorXd invert_kernel(const VertexFrequencyMap& map, const TransferBank& bank,
                              const SpectralBasis& basis) {
  require_band_map(map, bank, basis);
  require_bank_condition(bank, BankCondition::sum_of_squares, basis);
  const Eigen::MatrixXd H = bank.sample(basis.eigenvalues);  // K x N
  const Eigen::MatrixXd spectra = basis.vectors.transpose() * map.S.real();  // N x K
  const Eigen::VectorXd X = (spectra.array() * H.transpose().array()).rowwise().sum();
  return basis.vectors * X;
}

FilterMask threshold_mask(const VertexFrequencyMap& map, double T) {
  return (map.S.cwiseAbs().array() >= T).cast<double>().matrix();
}

Eigen::VectorXd vertex_varying_filter(const VertexFrequencyMap& map, const FilterMask& mask,
                                      const Inverter& inverter) {
  detail::require(mask.rows() == map.rows() && mask.cols() == map.cols(),
                  Errc::dimension_mismatch, "mask shape differs from the map");
  detail::require(mask.minCoeff() >= 0.0 && mask.maxCoeff() <= 1.0, Errc::invalid_argument,
                  "mask entries must lie in [0, 1]");
  VertexFrequencyMap masked = map;
  masked.S = map.S.cwiseProduct(mask.cast<std::complex<double>>());
  return inverter(masked);
}

double snr_db(const Eigen::VectorXd& reference, const Eigen::VectorXd& estimate) {
  detail::require_size(estimate.size(), reference.size(), "snr estimate");
  const double err = (reference - estimate).squaredNorm();
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(reference.squaredNorm() / err);
}

ThresholdChoice tune_threshold(const VertexFrequencyMap& map, const Inverter& inverter,
                               const Eigen::VectorXd& clean, int grid_points) {
  detail::require(grid_points >= 2, Errc::invalid_argument, "threshold grid too small");
  const double top = map.S.cwiseAbs().maxCoeff();
  ThresholdChoice best;
  best.snr_out = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_points; ++i) {
    const double T = top * i / (grid_points - 1);
    Eigen::VectorXd y = vertex_varying_filter(map, threshold_mask(map, T), inverter);
    const double snr = snr_db(clean, y);
    if (snr > best.snr_out) {
      best.T = T;
      best.snr_out = snr;
      best.filtered = std::move(y);
    }
  }
  return best;
}

}  // namespace vf
