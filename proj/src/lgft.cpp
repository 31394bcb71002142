// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/lgft.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "detail.hpp"

namespace vf {

std::string_view to_string(MapAxis axis) noexcept {
  switch (axis) {
    case MapAxis::spectral_index: return "spectral-index";
    case MapAxis::band_index: return "band-index";
    case MapAxis::eigenvalue_assigned: return "eigenvalue-assigned";
  }
  return "unknown";
}

Eigen::MatrixXd VertexFrequencyMap::real(double tol) const {
  const double peak = S.size() == 0 ? 0.0 : S.cwiseAbs().maxCoeff();
  detail::require(max_imag() <= tol * std::max(peak, 1e-300), Errc::invalid_argument,
                  "map has a non-negligible imaginary part");
  return S.real();
}

double VertexFrequencyMap::max_imag() const {
  return S.size() == 0 ? 0.0 : S.imag().cwiseAbs().maxCoeff();
}

namespace {

std::vector<int> resolve_vertices(const std::vector<int>& vertices, int n) {
  if (vertices.empty()) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  for (int v : vertices) {
    detail::require(v >= 0 && v < n, Errc::invalid_argument,
                    "vertex subset entry " + std::to_string(v) + " outside the graph");
  }
  return vertices;
}

}  // namespace

VertexFrequencyMap lgft_window(const Eigen::VectorXcd& x, const VertexWindowSet& windows,
                               const SpectralBasis& basis, const std::vector<int>& vertices) {
  const int n = basis.size();
  detail::require_size(x.size(), n, "lgft signal");
  detail::require_size(windows.size(), n, "lgft windows");
  VertexFrequencyMap out;
  out.axis = MapAxis::spectral_index;
  out.vertices = resolve_vertices(vertices, n);
  const Eigen::MatrixXcd conj_u = basis.complex_vectors().conjugate();
  out.S.resize(static_cast<Eigen::Index>(out.vertices.size()), n);
  for (size_t r = 0; r < out.vertices.size(); ++r) {
    const Eigen::VectorXcd xm = x.cwiseProduct(windows.h.col(out.vertices[r]).cast<std::complex<double>>());
    out.S.row(static_cast<Eigen::Index>(r)) = xm.transpose() * conj_u;
  }
  return out;
}

VertexFrequencyMap lgft_window(const Eigen::VectorXd& x, const VertexWindowSet& windows,
                               const SpectralBasis& basis, const std::vector<int>& vertices) {
  return lgft_window(Eigen::VectorXcd(x.cast<std::complex<double>>()), windows, basis,
                     vertices);
}

Eigen::VectorXcd lgft_kernel(const VertexWindowSet& windows, const SpectralBasis& basis,
                             int m, int k) {
  const int n = basis.size();
  detail::require(m >= 0 && m < n && k >= 0 && k < n, Errc::invalid_argument,
                  "kernel index out of range");
  detail::require_size(windows.size(), n, "kernel windows");
  return windows.h.col(m).cast<std::complex<double>>().cwiseProduct(
      basis.complex_vectors().col(k));
}

double IndexWindow::at(int offset) const noexcept {
  const long long i = static_cast<long long>(offset) + origin;
  if (i < 0 || i >= static_cast<long long>(taps.size())) return 0.0;
  return taps[static_cast<size_t>(i)];
}

IndexWindow gaussian_index_window(int half_width, double sigma) {
  detail::require(half_width >= 0, Errc::invalid_argument, "half width must be >= 0");
  detail::require(sigma > 0.0, Errc::invalid_argument, "sigma must be positive");
  IndexWindow w;
  w.origin = half_width;
  w.taps.resize(2 * half_width + 1);
  for (int d = -half_width; d <= half_width; ++d)
    w.taps[d + half_width] = std::exp(-0.5 * d * d / (sigma * sigma));
  return w;
}

VertexFrequencyMap lgft_spectral_shift(const Eigen::VectorXcd& spectrum,
                                       const IndexWindow& window, const SpectralBasis& basis) {
  const int n = basis.size();
  detail::require_size(spectrum.size(), n, "spectral-shift spectrum");
  Eigen::MatrixXd t(n, n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k) t(p, k) = window.at(k - p);
  VertexFrequencyMap out;
  out.axis = MapAxis::spectral_index;
  out.vertices = resolve_vertices({}, n);
  out.S = basis.complex_vectors() * spectrum.asDiagonal() * t.cast<std::complex<double>>();
  return out;
}

VertexFrequencyMap lgft_bank(const Eigen::VectorXd& x, const TransferBank& bank,
                             const SpectralBasis& basis) {
  detail::require(!basis.is_complex, Errc::unsupported_kind,
                  "bank LGFT needs a real basis");
  detail::require_size(x.size(), basis.size(), "bank lgft signal");
  const Eigen::VectorXd X = basis.vectors.transpose() * x;
  const Eigen::MatrixXd H = bank.sample(basis.eigenvalues);  // K x N
  const Eigen::MatrixXd weighted = (H.array().rowwise() * X.transpose().array()).matrix();
  VertexFrequencyMap out;
  out.axis = MapAxis::band_index;
  out.vertices = resolve_vertices({}, basis.size());
  out.band_centers = bank.centers();
  out.S = (basis.vectors * weighted.transpose()).cast<std::complex<double>>();
  return out;
}

VertexFrequencyMap lgft_bank_polynomial(const Eigen::VectorXd& x, const TransferBank& bank,
                                        const Graph& g, int terms,
                                        const ApplyOptions& options) {
  detail::require_size(x.size(), g.size(), "bank lgft signal");
  const ChebyshevApprox approx = cheb_fit(bank, terms, bank.lambda_max);
  VertexFrequencyMap out;
  out.axis = MapAxis::band_index;
  out.vertices = resolve_vertices({}, g.size());
  out.band_centers = bank.centers();
  out.S = cheb_apply_all(approx, sparse_laplacian(g), x, options).cast<std::complex<double>>();
  return out;
}

std::vector<int> ridge(const VertexFrequencyMap& map) {
  std::vector<int> k_star(map.rows(), 0);
  for (int m = 0; m < map.rows(); ++m) {
    double best = -1.0;
    for (int k = 0; k < map.cols(); ++k) {
      const double v = std::abs(map.S(m, k));
      if (v > best) {
        best = v;
        k_star[m] = k;
      }
    }
  }
  return k_star;
}

VertexFrequencyMap reassign(const VertexFrequencyMap& map) {
  VertexFrequencyMap out = map;
  out.S.setZero();
  const std::vector<int> k_star = ridge(map);
  for (int m = 0; m < map.rows(); ++m) out.S(m, k_star[m]) = map.S(m, k_star[m]);
  if (!map.band_centers.empty()) out.axis = MapAxis::eigenvalue_assigned;
  return out;
}

Eigen::MatrixXd spectrogram(const VertexFrequencyMap& map) { return map.S.cwiseAbs2(); }

Marginals marginals(const Eigen::MatrixXd& P) {
  return {P.rowwise().sum(), P.colwise().sum().transpose()};
}

double concentration(const Eigen::MatrixXcd& S) {
  const double f = S.norm();
  detail::require(f > 0.0, Errc::zero_signal, "concentration of a zero map");
  return S.cwiseAbs().sum() / f;
}

double concentration(const VertexFrequencyMap& map) { return concentration(map.S); }

double heat_concentration(const Eigen::VectorXd& x, const SpectralBasis& basis, double tau) {
  const VertexWindowSet w = spectral_window_shift(heat_window(tau, 1.0, basis), basis);
  return concentration(lgft_window(x, w, basis));
}

TauResult minimize_tau(const std::function<double(double)>& measure,
                       const TauOptions& options) {
  detail::require(options.tau0 > 0.0, Errc::invalid_argument, "tau0 must be positive");
  detail::require(options.alpha > 0.0, Errc::invalid_argument, "alpha must be positive");
  detail::require(options.max_iter >= 1, Errc::invalid_argument, "max_iter must be >= 1");
  TauResult r;
  auto record = [&](double tau) {
    const double m = measure(tau);
    detail::require(std::isfinite(m), Errc::non_finite, "concentration is not finite");
    r.trace.emplace_back(tau, m);
    if (r.trace.size() == 1 || m < r.measure) {
      r.measure = m;
      r.tau = tau;
    }
    return m;
  };
  double tau_prev2 = options.tau0;
  double m_prev2 = record(tau_prev2);
  double tau_prev = 1.1 * options.tau0;
  double m_prev = record(tau_prev);
  for (int it = 0; it < options.max_iter; ++it) {
    const double slope = (m_prev - m_prev2) / (tau_prev - tau_prev2);
    double tau = tau_prev - options.alpha * slope;
    if (!(tau > 0.0)) tau = 0.5 * tau_prev;
    const double step = std::abs(tau - tau_prev);
    const double m = record(tau);
    tau_prev2 = tau_prev;
    m_prev2 = m_prev;
    tau_prev = tau;
    m_prev = m;
    if (step < options.tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

TauResult optimize_tau(const Eigen::VectorXd& x, const SpectralBasis& basis,
                       const TauOptions& options) {
  return minimize_tau([&](double tau) { return heat_concentration(x, basis, tau); }, options);
}

}  // namespace vf
