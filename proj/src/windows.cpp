// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/windows.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail.hpp"

namespace vf {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

double binomial_coefficient(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

SpectralWindow heat_window(double tau, double amplitude, const SpectralBasis& basis) {
  detail::require(tau > 0.0 && std::isfinite(tau), Errc::invalid_argument,
                  "heat window needs tau > 0");
  SpectralWindow w;
  w.tau = tau;
  w.amplitude = amplitude;
  w.H = amplitude * (-tau * basis.eigenvalues.array()).exp().matrix();
  return w;
}

VertexWindowSet spectral_window_shift(const SpectralWindow& window,
                                      const SpectralBasis& basis) {
  detail::require_size(window.H.size(), basis.size(), "spectral window");
  VertexWindowSet out;
  if (!basis.is_complex) {
    out.h = basis.vectors * window.H.asDiagonal() * basis.vectors.transpose();
    return out;
  }
  const Eigen::MatrixXcd hc = basis.cvectors * window.H.asDiagonal() * basis.cvectors.adjoint();
  const double scale = std::max(1.0, hc.cwiseAbs().maxCoeff());
  detail::require(hc.imag().cwiseAbs().maxCoeff() <= 1e-10 * scale, Errc::unsupported_kind,
                  "spectral window shift on a complex basis produced complex windows");
  out.h = hc.real();
  return out;
}

std::vector<double> vertex_taps(VertexShape shape, int width) {
  detail::require(width >= 1, Errc::invalid_argument, "window width D must be >= 1");
  std::vector<double> taps(width, 1.0);
  if (shape == VertexShape::hann) {
    for (int d = 0; d < width; ++d)
      taps[d] = 0.5 * (1.0 + std::cos(std::numbers::pi * d / width));
  } else if (shape == VertexShape::custom) {
    throw Error(Errc::invalid_argument, "custom windows take explicit taps");
  }
  return taps;
}

VertexWindowSet vertex_window(const DistanceMatrices& dm, VertexShape shape,
                              const std::vector<double>& custom_taps) {
  VertexWindowSet out;
  if (shape == VertexShape::custom) {
    out.h = window_matrix(dm, custom_taps);
  } else {
    out.h = window_matrix(dm, vertex_taps(shape, dm.max_distance));
  }
  return out;
}

VertexWindowSet circular_window(const std::vector<double>& taps, int n) {
  detail::require(n >= 1, Errc::invalid_argument, "circular window needs N >= 1");
  detail::require(!taps.empty() && static_cast<int>(taps.size()) <= n,
                  Errc::dimension_mismatch, "circular window needs 1..N taps");
  VertexWindowSet out;
  out.h = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      const int offset = ((i - m) % n + n) % n;
      if (offset < static_cast<int>(taps.size())) out.h(i, m) = taps[offset];
    }
  }
  return out;
}

VertexWindowSet normalize_windows(VertexWindowSet windows, WindowNorm norm) {
  windows.normalization = norm;
  if (norm == WindowNorm::none) return windows;
  for (Eigen::Index n = 0; n < windows.h.rows(); ++n) {
    const double s = norm == WindowNorm::sum_one ? windows.h.row(n).sum()
                                                 : windows.h.row(n).norm();
    detail::require(s != 0.0 && std::isfinite(s), Errc::condition_violated,
                    "window sum vanishes at vertex " + std::to_string(n + 1));
    windows.h.row(n) /= s;
  }
  return windows;
}

std::string_view to_string(BankKind kind) noexcept {
  switch (kind) {
    case BankKind::binomial: return "binomial";
    case BankKind::raised_cosine: return "raised-cosine";
    case BankKind::meyer: return "meyer";
    case BankKind::adaptive: return "adaptive";
    case BankKind::wavelet: return "wavelet";
    case BankKind::custom: return "custom";
  }
  return "unknown";
}

BankKind parse_bank_kind(std::string_view name) {
  for (BankKind k : {BankKind::binomial, BankKind::raised_cosine, BankKind::meyer,
                     BankKind::adaptive, BankKind::wavelet, BankKind::custom}) {
    if (to_string(k) == name) return k;
  }
  throw Error(Errc::unsupported_kind, "unknown bank kind '" + std::string(name) + "'");
}

std::string_view to_string(BankCondition c) noexcept {
  switch (c) {
    case BankCondition::none: return "none";
    case BankCondition::sum: return "sum";
    case BankCondition::sum_of_squares: return "sum-of-squares";
  }
  return "unknown";
}

double meyer_v(double x) {
  x = std::clamp(x, 0.0, 1.0);
  const double x2 = x * x;
  return x2 * x2 * (35.0 - 84.0 * x + 70.0 * x2 - 20.0 * x2 * x);
}

double meyer_wavelet_kernel(double M, double mu) {
  const double q = 1.0 / (M - 1.0);
  if (mu > 1.0 && mu <= M) return std::sin(kHalfPi * meyer_v(q * (mu - 1.0)));
  if (mu > M && mu <= M * M) return std::cos(kHalfPi * meyer_v(q * (mu / M - 1.0)));
  return 0.0;
}

namespace {

double rise(const TransferBank& bank, double x) {
  if (bank.kind == BankKind::raised_cosine) {
    const double s = std::sin(kHalfPi * x);
    return bank.squared ? s * s : s;
  }
  return std::sin(kHalfPi * meyer_v(x));
}

double fall(const TransferBank& bank, double x) {
  if (bank.kind == BankKind::raised_cosine) {
    const double c = std::cos(kHalfPi * x);
    return bank.squared ? c * c : c;
  }
  return std::cos(kHalfPi * meyer_v(x));
}

double band_value(const TransferBank& bank, int k, double lambda) {
  const Band& band = bank.bands[k];
  if (k == 0 && lambda <= band.b) return 1.0;
  if (k == bank.K - 1 && lambda > band.b) return 1.0;
  if (lambda > band.a && lambda <= band.b)
    return rise(bank, (lambda - band.a) / (band.b - band.a));
  if (lambda > band.b && lambda <= band.c)
    return fall(bank, (lambda - band.b) / (band.c - band.b));
  return 0.0;
}

double custom_value(const TransferBank& bank, int k, double lambda) {
  const Eigen::VectorXd& xs = bank.sample_lambdas;
  const Eigen::Index p = xs.size();
  if (lambda <= xs(0)) return bank.sample_values(k, 0);
  if (lambda >= xs(p - 1)) return bank.sample_values(k, p - 1);
  const auto it = std::upper_bound(xs.data(), xs.data() + p, lambda);
  const Eigen::Index hi = it - xs.data();
  const Eigen::Index lo = hi - 1;
  const double t = (lambda - xs(lo)) / (xs(hi) - xs(lo));
  return (1.0 - t) * bank.sample_values(k, lo) + t * bank.sample_values(k, hi);
}

std::vector<Band> bands_from_centers(const std::vector<double>& centers) {
  const int K = static_cast<int>(centers.size());
  std::vector<Band> bands(K);
  for (int k = 0; k < K; ++k) {
    bands[k].b = centers[k];
    bands[k].a = k > 0 ? centers[k - 1] : centers[k];
    bands[k].c = k + 1 < K ? centers[k + 1] : centers[k];
  }
  return bands;
}

std::vector<double> uniform_centers(int K, double lambda_max) {
  std::vector<double> c(K);
  const double step = lambda_max / (K - 1);
  for (int k = 0; k < K; ++k) c[k] = k * step;
  c[K - 1] = lambda_max;
  return c;
}

void require_lambda_max(double lambda_max) {
  detail::require(lambda_max > 0.0 && std::isfinite(lambda_max), Errc::invalid_argument,
                  "bank lambda_max must be positive");
}

}  // namespace

double TransferBank::operator()(int k, double lambda) const {
  detail::require(k >= 0 && k < K, Errc::invalid_argument,
                  "band index " + std::to_string(k) + " outside 0.." + std::to_string(K - 1));
  switch (kind) {
    case BankKind::binomial: {
      const double r = std::clamp(lambda / lambda_max, 0.0, 1.0);
      return binomial_coefficient(K - 1, k) * std::pow(1.0 - r, K - 1 - k) * std::pow(r, k);
    }
    case BankKind::raised_cosine:
    case BankKind::meyer:
    case BankKind::adaptive:
      return band_value(*this, k, lambda);
    case BankKind::wavelet: {
      if (k == 0) {
        const double mu = scales.back() * lambda;
        if (mu <= 1.0) return 1.0;
        if (mu <= scale_factor)
          return std::cos(kHalfPi * meyer_v((mu - 1.0) / (scale_factor - 1.0)));
        return 0.0;
      }
      return meyer_wavelet_kernel(scale_factor, scales[K - 1 - k] * lambda);
    }
    case BankKind::custom:
      return custom_value(*this, k, lambda);
  }
  return 0.0;
}

Eigen::MatrixXd TransferBank::sample(const Eigen::VectorXd& lambdas) const {
  Eigen::MatrixXd out(K, lambdas.size());
  for (int k = 0; k < K; ++k)
    for (Eigen::Index p = 0; p < lambdas.size(); ++p) out(k, p) = (*this)(k, lambdas(p));
  return out;
}

std::vector<double> TransferBank::centers() const {
  std::vector<double> c(K, 0.0);
  switch (kind) {
    case BankKind::binomial:
      for (int k = 0; k < K; ++k) c[k] = K == 1 ? 0.0 : lambda_max * k / (K - 1);
      break;
    case BankKind::raised_cosine:
    case BankKind::meyer:
    case BankKind::adaptive:
      for (int k = 0; k < K; ++k) c[k] = bands[k].b;
      break;
    case BankKind::wavelet:
      for (int k = 1; k < K; ++k) c[k] = scale_factor / scales[K - 1 - k];
      break;
    case BankKind::custom:
      for (int k = 0; k < K; ++k) {
        Eigen::Index best = 0;
        sample_values.row(k).maxCoeff(&best);
        c[k] = sample_lambdas(best);
      }
      break;
  }
  return c;
}

TransferBank binomial_bank(int K, double lambda_max) {
  detail::require(K >= 1, Errc::invalid_argument, "binomial bank needs K >= 1");
  require_lambda_max(lambda_max);
  TransferBank bank;
  bank.kind = BankKind::binomial;
  bank.K = K;
  bank.lambda_max = lambda_max;
  bank.condition = BankCondition::sum;
  return bank;
}

TransferBank binomial_bank(int K, const SpectralBasis& basis) {
  return binomial_bank(K, basis.lambda_max());
}

TransferBank raised_cosine_bank(int K, double lambda_max, bool squared) {
  detail::require(K >= 2, Errc::invalid_argument, "raised-cosine bank needs K >= 2");
  require_lambda_max(lambda_max);
  TransferBank bank;
  bank.kind = BankKind::raised_cosine;
  bank.K = K;
  bank.lambda_max = lambda_max;
  bank.squared = squared;
  bank.condition = squared ? BankCondition::sum : BankCondition::sum_of_squares;
  bank.bands = bands_from_centers(uniform_centers(K, lambda_max));
  return bank;
}

TransferBank meyer_bank(int K, double lambda_max) {
  detail::require(K >= 2, Errc::invalid_argument, "meyer bank needs K >= 2");
  require_lambda_max(lambda_max);
  TransferBank bank;
  bank.kind = BankKind::meyer;
  bank.K = K;
  bank.lambda_max = lambda_max;
  bank.condition = BankCondition::sum_of_squares;
  bank.bands = bands_from_centers(uniform_centers(K, lambda_max));
  return bank;
}

TransferBank meyer_wavelet_bank(double M, int K, double lambda_max) {
  detail::require(K >= 2, Errc::invalid_argument, "wavelet bank needs K >= 2");
  detail::require(M > 1.0 && std::isfinite(M), Errc::invalid_argument,
                  "wavelet scale factor M must exceed 1");
  require_lambda_max(lambda_max);
  TransferBank bank;
  bank.kind = BankKind::wavelet;
  bank.K = K;
  bank.lambda_max = lambda_max;
  bank.scale_factor = M;
  bank.condition = BankCondition::sum_of_squares;
  double s = 1.0 / lambda_max;
  for (int i = 1; i < K; ++i) {
    s *= M;
    bank.scales.push_back(s);
  }
  return bank;
}

TransferBank adaptive_bank(const std::vector<double>& centers, double lambda_max) {
  require_lambda_max(lambda_max);
  detail::require(centers.size() >= 2, Errc::invalid_argument,
                  "adaptive bank needs at least two centres");
  for (size_t i = 0; i < centers.size(); ++i) {
    detail::require(centers[i] >= 0.0 && centers[i] <= lambda_max, Errc::invalid_argument,
                    "adaptive bank centres must lie in [0, lambda_max]");
    detail::require(i == 0 || centers[i] > centers[i - 1], Errc::invalid_argument,
                    "adaptive bank centres must be strictly ascending");
  }
  TransferBank bank;
  bank.kind = BankKind::adaptive;
  bank.K = static_cast<int>(centers.size());
  bank.lambda_max = lambda_max;
  bank.condition = BankCondition::sum_of_squares;
  bank.bands = bands_from_centers(centers);
  return bank;
}

std::vector<double> adaptive_centers(int K, double lambda_max,
                                     const std::vector<double>& focus, double width,
                                     double gain) {
  detail::require(K >= 2, Errc::invalid_argument, "adaptive bank needs K >= 2");
  require_lambda_max(lambda_max);
  detail::require(width > 0.0, Errc::invalid_argument, "focus width must be positive");
  detail::require(gain >= 0.0, Errc::invalid_argument, "focus gain must be nonnegative");
  constexpr int kGrid = 20000;
  Eigen::VectorXd cdf(kGrid + 1);
  cdf(0) = 0.0;
  auto density = [&](double l) {
    double d = 1.0;
    for (double f : focus) d += gain * std::exp(-(l - f) * (l - f) / (2.0 * width * width));
    return d;
  };
  const double h = lambda_max / kGrid;
  for (int i = 1; i <= kGrid; ++i)
    cdf(i) = cdf(i - 1) + 0.5 * h * (density((i - 1) * h) + density(i * h));
  std::vector<double> centers(K);
  centers[0] = 0.0;
  centers[K - 1] = lambda_max;
  int i = 0;
  for (int k = 1; k < K - 1; ++k) {
    const double target = cdf(kGrid) * k / (K - 1);
    while (cdf(i + 1) < target) ++i;
    const double t = (target - cdf(i)) / (cdf(i + 1) - cdf(i));
    centers[k] = (i + t) * h;
  }
  return centers;
}

TransferBank custom_bank(const Eigen::VectorXd& lambdas, const Eigen::MatrixXd& values,
                         BankCondition condition) {
  detail::require(lambdas.size() >= 1, Errc::invalid_argument, "custom bank needs samples");
  detail::require_size(values.cols(), lambdas.size(), "custom bank samples");
  detail::require(values.allFinite() && lambdas.allFinite(), Errc::non_finite,
                  "custom bank samples must be finite");
  for (Eigen::Index p = 1; p < lambdas.size(); ++p) {
    detail::require(lambdas(p) > lambdas(p - 1), Errc::invalid_argument,
                    "custom bank sample points must be strictly ascending");
  }
  TransferBank bank;
  bank.kind = BankKind::custom;
  bank.K = static_cast<int>(values.rows());
  bank.lambda_max = lambdas(lambdas.size() - 1);
  bank.condition = condition;
  bank.sample_lambdas = lambdas;
  bank.sample_values = values;
  return bank;
}

Eigen::VectorXd validation_grid(double lambda_max, int points, const Eigen::VectorXd& extra) {
  detail::require(points >= 2, Errc::invalid_argument, "grid needs at least two points");
  std::vector<double> all(points);
  for (int i = 0; i < points; ++i) all[i] = lambda_max * i / (points - 1);
  all.insert(all.end(), extra.data(), extra.data() + extra.size());
  std::sort(all.begin(), all.end());
  return Eigen::Map<Eigen::VectorXd>(all.data(), static_cast<Eigen::Index>(all.size()));
}

double condition_error(const TransferBank& bank, BankCondition condition,
                       const Eigen::VectorXd& lambdas) {
  if (condition == BankCondition::none) return 0.0;
  const Eigen::MatrixXd s = bank.sample(lambdas);
  const Eigen::RowVectorXd total = condition == BankCondition::sum
                                       ? Eigen::RowVectorXd(s.colwise().sum())
                                       : Eigen::RowVectorXd(s.cwiseAbs2().colwise().sum());
  return (total.array() - 1.0).abs().maxCoeff();
}

}  // namespace vf
