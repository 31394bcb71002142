// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/polyops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail.hpp"

namespace vf {

double chebyshev_t(int m, double z) {
  if (m == 0) return 1.0;
  double prev = 1.0;
  double cur = z;
  for (int i = 2; i <= m; ++i) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double ChebyshevApprox::operator()(int k, double lambda) const {
  const double z = 2.0 * lambda / lambda_max - 1.0;
  const int M = terms();
  double sum = 0.5 * coeffs(k, 0);
  double prev = 1.0;
  double cur = z;
  for (int m = 1; m < M; ++m) {
    sum += coeffs(k, m) * cur;
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return sum;
}

Eigen::MatrixXd ChebyshevApprox::evaluate(const Eigen::VectorXd& lambdas) const {
  Eigen::MatrixXd out(bands(), lambdas.size());
  for (int k = 0; k < bands(); ++k)
    for (Eigen::Index p = 0; p < lambdas.size(); ++p) out(k, p) = (*this)(k, lambdas(p));
  return out;
}

namespace {

void require_fit_args(int M, double lambda_max) {
  detail::require(M >= 1, Errc::invalid_argument, "Chebyshev fit needs M >= 1");
  detail::require(lambda_max > 0.0 && std::isfinite(lambda_max), Errc::invalid_argument,
                  "Chebyshev fit needs lambda_max > 0");
}

// Rows: node q; columns: T_m(z_q) for m = 0..M-1.
Eigen::MatrixXd node_table(int M, int Q, Eigen::VectorXd& nodes) {
  nodes.resize(Q);
  Eigen::MatrixXd t(Q, M);
  for (int q = 0; q < Q; ++q) {
    const double theta = std::numbers::pi * (q + 0.5) / Q;
    nodes(q) = std::cos(theta);
    for (int m = 0; m < M; ++m) t(q, m) = std::cos(m * theta);
  }
  return t;
}

}  // namespace

ChebyshevApprox cheb_fit(const std::function<double(double)>& H, int M, double lambda_max) {
  require_fit_args(M, lambda_max);
  const int Q = std::max(4 * M, 256);
  Eigen::VectorXd z;
  const Eigen::MatrixXd t = node_table(M, Q, z);
  Eigen::VectorXd samples(Q);
  for (int q = 0; q < Q; ++q) {
    samples(q) = H((z(q) + 1.0) * lambda_max / 2.0);
    detail::require(std::isfinite(samples(q)), Errc::non_finite,
                    "transfer function is not finite on [0, lambda_max]");
  }
  ChebyshevApprox out;
  out.lambda_max = lambda_max;
  out.coeffs = (2.0 / Q) * (t.transpose() * samples).transpose();
  return out;
}

ChebyshevApprox cheb_fit(const TransferBank& bank, int M, double lambda_max) {
  require_fit_args(M, lambda_max);
  ChebyshevApprox out;
  out.lambda_max = lambda_max;
  out.coeffs.resize(bank.K, M);
  for (int k = 0; k < bank.K; ++k) {
    const ChebyshevApprox one =
        cheb_fit([&](double l) { return bank(k, l); }, M, lambda_max);
    out.coeffs.row(k) = one.coeffs.row(0);
  }
  return out;
}

namespace {

void check_radius(const ChebyshevApprox& approx, const Eigen::SparseMatrix<double>& L,
                  const ApplyOptions& options) {
  if (!options.check_lambda_max) return;
  const double radius = options.spectral_radius > 0.0 ? options.spectral_radius
                                                       : power_iteration_lambda_max(L);
  if (radius > approx.lambda_max * (1.0 + 1e-9)) {
    throw Error(Errc::lambda_max_mismatch,
                "spectral radius " + std::to_string(radius) +
                    " exceeds the fitted lambda_max " + std::to_string(approx.lambda_max));
  }
}

}  // namespace

Eigen::MatrixXd cheb_apply_all(const ChebyshevApprox& approx,
                               const Eigen::SparseMatrix<double>& L, const Eigen::VectorXd& x,
                               const ApplyOptions& options) {
  detail::require(L.rows() == L.cols(), Errc::dimension_mismatch, "L must be square");
  detail::require_size(x.size(), L.rows(), "cheb_apply signal");
  check_radius(approx, L, options);
  const double scale = 2.0 / approx.lambda_max;
  auto lbar = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd {
    return scale * (L * v) - v;
  };
  const int M = approx.terms();
  Eigen::MatrixXd out = x * (0.5 * approx.coeffs.col(0).transpose());
  if (M == 1) return out;
  Eigen::VectorXd prev = x;
  Eigen::VectorXd cur = lbar(x);
  out += cur * approx.coeffs.col(1).transpose();
  for (int m = 2; m < M; ++m) {
    Eigen::VectorXd next = 2.0 * lbar(cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
    out += cur * approx.coeffs.col(m).transpose();
  }
  return out;
}

Eigen::VectorXd cheb_apply(const ChebyshevApprox& approx, int k,
                           const Eigen::SparseMatrix<double>& L, const Eigen::VectorXd& x,
                           const ApplyOptions& options) {
  detail::require(k >= 0 && k < approx.bands(), Errc::invalid_argument,
                  "band index out of range");
  ChebyshevApprox one;
  one.lambda_max = approx.lambda_max;
  one.coeffs = approx.coeffs.row(k);
  return cheb_apply_all(one, L, x, options).col(0);
}

Eigen::MatrixXd cheb_to_monomial(const ChebyshevApprox& approx) {
  const int M = approx.terms();
  if (M > kMaxMonomialTerms) {
    throw Error(Errc::order_too_high,
                "monomial conversion is limited to " + std::to_string(kMaxMonomialTerms) +
                    " terms, got " + std::to_string(M));
  }
  // poly[m] holds the power-series coefficients of T_m(2 lambda / lmax - 1).
  const double alpha = 2.0 / approx.lambda_max;
  std::vector<Eigen::VectorXd> poly(M, Eigen::VectorXd::Zero(M));
  poly[0](0) = 1.0;
  if (M > 1) {
    poly[1](0) = -1.0;
    poly[1](1) = alpha;
  }
  for (int m = 2; m < M; ++m) {
    Eigen::VectorXd next = -2.0 * poly[m - 1] - poly[m - 2];
    next.tail(M - 1) += 2.0 * alpha * poly[m - 1].head(M - 1);
    poly[m] = std::move(next);
  }
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(approx.bands(), M);
  for (int k = 0; k < approx.bands(); ++k) {
    h.row(k) = 0.5 * approx.coeffs(k, 0) * poly[0].transpose();
    for (int m = 1; m < M; ++m) h.row(k) += approx.coeffs(k, m) * poly[m].transpose();
  }
  return h;
}

ChebyshevApprox monomial_to_chebyshev(const Eigen::MatrixXd& h, double lambda_max) {
  const int M = static_cast<int>(h.cols());
  require_fit_args(M, lambda_max);
  ChebyshevApprox out;
  out.lambda_max = lambda_max;
  out.coeffs.resize(h.rows(), M);
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    auto horner = [&](double l) {
      double acc = 0.0;
      for (int p = M - 1; p >= 0; --p) acc = acc * l + h(k, p);
      return acc;
    };
    out.coeffs.row(k) = cheb_fit(horner, M, lambda_max).coeffs.row(0);
  }
  return out;
}

Eigen::VectorXd monomial_apply(const Eigen::MatrixXd& h, int k,
                               const Eigen::SparseMatrix<double>& L, const Eigen::VectorXd& x) {
  detail::require(k >= 0 && k < h.rows(), Errc::invalid_argument, "band index out of range");
  detail::require_size(x.size(), L.rows(), "monomial_apply signal");
  const Eigen::Index M = h.cols();
  Eigen::VectorXd y = h(k, M - 1) * x;
  for (Eigen::Index p = M - 2; p >= 0; --p) y = L * y + h(k, p) * x;
  return y;
}

double power_iteration_lambda_max(const Eigen::SparseMatrix<double>& L, int iterations) {
  const Eigen::Index n = L.rows();
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = (i % 2 == 0 ? 1.0 : -1.0) + 1e-3 * i;
  v.normalize();
  double rq = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXd w = L * v;
    rq = v.dot(w);
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    v = w / norm;
  }
  return std::max(rq, v.dot(L * v));
}

double estimated_lambda_max(const Eigen::SparseMatrix<double>& L, double inflation) {
  detail::require(inflation >= 1.0, Errc::invalid_argument, "inflation must be >= 1");
  return inflation * power_iteration_lambda_max(L);
}

}  // namespace vf
