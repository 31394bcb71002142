// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <functional>

#include "vf/windows.hpp"

namespace vf {

/// Truncated Chebyshev expansions, one row of coefficients per band:
/// P_k(lambda) = c_{k,0}/2 + sum_{m>=1} c_{k,m} T_m(2 lambda / lambda_max - 1).
struct ChebyshevApprox {
  Eigen::MatrixXd coeffs;  // K x M
  double lambda_max = 0.0;

  int bands() const noexcept { return static_cast<int>(coeffs.rows()); }
  int terms() const noexcept { return static_cast<int>(coeffs.cols()); }
  double operator()(int k, double lambda) const;
  /// K x P matrix of P_k(lambdas(p)).
  Eigen::MatrixXd evaluate(const Eigen::VectorXd& lambdas) const;
};

/// T_m(z) by the three-term recurrence.
double chebyshev_t(int m, double z);

/// Gauss-Chebyshev quadrature with Q = max(4M, 256) nodes.
ChebyshevApprox cheb_fit(const std::function<double(double)>& H, int M, double lambda_max);
ChebyshevApprox cheb_fit(const TransferBank& bank, int M, double lambda_max);

struct ApplyOptions {
  /// Known spectral radius of L; 0 means estimate it by power iteration.
  double spectral_radius = 0.0;
  bool check_lambda_max = true;
};

/// P_k(L) x via y_m = 2 Lbar y_{m-1} - y_{m-2}, Lbar = 2L / lambda_max - I.
Eigen::VectorXd cheb_apply(const ChebyshevApprox& approx, int k,
                           const Eigen::SparseMatrix<double>& L, const Eigen::VectorXd& x,
                           const ApplyOptions& options = {});
/// All bands at once; column k is P_k(L) x.
Eigen::MatrixXd cheb_apply_all(const ChebyshevApprox& approx,
                               const Eigen::SparseMatrix<double>& L,
                               const Eigen::VectorXd& x, const ApplyOptions& options = {});

inline constexpr int kMaxMonomialTerms = 30;

/// h(k, p) with P_k(lambda) = sum_p h(k, p) lambda^p. Throws order_too_high
/// beyond kMaxMonomialTerms terms.
Eigen::MatrixXd cheb_to_monomial(const ChebyshevApprox& approx);
ChebyshevApprox monomial_to_chebyshev(const Eigen::MatrixXd& h, double lambda_max);

/// sum_p h(k, p) L^p x by Horner's rule with matrix-vector products.
Eigen::VectorXd monomial_apply(const Eigen::MatrixXd& h, int k,
                               const Eigen::SparseMatrix<double>& L, const Eigen::VectorXd& x);

/// Power-iteration estimate (a lower bound) of the largest eigenvalue of a
/// symmetric positive semidefinite L.
double power_iteration_lambda_max(const Eigen::SparseMatrix<double>& L, int iterations = 200);

/// Estimate scaled by the inflation factor, for fitting without a spectrum.
double estimated_lambda_max(const Eigen::SparseMatrix<double>& L, double inflation = 1.01);

}  // namespace vf
