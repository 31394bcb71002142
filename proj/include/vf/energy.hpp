// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string_view>

#include "vf/graph.hpp"
#include "vf/lgft.hpp"
#include "vf/spectral.hpp"
#include "vf/windows.hpp"

namespace vf {

enum class EnergyKind { rihaczek, rid, ideal, dual_vertex };

std::string_view to_string(EnergyKind kind) noexcept;

/// E(n, k) over vertices n and spectral indices k.
struct EnergyDistribution {
  Eigen::MatrixXcd E;
  EnergyKind kind = EnergyKind::rihaczek;

  double max_imag() const;
  /// Real part; throws when max |Im E| exceeds tol.
  Eigen::MatrixXd real(double tol = 1e-10) const;
  /// Row and column sums of the real part.
  Marginals marginals() const;
};

/// E(n, k) = x(n) X^*(k) u_k^*(n).
EnergyDistribution energy_distribution(const Eigen::VectorXd& x, const SpectralBasis& basis);
EnergyDistribution energy_distribution(const Eigen::VectorXcd& x, const SpectralBasis& basis);

enum class KernelKind { delta, sinc, custom };

std::string_view to_string(KernelKind kind) noexcept;
KernelKind parse_kernel_kind(std::string_view name);

/// phi(p, k, q) over 0-based spectral indices on N bins.
struct RIDKernel {
  KernelKind kind = KernelKind::delta;
  std::function<double(int p, int k, int q)> custom;

  double operator()(int p, int k, int q, int n) const;
};

RIDKernel delta_kernel();
/// 1 / count over |k - p| <= |p - q|, count = number of in-range bins
/// (1 + 2|p - q| away from the spectral edges).
RIDKernel sinc_kernel();

struct KernelChecks {
  double frequency_marginal_error = 0.0;  // max |phi(p,k,p) - delta(p-k)|
  double vertex_marginal_error = 0.0;     // max |sum_k phi(p,k,q) - 1|
};

KernelChecks check_kernel(const RIDKernel& kernel, int n);

/// G(n,k) = sum_p sum_q X(p) X^*(q) u_p(n) u_q^*(n) phi(p,k,q).
EnergyDistribution rid(const Eigen::VectorXcd& x, const SpectralBasis& basis,
                       const RIDKernel& kernel);
EnergyDistribution rid(const Eigen::VectorXd& x, const SpectralBasis& basis,
                       const RIDKernel& kernel);

/// |x(n)|^2 placed at the eigenvalue nearest to lambda(n) (lower index on
/// ties); masked vertices get an all-zero row.
EnergyDistribution ideal_distribution(const Eigen::VectorXd& x, const Graph& g,
                                      const SpectralBasis& basis);

enum class SmoothnessEstimator { argmax, center_of_mass };

/// Per-vertex lambda estimate from a distribution; rows whose sum is below
/// (1e-8)^2 of the largest row sum are masked.
LocalSmoothness estimate_local_smoothness(const EnergyDistribution& dist,
                                          const SpectralBasis& basis,
                                          SmoothnessEstimator method);

/// G(n,k) = sum_m sum_l x(m) x^*(l) u_k^*(m) u_k(l) h_n(m) h_n^*(l), the
/// vertex-kernel form that coincides with the window-LGFT spectrogram.
EnergyDistribution dual_vertex_distribution(const Eigen::VectorXd& x,
                                            const VertexWindowSet& windows,
                                            const SpectralBasis& basis);

}  // namespace vf
