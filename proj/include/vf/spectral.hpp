// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "vf/graph.hpp"

namespace vf {

enum class BasisKind {
  laplacian,
  normalized_laplacian,
  generalized_laplacian,
  adjacency,
  normalized_adjacency,
  analytic_dft,
};

std::string_view to_string(BasisKind kind) noexcept;
BasisKind parse_basis_kind(std::string_view name);

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
///
/// Real bases fill `vectors`; the analytic DFT basis of a directed cycle
/// fills `cvectors` instead, with `eigenvalues` holding the normalized
/// frequencies 2*pi*(k-1)/N and `adjacency_eigenvalues` the shift
/// eigenvalues exp(-j*2*pi*(k-1)/N).
struct SpectralBasis {
  BasisKind kind = BasisKind::laplacian;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd vectors;
  Eigen::MatrixXcd cvectors;
  Eigen::VectorXcd adjacency_eigenvalues;
  bool is_complex = false;

  int size() const noexcept { return static_cast<int>(eigenvalues.size()); }
  double lambda_max() const { return eigenvalues(eigenvalues.size() - 1); }
  /// Eigenvectors as a complex matrix regardless of kind.
  Eigen::MatrixXcd complex_vectors() const;
  /// u_k(n) with 0-based k and n.
  std::complex<double> at(int n, int k) const;
};

SpectralBasis decompose(const Graph& g, BasisKind kind = BasisKind::laplacian);

/// For the generalized kind: maps the returned Euclidean-orthonormal y to
/// the D-orthonormal solutions u = D^{-1/2} y of L u = lambda D u.
Eigen::MatrixXd generalized_vectors(const SpectralBasis& basis, const Graph& g);

Eigen::VectorXd gft(const Eigen::VectorXd& x, const SpectralBasis& basis);
Eigen::VectorXcd gft(const Eigen::VectorXcd& x, const SpectralBasis& basis);
Eigen::VectorXd igft(const Eigen::VectorXd& spectrum, const SpectralBasis& basis);
Eigen::VectorXcd igft(const Eigen::VectorXcd& spectrum, const SpectralBasis& basis);

/// x^T L x / x^T x.
double smoothness(const Eigen::VectorXd& x, const Graph& g);

struct LocalSmoothness {
  Eigen::VectorXd values;   // NaN where masked
  std::vector<bool> valid;  // |x(n)| > 1e-8 * ||x||_inf
};

/// lambda(n) = (L x)(n) / x(n).
LocalSmoothness local_smoothness(const Eigen::VectorXd& x, const Graph& g);

/// Relative threshold below which |x(n)| counts as zero.
inline constexpr double kSmoothnessMaskRel = 1e-8;

/// 1 / max_{k,m} |u_k(m)|^2.
double uncertainty_bound(const SpectralBasis& basis);

/// Number of entries with |v| > tol * ||v||_inf.
int support_size(const Eigen::VectorXcd& v, double tol = 1e-9);

/// One piece of a piecewise eigenvector signal: vertices first..last
/// (1-based, inclusive) carry amplitude * u_eigen_index.
struct SignalSegment {
  int first = 1;
  int last = 1;
  int eigen_index = 1;
  double amplitude = 1.0;
};

/// Segments must partition 1..N in order; eigen indices within 1..N.
void validate_segments(const std::vector<SignalSegment>& segments, int n);

Eigen::VectorXd piecewise_signal(const SpectralBasis& basis,
                                 const std::vector<SignalSegment>& segments);

/// Three pieces on N = 100: 1-40 from u_72, 41-70 from u_50, 71-100 from u_6.
std::vector<SignalSegment> three_component_segments();

}  // namespace vf
