// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "detail.hpp"

namespace vf {

std::string_view to_string(BasisKind kind) noexcept {
  switch (kind) {
    case BasisKind::laplacian: return "laplacian";
    case BasisKind::normalized_laplacian: return "normalized-laplacian";
    case BasisKind::generalized_laplacian: return "generalized-laplacian";
    case BasisKind::adjacency: return "adjacency";
    case BasisKind::normalized_adjacency: return "normalized-adjacency";
    case BasisKind::analytic_dft: return "analytic-dft";
  }
  return "unknown";
}

BasisKind parse_basis_kind(std::string_view name) {
  for (BasisKind k : {BasisKind::laplacian, BasisKind::normalized_laplacian,
                      BasisKind::generalized_laplacian, BasisKind::adjacency,
                      BasisKind::normalized_adjacency, BasisKind::analytic_dft}) {
    if (to_string(k) == name) return k;
  }
  throw Error(Errc::unsupported_kind, "unknown basis kind '" + std::string(name) + "'");
}

Eigen::MatrixXcd SpectralBasis::complex_vectors() const {
  if (is_complex) return cvectors;
  return vectors.cast<std::complex<double>>();
}

std::complex<double> SpectralBasis::at(int n, int k) const {
  return is_complex ? cvectors(n, k) : std::complex<double>(vectors(n, k), 0.0);
}

namespace {

using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXld = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// First-order perturbation sweeps in extended precision. Each sweep removes
// the residual components along the other eigenvectors, which makes small
// eigenvector entries accurate relative to their own size rather than to
// the vector norm. Pairs closer than the gap floor are left untouched.
void refine_eigenpairs(const Eigen::MatrixXd& m, Eigen::VectorXd& lambda,
                       Eigen::MatrixXd& u, int sweeps = 2) {
  const Eigen::Index n = m.rows();
  const MatrixXld a = m.cast<long double>();
  MatrixXld v = u.cast<long double>();
  VectorXld l = lambda.cast<long double>();
  const long double floor =
      1e-10L * std::max<long double>(1.0L, l.cwiseAbs().maxCoeff());
  for (int s = 0; s < sweeps; ++s) {
    const MatrixXld r = a * v - v * l.asDiagonal();
    const MatrixXld c = v.transpose() * r;
    MatrixXld d = MatrixXld::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const long double gap = l(k) - l(j);
        if (j != k && std::abs(gap) > floor) d(j, k) = c(j, k) / gap;
      }
    }
    l += c.diagonal();
    v += v * d;
    for (Eigen::Index k = 0; k < n; ++k) v.col(k) /= v.col(k).norm();
  }
  lambda = l.cast<double>();
  u = v.cast<double>();
}

SpectralBasis symmetric_basis(const Eigen::MatrixXd& m, BasisKind kind) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  detail::require(eig.info() == Eigen::Success, Errc::non_finite,
                  "symmetric eigendecomposition failed");
  SpectralBasis b;
  b.kind = kind;
  b.eigenvalues = eig.eigenvalues();
  b.vectors = eig.eigenvectors();
  refine_eigenpairs(m, b.eigenvalues, b.vectors);
  for (Eigen::Index k = 0; k < b.vectors.cols(); ++k)
    detail::normalize_sign(b.vectors.col(k));
  return b;
}

Eigen::VectorXd inv_sqrt_degrees(const Graph& g) {
  const Eigen::VectorXd d = g.degrees();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    detail::require(d(i) > 0.0, Errc::zero_degree,
                    "vertex " + std::to_string(i + 1) + " has zero degree");
  }
  return d.cwiseSqrt().cwiseInverse();
}

SpectralBasis dft_basis(int n) {
  SpectralBasis b;
  b.kind = BasisKind::analytic_dft;
  b.is_complex = true;
  b.eigenvalues.resize(n);
  b.adjacency_eigenvalues.resize(n);
  b.cvectors.resize(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    const double w = 2.0 * std::numbers::pi * k / n;
    b.eigenvalues(k) = w;
    b.adjacency_eigenvalues(k) = std::polar(1.0, -w);
    for (int i = 0; i < n; ++i) {
      const long long turns = (static_cast<long long>(i) * k) % n;
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(turns) / n;
      b.cvectors(i, k) = std::polar(scale, phase);
    }
  }
  return b;
}

}  // namespace

SpectralBasis decompose(const Graph& g, BasisKind kind) {
  if (kind == BasisKind::analytic_dft) {
    detail::require(g.kind() == GraphKind::directed_cycle, Errc::unsupported_kind,
                    "analytic-dft basis requires a directed cycle");
    return dft_basis(g.size());
  }
  detail::require(g.undirected(), Errc::unsupported_kind,
                  std::string(to_string(kind)) + " basis requires an undirected graph");
  switch (kind) {
    case BasisKind::laplacian:
      return symmetric_basis(laplacian(g), kind);
    case BasisKind::normalized_laplacian:
    case BasisKind::generalized_laplacian: {
      const Eigen::VectorXd s = inv_sqrt_degrees(g);
      Eigen::MatrixXd m = s.asDiagonal() * laplacian(g) * s.asDiagonal();
      m = 0.5 * (m + m.transpose());
      return symmetric_basis(m, kind);
    }
    case BasisKind::adjacency:
      return symmetric_basis(g.weights(), kind);
    case BasisKind::normalized_adjacency: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g.weights(), Eigen::EigenvaluesOnly);
      const double top = eig.eigenvalues().cwiseAbs().maxCoeff();
      detail::require(top > 0.0, Errc::invalid_argument,
                      "normalized adjacency of an edgeless graph");
      return symmetric_basis(g.weights() / top, kind);
    }
    case BasisKind::analytic_dft:
      break;
  }
  throw Error(Errc::unsupported_kind, "unsupported basis kind");
}

Eigen::MatrixXd generalized_vectors(const SpectralBasis& basis, const Graph& g) {
  detail::require(basis.kind == BasisKind::generalized_laplacian, Errc::unsupported_kind,
                  "generalized_vectors needs a generalized-laplacian basis");
  detail::require_size(basis.size(), g.size(), "generalized_vectors");
  return inv_sqrt_degrees(g).asDiagonal() * basis.vectors;
}

Eigen::VectorXd gft(const Eigen::VectorXd& x, const SpectralBasis& basis) {
  detail::require(!basis.is_complex, Errc::unsupported_kind,
                  "real gft on a complex basis; pass a complex signal");
  detail::require_size(x.size(), basis.size(), "gft signal");
  return basis.vectors.transpose() * x;
}

Eigen::VectorXcd gft(const Eigen::VectorXcd& x, const SpectralBasis& basis) {
  detail::require_size(x.size(), basis.size(), "gft signal");
  if (basis.is_complex) return basis.cvectors.adjoint() * x;
  return basis.vectors.transpose() * x;
}

Eigen::VectorXd igft(const Eigen::VectorXd& spectrum, const SpectralBasis& basis) {
  detail::require(!basis.is_complex, Errc::unsupported_kind,
                  "real igft on a complex basis; pass a complex spectrum");
  detail::require_size(spectrum.size(), basis.size(), "igft spectrum");
  return basis.vectors * spectrum;
}

Eigen::VectorXcd igft(const Eigen::VectorXcd& spectrum, const SpectralBasis& basis) {
  detail::require_size(spectrum.size(), basis.size(), "igft spectrum");
  if (basis.is_complex) return basis.cvectors * spectrum;
  return basis.vectors * spectrum;
}

double smoothness(const Eigen::VectorXd& x, const Graph& g) {
  detail::require_size(x.size(), g.size(), "smoothness signal");
  const double e = x.squaredNorm();
  detail::require(e > 0.0, Errc::zero_signal, "smoothness of a zero signal");
  return x.dot(laplacian(g) * x) / e;
}

LocalSmoothness local_smoothness(const Eigen::VectorXd& x, const Graph& g) {
  detail::require_size(x.size(), g.size(), "local_smoothness signal");
  const Eigen::VectorXd lx = laplacian(g) * x;
  const double eps = kSmoothnessMaskRel * x.cwiseAbs().maxCoeff();
  LocalSmoothness out;
  out.values.setConstant(x.size(), std::numeric_limits<double>::quiet_NaN());
  out.valid.assign(x.size(), false);
  for (Eigen::Index n = 0; n < x.size(); ++n) {
    if (std::abs(x(n)) > eps) {
      out.values(n) = lx(n) / x(n);
      out.valid[n] = true;
    }
  }
  return out;
}

double uncertainty_bound(const SpectralBasis& basis) {
  const double peak = basis.is_complex ? basis.cvectors.cwiseAbs2().maxCoeff()
                                       : basis.vectors.cwiseAbs2().maxCoeff();
  return 1.0 / peak;
}

int support_size(const Eigen::VectorXcd& v, double tol) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return 0;
  int count = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > tol * peak) ++count;
  return count;
}

void validate_segments(const std::vector<SignalSegment>& segments, int n) {
  detail::require(!segments.empty(), Errc::invalid_argument, "signal has no segments");
  int next = 1;
  for (const SignalSegment& s : segments) {
    detail::require(s.first == next, Errc::invalid_argument,
                    "segments must partition the vertices in order; expected a segment "
                    "starting at vertex " + std::to_string(next));
    detail::require(s.last >= s.first, Errc::invalid_argument,
                    "segment ends before it starts");
    detail::require(s.eigen_index >= 1 && s.eigen_index <= n, Errc::invalid_argument,
                    "eigen index " + std::to_string(s.eigen_index) + " outside 1.." +
                        std::to_string(n));
    next = s.last + 1;
  }
  detail::require(next == n + 1, Errc::invalid_argument,
                  "segments cover 1.." + std::to_string(next - 1) + " but the graph has " +
                      std::to_string(n) + " vertices");
}

Eigen::VectorXd piecewise_signal(const SpectralBasis& basis,
                                 const std::vector<SignalSegment>& segments) {
  detail::require(!basis.is_complex, Errc::unsupported_kind,
                  "piecewise eigenvector signals need a real basis");
  const int n = basis.size();
  validate_segments(segments, n);
  Eigen::VectorXd x(n);
  for (const SignalSegment& s : segments) {
    for (int v = s.first; v <= s.last; ++v)
      x(v - 1) = s.amplitude * basis.vectors(v - 1, s.eigen_index - 1);
  }
  return x;
}

std::vector<SignalSegment> three_component_segments() {
  return {{1, 40, 72, 1.0}, {41, 70, 50, 1.0}, {71, 100, 6, 1.0}};
}

}  // namespace vf
