// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail.hpp"

namespace vf {

using cd = std::complex<double>;

std::string_view to_string(EnergyKind kind) noexcept {
  switch (kind) {
    case EnergyKind::rihaczek: return "rihaczek";
    case EnergyKind::rid: return "rid";
    case EnergyKind::ideal: return "ideal";
    case EnergyKind::dual_vertex: return "dual-vertex";
  }
  return "unknown";
}

std::string_view to_string(KernelKind kind) noexcept {
  switch (kind) {
    case KernelKind::delta: return "delta";
    case KernelKind::sinc: return "sinc";
    case KernelKind::custom: return "custom";
  }
  return "unknown";
}

KernelKind parse_kernel_kind(std::string_view name) {
  if (name == "delta") return KernelKind::delta;
  if (name == "sinc") return KernelKind::sinc;
  throw Error(Errc::unsupported_kind, "unknown kernel '" + std::string(name) + "'");
}

double EnergyDistribution::max_imag() const {
  return E.size() == 0 ? 0.0 : E.imag().cwiseAbs().maxCoeff();
}

Eigen::MatrixXd EnergyDistribution::real(double tol) const {
  const double im = max_imag();
  if (im > tol) {
    throw Error(Errc::invalid_argument,
                "distribution has imaginary part " + std::to_string(im));
  }
  return E.real();
}

Marginals EnergyDistribution::marginals() const { return vf::marginals(E.real()); }

namespace {

// A(n, p) = X(p) u_p(n).
Eigen::MatrixXcd spectral_components(const Eigen::VectorXcd& x, const SpectralBasis& basis) {
  detail::require_size(x.size(), basis.size(), "distribution signal");
  const Eigen::VectorXcd X = gft(x, basis);
  return basis.complex_vectors() * X.asDiagonal();
}

}  // namespace

EnergyDistribution energy_distribution(const Eigen::VectorXcd& x, const SpectralBasis& basis) {
  const Eigen::MatrixXcd a = spectral_components(x, basis);
  EnergyDistribution out;
  out.kind = EnergyKind::rihaczek;
  out.E = x.asDiagonal() * a.conjugate();
  return out;
}

EnergyDistribution energy_distribution(const Eigen::VectorXd& x, const SpectralBasis& basis) {
  return energy_distribution(Eigen::VectorXcd(x.cast<cd>()), basis);
}

double RIDKernel::operator()(int p, int k, int q, int n) const {
  switch (kind) {
    case KernelKind::delta:
      return q == k ? 1.0 : 0.0;
    case KernelKind::sinc: {
      const int d = std::abs(p - q);
      if (std::abs(k - p) > d) return 0.0;
      const int lo = std::max(0, p - d);
      const int hi = std::min(n - 1, p + d);
      return 1.0 / (hi - lo + 1);
    }
    case KernelKind::custom:
      return custom(p, k, q);
  }
  return 0.0;
}

RIDKernel delta_kernel() { return {KernelKind::delta, {}}; }
RIDKernel sinc_kernel() { return {KernelKind::sinc, {}}; }

KernelChecks check_kernel(const RIDKernel& kernel, int n) {
  KernelChecks c;
  for (int p = 0; p < n; ++p) {
    for (int k = 0; k < n; ++k) {
      const double want = p == k ? 1.0 : 0.0;
      c.frequency_marginal_error =
          std::max(c.frequency_marginal_error, std::abs(kernel(p, k, p, n) - want));
    }
    for (int q = 0; q < n; ++q) {
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += kernel(p, k, q, n);
      c.vertex_marginal_error = std::max(c.vertex_marginal_error, std::abs(sum - 1.0));
    }
  }
  return c;
}

EnergyDistribution rid(const Eigen::VectorXcd& x, const SpectralBasis& basis,
                       const RIDKernel& kernel) {
  const int n = basis.size();
  const Eigen::MatrixXcd a = spectral_components(x, basis);
  EnergyDistribution out;
  out.kind = EnergyKind::rid;
  if (kernel.kind == KernelKind::delta) {
    out.E = a.rowwise().sum().asDiagonal() * a.conjugate();
    return out;
  }
  out.E = Eigen::MatrixXcd::Zero(n, n);
  if (kernel.kind == KernelKind::sinc) {
    // Each (p, q) pair adds a constant over a contiguous k range; accumulate
    // range endpoints and prefix-sum over k.
    Eigen::MatrixXcd diff = Eigen::MatrixXcd::Zero(n, n + 1);
    for (int p = 0; p < n; ++p) {
      for (int q = 0; q < n; ++q) {
        const int d = std::abs(p - q);
        const int lo = std::max(0, p - d);
        const int hi = std::min(n - 1, p + d);
        const Eigen::VectorXcd term =
            a.col(p).cwiseProduct(a.col(q).conjugate()) / static_cast<double>(hi - lo + 1);
        diff.col(lo) += term;
        diff.col(hi + 1) -= term;
      }
    }
    Eigen::VectorXcd run = Eigen::VectorXcd::Zero(n);
    for (int k = 0; k < n; ++k) {
      run += diff.col(k);
      out.E.col(k) = run;
    }
    return out;
  }
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const Eigen::VectorXcd term = a.col(p).cwiseProduct(a.col(q).conjugate());
      for (int k = 0; k < n; ++k) {
        const double phi = kernel(p, k, q, n);
        if (phi != 0.0) out.E.col(k) += phi * term;
      }
    }
  }
  return out;
}

EnergyDistribution rid(const Eigen::VectorXd& x, const SpectralBasis& basis,
                       const RIDKernel& kernel) {
  return rid(Eigen::VectorXcd(x.cast<cd>()), basis, kernel);
}

EnergyDistribution ideal_distribution(const Eigen::VectorXd& x, const Graph& g,
                                      const SpectralBasis& basis) {
  detail::require(!basis.is_complex, Errc::unsupported_kind,
                  "ideal distribution needs a real basis");
  const int n = basis.size();
  detail::require_size(g.size(), n, "ideal distribution graph");
  const LocalSmoothness ls = local_smoothness(x, g);
  EnergyDistribution out;
  out.kind = EnergyKind::ideal;
  out.E = Eigen::MatrixXcd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    if (!ls.valid[v]) continue;
    int best = 0;
    double gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
      const double d = std::abs(basis.eigenvalues(k) - ls.values(v));
      if (d < gap) {
        gap = d;
        best = k;
      }
    }
    out.E(v, best) = x(v) * x(v);
  }
  return out;
}

LocalSmoothness estimate_local_smoothness(const EnergyDistribution& dist,
                                          const SpectralBasis& basis,
                                          SmoothnessEstimator method) {
  const Eigen::MatrixXd e = dist.E.real();
  detail::require_size(e.cols(), basis.size(), "distribution columns");
  const Eigen::VectorXd rows = e.rowwise().sum();
  const double floor = kSmoothnessMaskRel * kSmoothnessMaskRel * rows.cwiseAbs().maxCoeff();
  LocalSmoothness out;
  out.values.setConstant(e.rows(), std::numeric_limits<double>::quiet_NaN());
  out.valid.assign(e.rows(), false);
  for (Eigen::Index v = 0; v < e.rows(); ++v) {
    if (!(std::abs(rows(v)) > floor)) continue;
    if (method == SmoothnessEstimator::argmax) {
      Eigen::Index k = 0;
      e.row(v).maxCoeff(&k);
      out.values(v) = basis.eigenvalues(k);
    } else {
      out.values(v) = e.row(v).dot(basis.eigenvalues) / rows(v);
    }
    out.valid[v] = true;
  }
  return out;
}

EnergyDistribution dual_vertex_distribution(const Eigen::VectorXd& x,
                                            const VertexWindowSet& windows,
                                            const SpectralBasis& basis) {
  const int n = basis.size();
  detail::require_size(x.size(), n, "dual distribution signal");
  detail::require_size(windows.size(), n, "dual distribution windows");
  const Eigen::MatrixXcd u = basis.complex_vectors();
  EnergyDistribution out;
  out.kind = EnergyKind::dual_vertex;
  out.E = Eigen::MatrixXcd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < n; ++k) {
      cd acc = 0.0;
      for (int m = 0; m < n; ++m) {
        const double hm = windows.h(m, v);
        if (hm == 0.0 || x(m) == 0.0) continue;
        const cd left = x(m) * std::conj(u(m, k)) * hm;
        for (int l = 0; l < n; ++l) {
          const double hl = windows.h(l, v);
          if (hl == 0.0) continue;
          acc += left * x(l) * u(l, k) * hl;
        }
      }
      out.E(v, k) = acc;
    }
  }
  return out;
}

}  // namespace vf
