// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <random>

#include "detail.hpp"

namespace vf {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_kind: return "unsupported-kind";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::zero_degree: return "zero-degree";
    case Errc::zero_signal: return "zero-signal";
    case Errc::condition_violated: return "condition-violated";
    case Errc::lambda_max_mismatch: return "lambda-max-mismatch";
    case Errc::order_too_high: return "order-too-high";
    case Errc::non_finite: return "non-finite";
    case Errc::io: return "io";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

Graph::Graph(Eigen::MatrixXd weights, GraphKind kind)
    : weights_(std::move(weights)), kind_(kind) {
  detail::require(weights_.rows() >= 1 && weights_.rows() == weights_.cols(),
                  Errc::invalid_argument, "weight matrix must be square");
  detail::require(weights_.allFinite(), Errc::non_finite,
                  "weight matrix has non-finite entries");
  if (kind_ == GraphKind::undirected) {
    const double scale = std::max(1.0, weights_.cwiseAbs().maxCoeff());
    detail::require((weights_ - weights_.transpose()).cwiseAbs().maxCoeff() <=
                        1e-12 * scale,
                    Errc::invalid_argument, "undirected weights must be symmetric");
    detail::require(weights_.minCoeff() >= 0.0, Errc::invalid_argument,
                    "weights must be nonnegative");
    detail::require(weights_.diagonal().cwiseAbs().maxCoeff() == 0.0,
                    Errc::invalid_argument, "weight diagonal must be zero");
  } else {
    const int n = size();
    Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) shift(i, (i + n - 1) % n) = 1.0;
    detail::require(weights_ == shift, Errc::invalid_argument,
                    "directed-cycle weights must be the cyclic shift pattern");
  }
}

Graph Graph::directed_cycle(int n) {
  detail::require(n >= 2, Errc::invalid_argument, "directed cycle needs N >= 2");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) w(i, (i + n - 1) % n) = 1.0;
  return Graph(std::move(w), GraphKind::directed_cycle);
}

Eigen::MatrixXd Graph::adjacency() const {
  return weights_.unaryExpr([](double w) { return w > 0.0 ? 1.0 : 0.0; });
}

Eigen::VectorXd Graph::degrees() const { return weights_.colwise().sum().transpose(); }

bool Graph::connected() const {
  const int n = size();
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && (weights_(v, u) > 0.0 || weights_(u, v) > 0.0)) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

Eigen::MatrixXd laplacian(const Graph& g) {
  detail::require(g.undirected(), Errc::unsupported_kind,
                  "laplacian requires an undirected graph");
  Eigen::MatrixXd l = -g.weights();
  l.diagonal() += g.degrees();
  return l;
}

Eigen::SparseMatrix<double> sparse_laplacian(const Graph& g) {
  return laplacian(g).sparseView();
}

DistanceMatrices distance_matrices(const Graph& g, int max_d) {
  detail::require(g.undirected(), Errc::unsupported_kind,
                  "distance matrices require an undirected graph");
  detail::require(max_d >= 1, Errc::invalid_argument, "max distance must be >= 1");
  const int n = g.size();
  DistanceMatrices dm;
  dm.n_vertices = n;
  dm.max_distance = max_d;
  if (max_d == 1) return dm;

  Eigen::MatrixXd a = g.adjacency();
  a.diagonal().setZero();
  const Eigen::MatrixXd off_diag =
      Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n);

  // Pairs reached at any distance < d, including the diagonal; walks of
  // length d that land outside this set are exactly distance d.
  Eigen::MatrixXd reached = Eigen::MatrixXd::Identity(n, n) + a;
  dm.by_distance.push_back(a);
  for (int d = 2; d < max_d; ++d) {
    const Eigen::MatrixXd& prev = dm.by_distance.back();
    Eigen::MatrixXd walk = (a * prev).unaryExpr([](double v) { return v > 0.0 ? 1.0 : 0.0; });
    Eigen::MatrixXd next =
        walk.cwiseProduct(Eigen::MatrixXd::Ones(n, n) - reached).cwiseProduct(off_diag);
    reached += next;
    dm.by_distance.push_back(std::move(next));
  }
  return dm;
}

Eigen::MatrixXd window_matrix(const DistanceMatrices& dm,
                              const std::vector<double>& taps) {
  detail::require(static_cast<int>(taps.size()) == dm.max_distance,
                  Errc::dimension_mismatch,
                  "window taps length must equal the maximum distance D");
  detail::require(static_cast<int>(dm.by_distance.size()) == dm.max_distance - 1,
                  Errc::invalid_argument, "distance matrices are incomplete");
  const int n = dm.size();
  Eigen::MatrixXd p = taps[0] * Eigen::MatrixXd::Identity(n, n);
  for (int d = 1; d < dm.max_distance; ++d) p += taps[d] * dm.at(d);
  return p;
}

namespace gen {

Graph path(int n) {
  detail::require(n >= 2, Errc::invalid_argument, "path graph needs N >= 2");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) w(i, i + 1) = w(i + 1, i) = 1.0;
  return Graph(std::move(w));
}

Graph cycle(int n) {
  detail::require(n >= 3, Errc::invalid_argument, "cycle graph needs N >= 3");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) w(i, (i + 1) % n) = w((i + 1) % n, i) = 1.0;
  return Graph(std::move(w));
}

Graph directed_cycle(int n) { return Graph::directed_cycle(n); }

namespace {

// Arc length of the spiral (t cos t, t sin t) from 0 to t.
double roll_arc_length(double t) {
  return 0.5 * (t * std::sqrt(1.0 + t * t) + std::asinh(t));
}

constexpr double kRollTurnStart = 1.5 * std::numbers::pi;
constexpr double kRollTurnSpan = 3.0 * std::numbers::pi;
constexpr double kRollHeight = 21.0;

Eigen::MatrixXd sparsify(const Eigen::MatrixXd& full, int kappa) {
  const int n = static_cast<int>(full.rows());
  Eigen::MatrixXd kept = Eigen::MatrixXd::Zero(n, n);
  std::vector<int> order(n);
  for (int m = 0; m < n; ++m) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return full(m, a) > full(m, b); });
    int taken = 0;
    for (int idx : order) {
      if (taken == kappa) break;
      if (idx == m) continue;
      kept(m, idx) = full(m, idx);
      ++taken;
    }
  }
  return kept.cwiseMax(kept.transpose());
}

}  // namespace

Graph swiss_roll(const SwissRollParams& params, int* kappa_used) {
  const int n = params.n;
  detail::require(n >= 2, Errc::invalid_argument, "swiss roll needs N >= 2");
  detail::require(params.kappa >= 1 && params.kappa < n, Errc::invalid_argument,
                  "swiss roll kappa must satisfy 1 <= kappa < N");
  detail::require(params.alpha > 0.0, Errc::invalid_argument,
                  "swiss roll alpha must be positive");

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd pts(n, 2);
  for (int i = 0; i < n; ++i) {
    const double t = kRollTurnStart + kRollTurnSpan * unit(rng);
    const double h = kRollHeight * unit(rng);
    pts(i, 0) = roll_arc_length(t);
    pts(i, 1) = h;
  }

  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = m + 1; k < n; ++k) {
      const double r2 = (pts.row(m) - pts.row(k)).squaredNorm();
      full(m, k) = full(k, m) = std::exp(-r2 / params.alpha);
    }
  }

  int kappa = params.kappa;
  Eigen::MatrixXd w = sparsify(full, kappa);
  while (!Graph(w).connected()) {
    ++kappa;
    detail::require(kappa < n, Errc::invalid_argument,
                    "swiss roll cannot be connected by kappa sparsification");
    w = sparsify(full, kappa);
  }
  if (kappa_used) *kappa_used = kappa;

  Eigen::MatrixXd l = -w;
  l.diagonal() += w.colwise().sum().transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(l);
  Eigen::VectorXd fiedler = eig.eigenvectors().col(1);
  detail::normalize_sign(fiedler);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](int a, int b) { return fiedler(a) < fiedler(b); });
  Eigen::MatrixXd ordered(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ordered(i, j) = w(perm[i], perm[j]);
  return Graph(std::move(ordered));
}

}  // namespace gen

}  // namespace vf
