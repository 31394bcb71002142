// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <string>
#include <vector>

#include "vf/error.hpp"

namespace vf {

enum class GraphKind { undirected, directed_cycle };

/// Weighted graph on vertices 0..N-1 stored as a dense weight matrix.
///
/// Undirected graphs carry a symmetric, nonnegative W with zero diagonal.
/// Directed cycles carry the cyclic shift pattern W(n, n-1 mod N) = 1.
class Graph {
 public:
  Graph(Eigen::MatrixXd weights, GraphKind kind = GraphKind::undirected);

  static Graph directed_cycle(int n);

  int size() const noexcept { return static_cast<int>(weights_.rows()); }
  GraphKind kind() const noexcept { return kind_; }
  bool undirected() const noexcept { return kind_ == GraphKind::undirected; }

  const Eigen::MatrixXd& weights() const noexcept { return weights_; }
  /// A = sign(W).
  Eigen::MatrixXd adjacency() const;
  /// D_nn = sum_m W_mn.
  Eigen::VectorXd degrees() const;

  bool connected() const;

 private:
  Eigen::MatrixXd weights_;
  GraphKind kind_;
};

/// L = D - W. Throws unsupported_kind for directed cycles.
Eigen::MatrixXd laplacian(const Graph& g);

/// Same operator in compressed sparse form, for matrix-vector recurrences.
Eigen::SparseMatrix<double> sparse_laplacian(const Graph& g);

/// Per-distance indicator matrices A_1..A_{D-1}; A_d(m,n) = 1 iff the
/// shortest-walk distance between m and n equals d.
struct DistanceMatrices {
  int n_vertices = 0;
  int max_distance = 1;                      // D; A_0 = I is implicit
  std::vector<Eigen::MatrixXd> by_distance;  // by_distance[d-1] = A_d

  int size() const noexcept { return n_vertices; }
  const Eigen::MatrixXd& at(int d) const { return by_distance.at(d - 1); }
};

/// Builds A_1..A_{max_d-1} with the Boolean-product recursion
/// A_d = (A (.) A_{d-1}) o (1 - A_{d-1}) o (1 - I), masking every pair
/// already reached at a shorter distance.
DistanceMatrices distance_matrices(const Graph& g, int max_d);

/// P_D = g(0) I + g(1) A_1 + ... + g(D-1) A_{D-1}; taps.size() must equal D.
Eigen::MatrixXd window_matrix(const DistanceMatrices& dm,
                              const std::vector<double>& taps);

namespace gen {

struct SwissRollParams {
  int n = 100;
  double alpha = 20.0;  // weight scale in exp(-r^2 / alpha)
  int kappa = 7;        // strongest edges kept per vertex
  std::uint64_t seed = 1;
};

Graph path(int n);
Graph cycle(int n);
Graph directed_cycle(int n);

/// Random points on a Swiss roll, Gaussian weights over unrolled
/// (arc length, height) distance, top-kappa sparsification symmetrized by
/// max, vertices reordered so the Fiedler vector is nondecreasing. If the
/// sparsified graph is disconnected kappa is raised until it is connected;
/// the kappa actually used is reported through kappa_used.
Graph swiss_roll(const SwissRollParams& params, int* kappa_used = nullptr);

}  // namespace gen

}  // namespace vf
