// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "vf/graph.hpp"

#include <random>

using vf::Errc;
using vf::Graph;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < p) w(i, j) = w(j, i) = 0.5 + u(rng);
  return Graph(w);
}

}  // namespace

TEST_CASE("laplacian of small paths") {
  Eigen::MatrixXd l2(2, 2);
  l2 << 1, -1, -1, 1;
  CHECK(vf::laplacian(vf::gen::path(2)).isApprox(l2));

  Eigen::MatrixXd l3(3, 3);
  l3 << 1, -1, 0, -1, 2, -1, 0, -1, 1;
  CHECK((vf::laplacian(vf::gen::path(3)) - l3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("laplacian rows sum to zero and reject directed cycles") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_graph(20, 0.3, rng);
    CHECK((vf::laplacian(g) * Eigen::VectorXd::Ones(20)).cwiseAbs().maxCoeff() < 1e-12);
  }
  try {
    vf::laplacian(Graph::directed_cycle(5));
    FAIL("expected unsupported_kind");
  } catch (const vf::Error& e) {
    CHECK(e.code() == Errc::unsupported_kind);
  }
  CHECK(vf::sparse_laplacian(vf::gen::cycle(6)).nonZeros() == 18);
}

TEST_CASE("graph construction validates weights") {
  Eigen::MatrixXd w(2, 2);
  w << 0, 1, 2, 0;
  CHECK_THROWS_AS(Graph{w}, vf::Error);
  w << 0, -1, -1, 0;
  CHECK_THROWS_AS(Graph{w}, vf::Error);
  w << 1, 1, 1, 0;
  CHECK_THROWS_AS(Graph{w}, vf::Error);
  Eigen::MatrixXd cyc = Eigen::MatrixXd::Zero(3, 3);
  cyc(0, 1) = 1;
  CHECK_THROWS_AS(Graph(cyc, vf::GraphKind::directed_cycle), vf::Error);
  const Graph dc = Graph::directed_cycle(4);
  CHECK(dc.weights()(0, 3) == 1.0);
  CHECK(dc.weights()(2, 1) == 1.0);
  CHECK(dc.weights().sum() == 4.0);
}

TEST_CASE("distance matrices match BFS") {
  SUBCASE("path-3") {
    const vf::DistanceMatrices dm = vf::distance_matrices(vf::gen::path(3), 3);
    Eigen::MatrixXd a2(3, 3);
    a2 << 0, 0, 1, 0, 0, 0, 1, 0, 0;
    CHECK(dm.at(2) == a2);
    CHECK(dm.at(1) == vf::gen::path(3).adjacency());
  }
  SUBCASE("cycle-4 antipodes") {
    const vf::DistanceMatrices dm = vf::distance_matrices(vf::gen::cycle(4), 3);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(dm.at(2)(i, j) == ((i + 2) % 4 == j ? 1.0 : 0.0));
  }
  SUBCASE("random graphs") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 8; ++t) {
      const Graph g = random_graph(25, 0.08, rng);
      const Eigen::MatrixXi d = oracle::bfs_distances(g.weights());
      const vf::DistanceMatrices dm = vf::distance_matrices(g, 8);
      Eigen::MatrixXd cover = Eigen::MatrixXd::Identity(25, 25);
      for (int dist = 1; dist < 8; ++dist) {
        const Eigen::MatrixXd& a = dm.at(dist);
        CHECK(a.diagonal().cwiseAbs().maxCoeff() == 0.0);
        for (int i = 0; i < 25; ++i)
          for (int j = 0; j < 25; ++j) CHECK(a(i, j) == (d(i, j) == dist ? 1.0 : 0.0));
        cover += a;
      }
      CHECK(cover.maxCoeff() <= 1.0);
    }
  }
}

TEST_CASE("window matrices") {
  const Graph p3 = vf::gen::path(3);
  CHECK(vf::window_matrix(vf::distance_matrices(p3, 1), {1.0}) ==
        Eigen::MatrixXd::Identity(3, 3));
  const Eigen::MatrixXd hann = vf::window_matrix(vf::distance_matrices(p3, 2), {1.0, 0.5});
  CHECK(hann.isApprox(Eigen::MatrixXd::Identity(3, 3) + 0.5 * p3.adjacency()));
  CHECK_THROWS_AS(vf::window_matrix(vf::distance_matrices(p3, 2), {1.0}), vf::Error);

  std::mt19937_64 rng(5);
  const Graph g = random_graph(30, 0.1, rng);
  if (g.connected()) {
    const Eigen::MatrixXi d = oracle::bfs_distances(g.weights());
    const int diam = d.maxCoeff();
    const Eigen::MatrixXd all = vf::window_matrix(vf::distance_matrices(g, diam + 1),
                                                  std::vector<double>(diam + 1, 1.0));
    CHECK(all == Eigen::MatrixXd::Ones(30, 30));
  }
}

TEST_CASE("generators") {
  const Graph p2 = vf::gen::path(2);
  CHECK(p2.size() == 2);
  CHECK(p2.weights()(0, 1) == 1.0);
  CHECK_THROWS_AS(vf::gen::path(1), vf::Error);
  CHECK(vf::gen::cycle(5).degrees().isApprox(Eigen::VectorXd::Constant(5, 2.0)));

  vf::gen::SwissRollParams params;
  params.seed = 42;
  int kappa = 0;
  const Graph a = vf::gen::swiss_roll(params, &kappa);
  const Graph b = vf::gen::swiss_roll(params);
  CHECK(a.weights() == b.weights());
  CHECK(a.connected());
  CHECK(kappa >= params.kappa);
  CHECK((oracle::bfs_distances(a.weights()).array() >= 0).all());
  params.kappa = 100;
  CHECK_THROWS_AS(vf::gen::swiss_roll(params), vf::Error);
}

TEST_CASE("swiss roll is ordered by the Fiedler vector") {
  vf::gen::SwissRollParams params;
  params.seed = 9;
  const Graph g = vf::gen::swiss_roll(params);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(vf::laplacian(g));
  Eigen::VectorXd f = eig.eigenvectors().col(1);
  if (f.cwiseAbs().maxCoeff() != f.maxCoeff()) f = -f;
  int ascending = 0;
  for (int i = 1; i < f.size(); ++i) ascending += f(i) >= f(i - 1) - 1e-12;
  CHECK(ascending == f.size() - 1);
}
