// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference computations for tests. Nothing here calls into the
// library's numerical code beyond reading plain matrices.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <queue>
#include <random>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

// All-pairs hop distances by BFS; -1 marks unreachable pairs.
inline Eigen::MatrixXi bfs_distances(const Eigen::MatrixXd& w) {
  const int n = static_cast<int>(w.rows());
  Eigen::MatrixXi d = Eigen::MatrixXi::Constant(n, n, -1);
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d(s, s) = 0;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 0; u < n; ++u) {
        if (w(v, u) > 0.0 && d(s, u) < 0) {
          d(s, u) = d(s, v) + 1;
          q.push(u);
        }
      }
    }
  }
  return d;
}

// X(k) = sum_n x(n) exp(-j 2 pi n k / N) / sqrt(N), 0-based n and k.
inline Eigen::VectorXcd dft(const Eigen::VectorXcd& x) {
  const int n = static_cast<int>(x.size());
  Eigen::VectorXcd out(n);
  for (int k = 0; k < n; ++k) {
    cd acc = 0.0;
    for (int i = 0; i < n; ++i)
      acc += x(i) * std::polar(1.0, -2.0 * std::numbers::pi * i * k / n);
    out(k) = acc / std::sqrt(static_cast<double>(n));
  }
  return out;
}

// S(m, k) = sum_n x(n) w((n - m) mod N) exp(-j 2 pi n k / N) / sqrt(N).
inline Eigen::MatrixXcd stft(const Eigen::VectorXcd& x, const std::vector<double>& w) {
  const int n = static_cast<int>(x.size());
  Eigen::MatrixXcd s(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      cd acc = 0.0;
      for (int i = 0; i < n; ++i) {
        const int off = ((i - m) % n + n) % n;
        const double wv = off < static_cast<int>(w.size()) ? w[off] : 0.0;
        acc += x(i) * wv * std::polar(1.0, -2.0 * std::numbers::pi * i * k / n);
      }
      s(m, k) = acc / std::sqrt(static_cast<double>(n));
    }
  }
  return s;
}

// Largest |residual| of L u_k - lambda_k u_k over all columns.
inline double eigen_residual(const Eigen::MatrixXd& l, const Eigen::VectorXd& lambda,
                             const Eigen::MatrixXd& u) {
  return (l * u - u * lambda.asDiagonal()).cwiseAbs().maxCoeff();
}

// Composite Simpson integral of f on [a, b] with an even panel count.
template <class F>
double simpson(F f, double a, double b, int panels = 2000) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

inline Eigen::VectorXd random_signal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = g(rng);
  return x;
}

}  // namespace oracle
