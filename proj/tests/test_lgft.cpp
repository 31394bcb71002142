// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "vf/lgft.hpp"

#include <cmath>
#include <random>

namespace {

struct Roll {
  vf::Graph g;
  vf::SpectralBasis b;
};

Roll roll(std::uint64_t seed = 1) {
  vf::gen::SwissRollParams p;
  p.seed = seed;
  Roll r{vf::gen::swiss_roll(p), {}};
  r.b = vf::decompose(r.g);
  return r;
}

vf::VertexWindowSet constant_windows(int n) {
  return {Eigen::MatrixXd::Ones(n, n), vf::WindowNorm::none};
}

}  // namespace

TEST_CASE("window form special cases") {
  const Roll r = roll();
  const int n = r.g.size();
  std::mt19937_64 rng(3);
  const Eigen::VectorXd x = oracle::random_signal(n, rng);
  const Eigen::VectorXd X = vf::gft(x, r.b);

  const vf::VertexFrequencyMap flat = vf::lgft_window(x, constant_windows(n), r.b);
  for (int m = 0; m < n; ++m)
    CHECK((flat.S.row(m).transpose().real() - X).cwiseAbs().maxCoeff() < 1e-12);

  const vf::VertexWindowSet delta{Eigen::MatrixXd::Identity(n, n), vf::WindowNorm::none};
  const vf::VertexFrequencyMap d = vf::lgft_window(x, delta, r.b);
  for (int m = 0; m < n; ++m)
    CHECK(std::abs(d.S(m, 0).real() - x(m) / std::sqrt(double(n))) < 1e-12);
  const Eigen::VectorXd vm = vf::marginals(vf::spectrogram(d)).vertex;
  CHECK((vm - x.cwiseAbs2()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("window form equals kernel projections") {
  const Roll r = roll(2);
  const int n = r.g.size();
  std::mt19937_64 rng(4);
  const Eigen::VectorXd x = oracle::random_signal(n, rng);
  const vf::VertexWindowSet w =
      vf::vertex_window(vf::distance_matrices(r.g, 3), vf::VertexShape::hann);
  const vf::VertexFrequencyMap s = vf::lgft_window(x, w, r.b);
  for (int m : {0, 17, 63, 99})
    for (int k : {0, 1, 40, 99}) {
      const std::complex<double> proj = vf::lgft_kernel(w, r.b, m, k).dot(x.cast<std::complex<double>>());
      CHECK(std::abs(proj - s.S(m, k)) < 1e-12);
    }
  // Vertex marginal of the spectrogram.
  const Eigen::VectorXd vm = vf::marginals(vf::spectrogram(s)).vertex;
  for (int m = 0; m < n; ++m)
    CHECK(vm(m) == doctest::Approx(x.cwiseProduct(w.h.col(m)).squaredNorm()).epsilon(1e-12));

  const vf::VertexFrequencyMap sub = vf::lgft_window(x, w, r.b, {5, 9});
  REQUIRE(sub.rows() == 2);
  CHECK((sub.S.row(1) - s.S.row(9)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(sub.vertices == std::vector<int>{5, 9});
  CHECK_THROWS_AS(vf::lgft_window(x, w, r.b, {100}), vf::Error);
  CHECK_THROWS_AS(vf::lgft_window(Eigen::VectorXd(x.head(50)), w, r.b), vf::Error);
}

TEST_CASE("energy unbiased with sum-squares-one windows") {
  const Roll r = roll(3);
  std::mt19937_64 rng(8);
  const Eigen::VectorXd x = oracle::random_signal(r.g.size(), rng);
  const vf::VertexWindowSet w = vf::normalize_windows(
      vf::vertex_window(vf::distance_matrices(r.g, 2), vf::VertexShape::hann),
      vf::WindowNorm::sum_squares_one);
  const vf::VertexFrequencyMap s = vf::lgft_window(x, w, r.b);
  CHECK(vf::spectrogram(s).sum() == doctest::Approx(x.squaredNorm()).epsilon(1e-12));
}

TEST_CASE("classical STFT on the directed cycle") {
  const int n = 16;
  const vf::SpectralBasis b = vf::decompose(vf::gen::directed_cycle(n), vf::BasisKind::analytic_dft);
  std::mt19937_64 rng(9);
  const Eigen::VectorXd x = oracle::random_signal(n, rng);
  const std::vector<double> taps = {1.0, 0.8, 0.4, 0.1};
  const vf::VertexFrequencyMap s = vf::lgft_window(x, vf::circular_window(taps, n), b);
  const Eigen::MatrixXcd ref = oracle::stft(x.cast<std::complex<double>>(), taps);
  CHECK((s.S - ref).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spectral shift form") {
  const Roll r = roll(4);
  const int n = r.g.size();
  std::mt19937_64 rng(10);
  const Eigen::VectorXd x = oracle::random_signal(n, rng);
  const Eigen::VectorXcd X = vf::gft(x, r.b).cast<std::complex<double>>();

  const vf::VertexFrequencyMap delta = vf::lgft_spectral_shift(X, {{1.0}, 0}, r.b);
  for (int m = 0; m < n; m += 7)
    for (int k = 0; k < n; k += 11)
      CHECK(std::abs(delta.S(m, k) - X(k) * r.b.vectors(m, k)) < 1e-12);

  const vf::IndexWindow ones{std::vector<double>(2 * n - 1, 1.0), n - 1};
  const vf::VertexFrequencyMap all = vf::lgft_spectral_shift(X, ones, r.b);
  for (int k = 0; k < n; k += 9) CHECK((all.S.col(k).real() - x).cwiseAbs().maxCoeff() < 1e-11);

  const vf::IndexWindow g = vf::gaussian_index_window(6, 2.5);
  CHECK(g.at(0) == 1.0);
  CHECK(g.at(7) == 0.0);
  CHECK(g.at(-6) == doctest::Approx(std::exp(-36.0 / 12.5)));
  const vf::VertexFrequencyMap s = vf::lgft_spectral_shift(X, g, r.b);
  for (int m = 0; m < n; m += 13)
    for (int k = 0; k < n; k += 5) {
      std::complex<double> acc = 0.0;
      for (int p = 0; p < n; ++p) {
        const int d = k - p;
        const double h = std::abs(d) <= 6 ? std::exp(-0.5 * d * d / 6.25) : 0.0;
        acc += X(p) * h * r.b.vectors(m, p);
      }
      CHECK(std::abs(acc - s.S(m, k)) < 1e-12);
    }
}

TEST_CASE("bank form") {
  const Roll r = roll(5);
  const int n = r.g.size();
  const double lmax = r.b.lambda_max();
  std::mt19937_64 rng(12);
  const Eigen::VectorXd x = oracle::random_signal(n, rng);
  const Eigen::MatrixXd L = vf::laplacian(r.g);

  const vf::VertexFrequencyMap two = vf::lgft_bank(x, vf::binomial_bank(2, r.b), r.b);
  const Eigen::MatrixXd s2 = two.real();
  CHECK((s2.col(0) - (x - L * x / lmax)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((s2.col(1) - L * x / lmax).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((s2.col(0) + s2.col(1) - x).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(two.axis == vf::MapAxis::band_index);

  const vf::TransferBank three = vf::binomial_bank(3, 1.0);
  CHECK(three(1, 0.5) == doctest::Approx(2 * 0.25));

  const vf::TransferBank rc = vf::raised_cosine_bank(15, lmax, false);
  const Eigen::VectorXd u = r.b.vectors.col(30);
  const Eigen::MatrixXd su = vf::lgft_bank(u, rc, r.b).real();
  for (int j = 0; j < 15; ++j)
    CHECK((su.col(j) - rc(j, r.b.eigenvalues(30)) * u).cwiseAbs().maxCoeff() < 1e-12);

  const vf::VertexFrequencyMap s = vf::lgft_bank(x, rc, r.b);
  const Eigen::MatrixXd P = vf::spectrogram(s);
  CHECK(P.sum() == doctest::Approx(x.squaredNorm()).epsilon(1e-10));
  const Eigen::VectorXd X = vf::gft(x, r.b);
  const Eigen::MatrixXd H = rc.sample(r.b.eigenvalues);
  for (int k = 0; k < 15; ++k)
    CHECK(P.col(k).sum() ==
          doctest::Approx(H.row(k).transpose().cwiseProduct(X).squaredNorm()).epsilon(1e-10));

  // Frame sandwich for a non-tight bank.
  const vf::TransferBank sq = vf::raised_cosine_bank(15, lmax, true);
  const Eigen::VectorXd g = sq.sample(r.b.eigenvalues).cwiseAbs2().colwise().sum().transpose();
  const double e = vf::spectrogram(vf::lgft_bank(x, sq, r.b)).sum();
  CHECK(e >= g.minCoeff() * x.squaredNorm() * (1 - 1e-12));
  CHECK(e <= g.maxCoeff() * x.squaredNorm() * (1 + 1e-12));
}

TEST_CASE("polynomial bank form approaches the spectral form") {
  const Roll r = roll(6);
  std::mt19937_64 rng(13);
  const Eigen::VectorXd x = oracle::random_signal(r.g.size(), rng);
  const vf::TransferBank bank = vf::meyer_bank(8, r.b.lambda_max());
  const Eigen::MatrixXd exact = vf::lgft_bank(x, bank, r.b).real();
  vf::ApplyOptions o;
  o.spectral_radius = r.b.lambda_max();
  double prev = 1e300;
  for (int M : {10, 20, 40}) {
    const Eigen::MatrixXd poly = vf::lgft_bank_polynomial(x, bank, r.g, M, o).real();
    const double err = (poly - exact).cwiseAbs().maxCoeff();
    const vf::ChebyshevApprox a = vf::cheb_fit(bank, M, bank.lambda_max);
    const double fit = (a.evaluate(r.b.eigenvalues) - bank.sample(r.b.eigenvalues)).cwiseAbs().maxCoeff();
    CHECK(err <= fit * x.lpNorm<1>() + 1e-12);
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("reassignment and ridge") {
  vf::VertexFrequencyMap m;
  m.S = Eigen::MatrixXcd::Zero(3, 3);
  m.S.row(0) << 0.1, 0.9, 0.3;
  m.S.row(1) << 0.0, 0.0, -2.0;
  m.S.row(2) << 0.5, 0.5, 0.1;
  m.axis = vf::MapAxis::band_index;
  m.band_centers = {0.0, 1.0, 2.0};
  const vf::VertexFrequencyMap r = vf::reassign(m);
  CHECK(r.S(0, 1) == std::complex<double>(0.9));
  CHECK(r.S(0, 0) == std::complex<double>(0.0));
  CHECK(r.S(0, 2) == std::complex<double>(0.0));
  CHECK(r.S(1, 2) == std::complex<double>(-2.0));
  CHECK(r.S(2, 0) == std::complex<double>(0.5));
  CHECK(r.S(2, 1) == std::complex<double>(0.0));
  CHECK(r.axis == vf::MapAxis::eigenvalue_assigned);
  CHECK(vf::ridge(m) == std::vector<int>{1, 2, 0});
  const vf::VertexFrequencyMap again = vf::reassign(r);
  CHECK((again.S - r.S).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("concentration measure") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
  a(0, 0) = 1.0;
  CHECK(vf::concentration(a) == doctest::Approx(1.0));
  const Eigen::MatrixXcd b = Eigen::MatrixXcd::Constant(2, 2, 0.5);
  CHECK(vf::concentration(b) == doctest::Approx(2.0));
  const Eigen::MatrixXcd c = Eigen::MatrixXcd::Constant(4, 9, std::complex<double>(0.0, 3.0));
  CHECK(vf::concentration(c) == doctest::Approx(6.0));
  CHECK_THROWS_AS(vf::concentration(Eigen::MatrixXcd::Zero(2, 2)), vf::Error);
}

TEST_CASE("tau optimization") {
  vf::TauOptions o;
  o.tau0 = 1.0;
  o.alpha = 0.4;
  o.tol = 1e-6;
  const vf::TauResult q = vf::minimize_tau([](double t) { return (t - 5) * (t - 5) + 1; }, o);
  CHECK(q.converged);
  CHECK(q.tau == doctest::Approx(5.0).epsilon(1e-5));
  CHECK(q.measure == doctest::Approx(1.0));
  CHECK(q.trace.size() >= 3u);

  o.max_iter = 2;
  const vf::TauResult cut = vf::minimize_tau([](double t) { return std::exp(-t); }, o);
  CHECK_FALSE(cut.converged);
  for (const auto& [t, m] : cut.trace) CHECK(m >= cut.measure);

  const Roll r = roll();
  const Eigen::VectorXd x = vf::piecewise_signal(r.b, vf::three_component_segments());
  for (double t : {0.5, 1.0, 2.0, 3.0, 4.0, 6.0}) CHECK(std::isfinite(vf::heat_concentration(x, r.b, t)));
  vf::TauOptions po;
  po.tau0 = 1.0;
  po.alpha = 1.0;
  const vf::TauResult best = vf::optimize_tau(x, r.b, po);
  CHECK(best.tau > 0.0);
  CHECK(best.measure <= vf::heat_concentration(x, r.b, 3.0) + 1e-12);

  o.tau0 = -1.0;
  CHECK_THROWS_AS(vf::minimize_tau([](double t) { return t; }, o), vf::Error);
}
