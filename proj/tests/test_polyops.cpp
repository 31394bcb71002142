// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "vf/io.hpp"
#include "vf/polyops.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace {

struct Fixture {
  vf::Graph g;
  vf::SpectralBasis b;
  Eigen::SparseMatrix<double> L;
  vf::ApplyOptions exact;
};

Fixture roll() {
  vf::gen::SwissRollParams p;
  p.seed = 2;
  Fixture f{vf::gen::swiss_roll(p), {}, {}, {}};
  f.b = vf::decompose(f.g);
  f.L = vf::sparse_laplacian(f.g);
  f.exact.spectral_radius = f.b.lambda_max();
  return f;
}

Eigen::MatrixXd table2() {
  const Eigen::MatrixXd raw = vf::io::read_matrix_csv(VF_FIXTURE_DIR "/table2.csv");
  return raw.rightCols(6);
}

}  // namespace

TEST_CASE("chebyshev recurrence") {
  for (double z : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
    CHECK(vf::chebyshev_t(0, z) == 1.0);
    CHECK(vf::chebyshev_t(1, z) == z);
    CHECK(vf::chebyshev_t(2, z) == doctest::Approx(2 * z * z - 1));
    CHECK(vf::chebyshev_t(3, z) == doctest::Approx(4 * z * z * z - 3 * z));
    CHECK(vf::chebyshev_t(9, z) == doctest::Approx(std::cos(9 * std::acos(z))));
  }
}

TEST_CASE("fit of simple functions") {
  for (int M : {2, 5, 20}) {
    CAPTURE(M);
    const vf::ChebyshevApprox lin = vf::cheb_fit([](double l) { return l / 3.0; }, M, 3.0);
    CHECK(std::abs(lin.coeffs(0, 0) - 1.0) < 1e-10);
    CHECK(std::abs(lin.coeffs(0, 1) - 0.5) < 1e-10);
    for (int m = 2; m < M; ++m) CHECK(std::abs(lin.coeffs(0, m)) < 1e-12);
    const vf::ChebyshevApprox one = vf::cheb_fit([](double) { return 1.0; }, M, 3.0);
    CHECK(one.coeffs(0, 0) == doctest::Approx(2.0));
    CHECK(one(0, 1.7) == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(vf::cheb_fit([](double) { return 1.0; }, 0, 1.0), vf::Error);
  CHECK_THROWS_AS(vf::cheb_fit([](double) { return std::nan(""); }, 4, 1.0), vf::Error);
}

TEST_CASE("fit coefficients match the quadrature integral") {
  // c_m = (2/pi) int_0^pi H(lmax (cos t + 1) / 2) cos(m t) dt, by Simpson.
  auto h = [](double l) { return std::exp(-l) * std::sin(3 * l); };
  const double lmax = 4.0;
  const vf::ChebyshevApprox a = vf::cheb_fit(h, 12, lmax);
  for (int m = 0; m < 12; ++m) {
    const double ref = 2.0 / std::numbers::pi *
                       oracle::simpson(
                           [&](double t) { return h(lmax * (std::cos(t) + 1) / 2) * std::cos(m * t); },
                           0.0, std::numbers::pi, 4000);
    CHECK(a.coeffs(0, m) == doctest::Approx(ref).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("application matches the spectral oracle") {
  const Fixture f = roll();
  const double lmax = f.b.lambda_max();
  const vf::ChebyshevApprox lin = vf::cheb_fit([&](double l) { return l / lmax; }, 6, lmax);
  for (int k : {0, 5, 50, 99}) {
    const Eigen::VectorXd u = f.b.vectors.col(k);
    const Eigen::VectorXd y = vf::cheb_apply(lin, 0, f.L, u, f.exact);
    CHECK((y - f.b.eigenvalues(k) / lmax * u).cwiseAbs().maxCoeff() < 1e-10);
  }
  std::mt19937_64 rng(11);
  const Eigen::VectorXd x = oracle::random_signal(f.g.size(), rng);
  const vf::ChebyshevApprox c = vf::cheb_fit([](double) { return 2.5; }, 3, lmax);
  CHECK((vf::cheb_apply(c, 0, f.L, x, f.exact) - 2.5 * x).cwiseAbs().maxCoeff() < 1e-12);

  auto h = [](double l) { return 1.0 / (1.0 + l * l); };
  const vf::ChebyshevApprox p = vf::cheb_fit(h, 25, lmax);
  Eigen::VectorXd pl(f.b.size());
  for (int i = 0; i < f.b.size(); ++i) pl(i) = p(0, f.b.eigenvalues(i));
  const Eigen::VectorXd ref = f.b.vectors * pl.asDiagonal() * f.b.vectors.transpose() * x;
  CHECK((vf::cheb_apply(p, 0, f.L, x, f.exact) - ref).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("lambda_max mismatch is detected") {
  const Fixture f = roll();
  const vf::ChebyshevApprox small =
      vf::cheb_fit([](double l) { return l; }, 4, 0.5 * f.b.lambda_max());
  const Eigen::VectorXd x = Eigen::VectorXd::Ones(f.g.size());
  try {
    vf::cheb_apply(small, 0, f.L, x);
    FAIL("expected lambda_max_mismatch");
  } catch (const vf::Error& e) {
    CHECK(e.code() == vf::Errc::lambda_max_mismatch);
  }
  const double est = vf::power_iteration_lambda_max(f.L);
  CHECK(est <= f.b.lambda_max() * (1 + 1e-12));
  CHECK(est >= 0.98 * f.b.lambda_max());
  CHECK(vf::estimated_lambda_max(f.L) == doctest::Approx(1.01 * est));
  const vf::ChebyshevApprox ok =
      vf::cheb_fit([](double l) { return l; }, 4, vf::estimated_lambda_max(f.L));
  CHECK_NOTHROW(vf::cheb_apply(ok, 0, f.L, x));
}

TEST_CASE("monomial conversion") {
  const vf::ChebyshevApprox lin = vf::cheb_fit([](double l) { return l / 2.0; }, 4, 2.0);
  const Eigen::MatrixXd h = vf::cheb_to_monomial(lin);
  CHECK(std::abs(h(0, 0)) < 1e-12);
  CHECK(h(0, 1) == doctest::Approx(0.5));
  CHECK(std::abs(h(0, 2)) < 1e-12);
  const Eigen::MatrixXd one = vf::cheb_to_monomial(vf::cheb_fit([](double) { return 1.0; }, 5, 3.0));
  CHECK(one(0, 0) == doctest::Approx(1.0));
  CHECK(one.row(0).tail(4).cwiseAbs().maxCoeff() < 1e-12);

  const vf::TransferBank bank = vf::raised_cosine_bank(6, 5.0, true);
  const vf::ChebyshevApprox a = vf::cheb_fit(bank, 12, 5.0);
  const Eigen::MatrixXd hm = vf::cheb_to_monomial(a);
  const vf::ChebyshevApprox back = vf::monomial_to_chebyshev(hm, 5.0);
  CHECK((back.coeffs - a.coeffs).cwiseAbs().maxCoeff() < 1e-8);
  for (double l : {0.0, 0.3, 2.2, 4.9, 5.0})
    for (int k = 0; k < 6; ++k) {
      double mono = 0.0;
      for (int p = 11; p >= 0; --p) mono = mono * l + hm(k, p);
      CHECK(std::abs(mono - a(k, l)) < 1e-8);
    }

  const vf::ChebyshevApprox big = vf::cheb_fit([](double l) { return l; }, 31, 1.0);
  try {
    vf::cheb_to_monomial(big);
    FAIL("expected order_too_high");
  } catch (const vf::Error& e) {
    CHECK(e.code() == vf::Errc::order_too_high);
  }
}

TEST_CASE("table coefficients: monomial and recurrence forms agree") {
  const Fixture f = roll();
  const Eigen::MatrixXd h = table2();
  REQUIRE(h.rows() == 10);
  const vf::ChebyshevApprox c = vf::monomial_to_chebyshev(h, f.b.lambda_max());
  std::mt19937_64 rng(5);
  const Eigen::VectorXd x = oracle::random_signal(f.g.size(), rng);
  for (int k = 0; k < 10; ++k) {
    const Eigen::VectorXd mono = vf::monomial_apply(h, k, f.L, x);
    const Eigen::VectorXd cheb = vf::cheb_apply(c, k, f.L, x, f.exact);
    CHECK((mono - cheb).cwiseAbs().maxCoeff() < 1e-8 * std::max(1.0, mono.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("table coefficients are reproduced by refitting") {
  // The table's lambda_max is unstated; 7.61 is the probed value.
  const double lmax = 7.61;
  const Eigen::MatrixXd table = table2();
  const vf::ChebyshevApprox a = vf::cheb_fit(vf::raised_cosine_bank(10, lmax, true), 6, lmax);
  const Eigen::MatrixXd h = vf::cheb_to_monomial(a);
  for (int k = 0; k < 9; ++k) {
    CAPTURE(k);
    const double rel =
        ((h.row(k) - table.row(k)).array().abs() / table.row(k).array().abs()).maxCoeff();
    CHECK(rel < 0.05);
  }
  // Every table row reconstructs a bounded band-shaped function.
  const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(400, 0.0, lmax);
  for (int k = 0; k < 10; ++k) {
    int turns = 0;
    double prev = 0.0, prev_d = 0.0;
    for (Eigen::Index p = 0; p < grid.size(); ++p) {
      double v = 0.0;
      for (int q = 5; q >= 0; --q) v = v * grid(p) + table(k, q);
      CHECK(v > -0.2);
      CHECK(v < 1.2);
      if (p > 0) {
        const double d = v - prev;
        if (p > 1 && prev_d > 0 && d < 0) ++turns;
        prev_d = d;
      }
      prev = v;
    }
    CHECK(turns <= 2);
  }
}

TEST_CASE("raised cosine partition survives the order-19 fit") {
  const double lmax = 9.0;
  const vf::TransferBank bank = vf::raised_cosine_bank(15, lmax, true);
  const vf::ChebyshevApprox a = vf::cheb_fit(bank, 20, lmax);
  const Eigen::VectorXd grid = vf::validation_grid(lmax, 1000);
  const Eigen::MatrixXd p = a.evaluate(grid);
  const Eigen::VectorXd sum = p.colwise().sum().transpose();
  CHECK(sum.minCoeff() >= 0.98);
  CHECK(sum.maxCoeff() <= 1.02);

  auto fit_error = [&](int M) {
    return (vf::cheb_fit(bank, M, lmax).evaluate(grid) - bank.sample(grid)).cwiseAbs().maxCoeff();
  };
  CHECK(fit_error(40) < fit_error(20));
}

TEST_CASE("power iteration on known spectra") {
  const vf::Graph g = vf::gen::path(20);
  const double exact = 2.0 - 2.0 * std::cos(std::numbers::pi * 19 / 20);
  CHECK(vf::power_iteration_lambda_max(vf::sparse_laplacian(g), 2000) ==
        doctest::Approx(exact).epsilon(1e-6));
  const Eigen::SparseMatrix<double> zero(4, 4);
  CHECK(vf::power_iteration_lambda_max(zero) == 0.0);
}
