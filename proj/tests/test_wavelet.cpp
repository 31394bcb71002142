// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "oracles.hpp"
#include "vf/lgft.hpp"
#include "vf/wavelet.hpp"

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

}  // namespace

TEST_CASE("single spectral line") {
  const Roll r = roll();
  const int p = 37;
  const Eigen::VectorXd u = r.b.vectors.col(p);
  const vf::WaveletCoefficients w = vf::wavelet_transform(u, r.b, 2.0, 8);
  REQUIRE(w.W.cols() == 8);
  REQUIRE(w.scales() == 8);
  for (int k = 0; k < 8; ++k)
    CHECK((w.W.col(k) - w.bank(k, r.b.eigenvalues(p)) * u).cwiseAbs().maxCoeff() < 1e-12);
  for (int k = 1; k < 8; ++k) {
    const double s = w.bank.scales[8 - k - 1];
    CHECK(w.bank(k, r.b.eigenvalues(p)) ==
          doctest::Approx(vf::meyer_wavelet_kernel(2.0, s * r.b.eigenvalues(p))));
  }
}

TEST_CASE("wavelet transform equals the bank LGFT") {
  const Roll r = roll(2);
  std::mt19937_64 rng(21);
  const Eigen::VectorXd x = oracle::random_signal(r.g.size(), rng);
  const vf::WaveletCoefficients w = vf::wavelet_transform(x, r.b, 2.0, 11);
  const Eigen::MatrixXd s = vf::lgft_bank(x, w.bank, r.b).real();
  CHECK((w.W - s).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(w.W.squaredNorm() == doctest::Approx(x.squaredNorm()).epsilon(1e-10));
}

TEST_CASE("polynomial mode tracks the fit error") {
  const Roll r = roll(3);
  std::mt19937_64 rng(22);
  const Eigen::VectorXd x = oracle::random_signal(r.g.size(), rng);
  const double lmax = r.b.lambda_max();
  vf::ApplyOptions o;
  o.spectral_radius = lmax;
  const vf::WaveletCoefficients exact = vf::wavelet_transform(x, r.b, 2.0, 6);
  const vf::WaveletCoefficients poly =
      vf::wavelet_transform_polynomial(x, r.g, lmax, 2.0, 6, 40, o);
  const vf::ChebyshevApprox a = vf::cheb_fit(exact.bank, 40, lmax);
  for (int k = 0; k < 6; ++k) {
    Eigen::VectorXd fit_err(r.b.size());
    for (int p = 0; p < r.b.size(); ++p)
      fit_err(p) = std::abs(a(k, r.b.eigenvalues(p)) - exact.bank(k, r.b.eigenvalues(p)));
    const double bound = fit_err.maxCoeff() * vf::gft(x, r.b).lpNorm<1>();
    CHECK((poly.W.col(k) - exact.W.col(k)).cwiseAbs().maxCoeff() <= 10 * bound + 1e-12);
  }
}

TEST_CASE("frame bounds") {
  const Roll r = roll(4);
  const double lmax = r.b.lambda_max();
  const vf::FrameBounds meyer = vf::frame_bounds_grid(vf::meyer_wavelet_bank(2.0, 9, lmax), r.b);
  CHECK(meyer.tight());
  CHECK(std::abs(meyer.A - 1.0) < 1e-8);
  CHECK(std::abs(meyer.B - 1.0) < 1e-8);

  const vf::FrameBounds sq = vf::frame_bounds_grid(vf::raised_cosine_bank(15, lmax, true), r.b);
  CHECK(sq.A >= 0.49);
  CHECK(sq.A <= 0.51);
  CHECK(sq.B >= 0.99);
  CHECK(sq.B <= 1.0 + 1e-12);
  CHECK_FALSE(sq.tight());

  const vf::TransferBank all_pass = vf::binomial_bank(1, lmax);
  const vf::FrameBounds one = vf::frame_bounds(all_pass, r.b);
  CHECK(one.A == doctest::Approx(1.0));
  CHECK(one.B == doctest::Approx(1.0));

  const vf::TransferBank sq15 = vf::raised_cosine_bank(15, lmax, true);
  const Eigen::VectorXd g = vf::frame_function(sq15, r.b.eigenvalues);
  const vf::FrameBounds fb = vf::frame_bounds(sq15, r.b);
  CHECK(fb.A == g.minCoeff());
  CHECK(fb.B == g.maxCoeff());

  const vf::TransferBank bank = vf::meyer_wavelet_bank(2.0, 5, lmax);
  auto spread = [&](int M) {
    const vf::FrameBounds fb = vf::frame_bounds_grid(vf::cheb_fit(bank, M, lmax),
                                                     vf::validation_grid(lmax, 1000));
    CHECK(fb.A <= 1.0);
    CHECK(fb.B >= 1.0);
    return fb.B - fb.A;
  };
  CHECK(spread(60) < spread(20));
}

TEST_CASE("frame inequality on random signals") {
  const Roll r = roll(5);
  const vf::TransferBank sq = vf::raised_cosine_bank(9, r.b.lambda_max(), true);
  const vf::FrameBounds fb = vf::frame_bounds(sq, r.b);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const Eigen::VectorXd x = oracle::random_signal(r.g.size(), rng);
    const double e = vf::lgft_bank(x, sq, r.b).S.squaredNorm();
    CHECK(e >= fb.A * x.squaredNorm() * (1 - 1e-12));
    CHECK(e <= fb.B * x.squaredNorm() * (1 + 1e-12));
  }
}

TEST_CASE("inverse") {
  const Roll r = roll(6);
  std::mt19937_64 rng(24);
  const Eigen::VectorXd x = oracle::random_signal(r.g.size(), rng);
  const vf::WaveletCoefficients w = vf::wavelet_transform(x, r.b, 2.0, 7);
  CHECK((vf::wavelet_inverse(w, r.b) - x).cwiseAbs().maxCoeff() < 1e-8);

  const Eigen::VectorXd dc = r.b.vectors.col(0);
  const vf::WaveletCoefficients wd = vf::wavelet_transform(dc, r.b, 2.0, 7);
  CHECK(wd.W.rightCols(6).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((vf::wavelet_inverse(wd, r.b) - dc).cwiseAbs().maxCoeff() < 1e-10);

  vf::WaveletCoefficients zero = w;
  zero.W.setZero();
  CHECK(vf::wavelet_inverse(zero, r.b).cwiseAbs().maxCoeff() == 0.0);

  vf::WaveletCoefficients loose = w;
  loose.bank = vf::raised_cosine_bank(7, r.b.lambda_max(), true);
  loose.W = vf::lgft_bank(x, loose.bank, r.b).real();
  try {
    vf::wavelet_inverse(loose, r.b);
    FAIL("expected condition_violated");
  } catch (const vf::Error& e) {
    CHECK(e.code() == vf::Errc::condition_violated);
  }
  CHECK((vf::wavelet_inverse(loose, r.b, true) - x).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("invalid scale grids") {
  const Roll r = roll();
  const Eigen::VectorXd x = Eigen::VectorXd::Ones(r.g.size());
  CHECK_THROWS_AS(vf::wavelet_transform(x, r.b, 1.0, 5), vf::Error);
  CHECK_THROWS_AS(vf::wavelet_transform(x, r.b, 2.0, 1), vf::Error);
}
