// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "cli/pipeline.hpp"
#include "cli/run.hpp"
#include "vf/energy.hpp"
#include "vf/error.hpp"
#include "vf/inversion.hpp"
#include "vf/io.hpp"
#include "vf/lgft.hpp"
#include "vf/wavelet.hpp"

namespace vf::cli {

using nlohmann::json;

std::vector<SignalSegment> parse_segments(const std::string& text) {
  std::vector<SignalSegment> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    SignalSegment s;
    char dash = 0, colon = 0;
    std::istringstream is(item);
    if (!(is >> s.first >> dash >> s.last >> colon >> s.eigen_index) || dash != '-' || colon != ':')
      throw Error(Errc::parse, "segment '" + item + "' is not first-last:index[:amplitude]");
    if (is >> colon) {
      if (colon != ':' || !(is >> s.amplitude))
        throw Error(Errc::parse, "segment '" + item + "' has a bad amplitude");
    }
    out.push_back(s);
  }
  if (out.empty()) throw Error(Errc::parse, "no segments given");
  return out;
}

namespace {

struct Common {
  std::string out = ".";
  std::string graph = "graph.csv";
  std::string signal = "signal.csv";
  std::string basis = "laplacian";

  fs::path path(const std::string& p) const { return resolve(out, p); }
  void prepare() const { fs::create_directories(out); }
  Graph load_graph() const { return io::read_graph(path(graph)); }
  SpectralBasis load_basis(const Graph& g) const { return decompose(g, parse_basis_kind(basis)); }
  Eigen::VectorXd load_signal(const SpectralBasis& b) const {
    SignalSpec s;
    s.file = signal;
    return make_signal(s, b, out);
  }
};

void add_inputs(CLI::App* sub, Common& c, bool signal = true) {
  sub->add_option("--graph", c.graph, "graph edge-list CSV")->capture_default_str();
  if (signal) sub->add_option("--signal", c.signal, "signal CSV")->capture_default_str();
  sub->add_option("--basis", c.basis, "laplacian|normalized-laplacian|generalized-laplacian|"
                                      "adjacency|normalized-adjacency|analytic-dft")
      ->capture_default_str();
}

struct BankArgs {
  std::string kind = "raised-cosine";
  int K = 15;
  bool squared = false;
  double M = 2.0;
  int order = 0;
  std::vector<double> focus;
  double focus_width = 0.1;

  TransferBank build(double lambda_max) const {
    return make_bank(kind, K, lambda_max, squared, M, focus, focus_width);
  }
};

void add_bank(CLI::App* sub, BankArgs& b, bool with_kind = true) {
  if (with_kind)
    sub->add_option("--bank", b.kind, "binomial|raised-cosine|meyer|adaptive|wavelet")
        ->capture_default_str();
  sub->add_option("--K", b.K, "number of bands")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_flag("--squared", b.squared, "raised cosine with sum H = 1 instead of sum H^2 = 1");
  sub->add_option("--M", b.M, "wavelet scale factor")->capture_default_str();
  sub->add_option("--order", b.order, "Chebyshev terms; 0 uses the eigendecomposition")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--focus", b.focus, "adaptive bank focus eigenvalues");
  sub->add_option("--focus-width", b.focus_width, "adaptive bank focus width")->capture_default_str();
}

Eigen::VectorXd plot_grid(const SpectralBasis& basis) {
  return validation_grid(basis.lambda_max(), 501, basis.eigenvalues);
}

void write_energy(const fs::path& path, const EnergyDistribution& E, const json& extra) {
  VertexFrequencyMap m;
  m.S = E.E;
  io::write_map(path, m, extra);
  fs::path mp = path;
  mp.replace_filename(path.stem().string() + "_marginals.csv");
  write_marginals(mp, E.marginals());
}

void say(const fs::path& p) { std::cout << "wrote " << p.string() << '\n'; }

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"vertex-frequency analysis of graph signals"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--out", c.out, "directory that every relative path resolves against")
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph and optionally a signal");
  GraphSpec gspec;
  std::string preset, segments;
  std::optional<double> noise_snr;
  std::uint64_t noise_seed = 1;
  gen->add_option("--kind", gspec.kind, "swiss-roll|path|cycle|directed-cycle")
      ->capture_default_str()
      ->check(CLI::IsMember({"swiss-roll", "path", "cycle", "directed-cycle"}));
  gen->add_option("--n", gspec.n, "vertices")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  gen->add_option("--seed", gspec.seed, "graph seed")->capture_default_str();
  gen->add_option("--alpha", gspec.alpha, "swiss-roll weight scale")->capture_default_str();
  gen->add_option("--kappa", gspec.kappa, "swiss-roll edges kept per vertex")->capture_default_str();
  auto* preset_opt = gen->add_option("--preset", preset, "signal preset")
                         ->check(CLI::IsMember({"three-component"}));
  gen->add_option("--segments", segments, "signal segments first-last:index[:amplitude],...")
      ->excludes(preset_opt);
  gen->add_option("--noise-snr", noise_snr, "also write a noisy copy at this SNR (dB)");
  gen->add_option("--noise-seed", noise_seed, "noise seed")->capture_default_str();
  gen->add_option("--graph-out", c.graph, "graph CSV to write")->capture_default_str();
  gen->add_option("--signal-out", c.signal, "signal CSV to write")->capture_default_str();
  gen->add_option("--basis", c.basis, "basis for the signal eigenvectors")->capture_default_str();
  gen->callback([&] {
    c.prepare();
    int kappa_used = gspec.kappa;
    const Graph g = make_graph(gspec, c.out, &kappa_used);
    io::write_graph(c.path(c.graph), g,
                    gspec.kind == "swiss-roll" ? std::optional(gspec.seed) : std::nullopt);
    say(c.path(c.graph));
    if (kappa_used != gspec.kappa)
      std::cout << "kappa raised to " << kappa_used << " for connectivity\n";
    if (preset.empty() && segments.empty()) return;
    const std::vector<SignalSegment> segs =
        preset.empty() ? parse_segments(segments) : three_component_segments();
    validate_segments(segs, g.size());
    const Eigen::VectorXd x = piecewise_signal(c.load_basis(g), segs);
    io::write_vector_csv(c.path(c.signal), x, "x");
    say(c.path(c.signal));
    if (noise_snr) {
      fs::path noisy = c.path(c.signal);
      noisy.replace_filename("noisy_" + noisy.filename().string());
      io::write_vector_csv(noisy, add_noise(x, *noise_snr, noise_seed), "x");
      say(noisy);
    }
  });

  // eig
  auto* eig = app.add_subcommand("eig", "eigendecomposition of the chosen basis");
  add_inputs(eig, c, false);
  eig->callback([&] {
    c.prepare();
    const SpectralBasis b = c.load_basis(c.load_graph());
    io::write_basis(c.path("eigenvalues.csv"), c.path("eigenvectors.csv"), b);
    say(c.path("eigenvalues.csv"));
    say(c.path("eigenvectors.csv"));
  });

  // gft
  auto* gftc = app.add_subcommand("gft", "graph Fourier transform of a signal");
  add_inputs(gftc, c);
  gftc->callback([&] {
    c.prepare();
    const SpectralBasis b = c.load_basis(c.load_graph());
    const Eigen::VectorXcd X = gft(Eigen::VectorXcd(c.load_signal(b).cast<std::complex<double>>()), b);
    Eigen::MatrixXd m(b.size(), 4);
    for (int k = 0; k < b.size(); ++k) m.row(k) << k + 1, b.eigenvalues(k), X(k).real(), X(k).imag();
    io::write_matrix_csv(c.path("spectrum.csv"), m, {"k", "lambda", "re", "im"});
    say(c.path("spectrum.csv"));
  });

  // lgft
  auto* lg = app.add_subcommand("lgft", "localized graph Fourier transform");
  add_inputs(lg, c);
  BankArgs lbank;
  lbank.kind.clear();
  TransformSpec lspec;
  std::string norm = "none";
  bool shift = false, reassign_flag = false;
  int half_width = 3;
  double sigma = 1.5;
  std::vector<int> vertices;
  add_bank(lg, lbank);
  lg->add_option("--window", lspec.window, "heat|hann|rectangular")
      ->capture_default_str()
      ->check(CLI::IsMember({"heat", "hann", "rectangular"}));
  lg->add_option("--tau", lspec.tau, "heat window tau")->capture_default_str();
  lg->add_option("--D", lspec.D, "vertex window width")->capture_default_str();
  lg->add_option("--norm", norm, "none|sum-one|sum-squares-one")
      ->capture_default_str()
      ->check(CLI::IsMember({"none", "sum-one", "sum-squares-one"}));
  lg->add_flag("--spectral-shift", shift, "Gaussian window over spectral index offsets");
  lg->add_option("--half-width", half_width, "spectral-shift window half width")->capture_default_str();
  lg->add_option("--sigma", sigma, "spectral-shift window sigma")->capture_default_str();
  lg->add_flag("--reassign", reassign_flag, "keep only the strongest coefficient per vertex");
  lg->add_option("--vertices", vertices, "1-based vertex subset (window form)");
  lg->callback([&] {
    c.prepare();
    const Graph g = c.load_graph();
    const SpectralBasis b = c.load_basis(g);
    const Eigen::VectorXd x = c.load_signal(b);
    VertexFrequencyMap map;
    json meta;
    if (!lbank.kind.empty()) {
      const TransferBank bank = lbank.build(b.lambda_max());
      meta["bank"] = io::bank_to_json(bank);
      if (lbank.order > 0) {
        ApplyOptions opts;
        opts.spectral_radius = b.lambda_max();
        map = lgft_bank_polynomial(x, bank, g, lbank.order, opts);
        const ChebyshevApprox approx = cheb_fit(bank, lbank.order, b.lambda_max());
        io::write_chebyshev(c.path("chebyshev.csv"), approx);
        meta["order"] = lbank.order;
      } else {
        map = lgft_bank(x, bank, b);
      }
      io::write_bank_samples(c.path("bank.csv"), bank, plot_grid(b));
      say(c.path("bank.csv"));
    } else if (shift) {
      const Eigen::VectorXcd xc = x.cast<std::complex<double>>();
      map = lgft_spectral_shift(gft(xc, b), gaussian_index_window(half_width, sigma), b);
      meta["half_width"] = half_width;
      meta["sigma"] = sigma;
    } else {
      VertexWindowSet w = make_windows(lspec, g, b);
      w = normalize_windows(std::move(w), norm == "sum-one"           ? WindowNorm::sum_one
                                          : norm == "sum-squares-one" ? WindowNorm::sum_squares_one
                                                                      : WindowNorm::none);
      std::vector<int> subset;
      for (int v : vertices) subset.push_back(v - 1);
      map = lgft_window(x, w, b, subset);
      io::write_matrix_csv(c.path("windows.csv"), w.h);
      say(c.path("windows.csv"));
      meta["window"] = lspec.window;
      meta["tau"] = lspec.tau;
      meta["D"] = lspec.D;
    }
    if (reassign_flag) map = reassign(map);
    meta["reassigned"] = reassign_flag;
    meta["concentration"] = concentration(map);
    io::write_map(c.path("lgft.csv"), map, meta);
    say(c.path("lgft.csv"));
  });

  // wavelet
  auto* wv = app.add_subcommand("wavelet", "spectral graph wavelet transform");
  add_inputs(wv, c);
  BankArgs wbank;
  wbank.K = 5;
  add_bank(wv, wbank, false);
  wv->callback([&] {
    c.prepare();
    const Graph g = c.load_graph();
    const SpectralBasis b = c.load_basis(g);
    const Eigen::VectorXd x = c.load_signal(b);
    ApplyOptions opts;
    opts.spectral_radius = b.lambda_max();
    const WaveletCoefficients w =
        wbank.order > 0
            ? wavelet_transform_polynomial(x, g, b.lambda_max(), wbank.M, wbank.K, wbank.order, opts)
            : wavelet_transform(x, b, wbank.M, wbank.K);
    VertexFrequencyMap map;
    map.S = w.W.cast<std::complex<double>>();
    map.axis = MapAxis::band_index;
    map.band_centers = w.bank.centers();
    const FrameBounds fb = frame_bounds(w.bank, b);
    io::write_map(c.path("wavelet.csv"), map,
                  {{"bank", io::bank_to_json(w.bank)}, {"A", fb.A}, {"B", fb.B}});
    io::write_bank_samples(c.path("bank.csv"), w.bank, plot_grid(b));
    say(c.path("wavelet.csv"));
    say(c.path("bank.csv"));
  });

  // energy, rid
  std::string ekernel = "delta", rkernel = "sinc";
  bool ideal = false;
  auto* en = app.add_subcommand("energy", "vertex-frequency energy distribution");
  add_inputs(en, c);
  en->add_option("--kernel", ekernel, "delta|sinc")
      ->capture_default_str()
      ->check(CLI::IsMember({"delta", "sinc"}));
  en->add_flag("--ideal", ideal, "also write the ideal distribution from local smoothness");
  en->callback([&] {
    c.prepare();
    const Graph g = c.load_graph();
    const SpectralBasis b = c.load_basis(g);
    const Eigen::VectorXd x = c.load_signal(b);
    const EnergyDistribution E = ekernel == "delta" ? energy_distribution(x, b) : rid(x, b, sinc_kernel());
    write_energy(c.path("energy.csv"), E, {{"kernel", ekernel}, {"signal_energy", x.squaredNorm()}});
    say(c.path("energy.csv"));
    if (ideal) {
      write_energy(c.path("ideal.csv"), ideal_distribution(x, g, b), {{"kind", "ideal"}});
      say(c.path("ideal.csv"));
    }
  });
  auto* rd = app.add_subcommand("rid", "reduced interference distribution");
  add_inputs(rd, c);
  rd->add_option("--kernel", rkernel, "delta|sinc")
      ->capture_default_str()
      ->check(CLI::IsMember({"delta", "sinc"}));
  rd->callback([&] {
    c.prepare();
    const SpectralBasis b = c.load_basis(c.load_graph());
    const Eigen::VectorXd x = c.load_signal(b);
    const EnergyDistribution E = rid(x, b, rkernel == "sinc" ? sinc_kernel() : delta_kernel());
    write_energy(c.path("rid.csv"), E, {{"kernel", rkernel}, {"signal_energy", x.squaredNorm()}});
    say(c.path("rid.csv"));
  });

  // smoothness
  auto* sm = app.add_subcommand("smoothness", "local smoothness and its estimates");
  add_inputs(sm, c);
  sm->callback([&] {
    c.prepare();
    const Graph g = c.load_graph();
    const SpectralBasis b = c.load_basis(g);
    const Eigen::VectorXd x = c.load_signal(b);
    const LocalSmoothness direct = local_smoothness(x, g);
    const EnergyDistribution E = energy_distribution(x, b);
    const LocalSmoothness com = estimate_local_smoothness(E, b, SmoothnessEstimator::center_of_mass);
    const LocalSmoothness arg = estimate_local_smoothness(E, b, SmoothnessEstimator::argmax);
    Eigen::MatrixXd m(g.size(), 4);
    for (int n = 0; n < g.size(); ++n)
      m.row(n) << n + 1, direct.values(n), com.values(n), arg.values(n);
    io::write_matrix_csv(c.path("smoothness.csv"), m, {"vertex", "lambda", "center_of_mass", "argmax"});
    json j = {{"global", smoothness(x, g)}};
    io::write_json(c.path("smoothness.json"), j);
    say(c.path("smoothness.csv"));
  });

  // filter
  auto* fl = app.add_subcommand("filter", "vertex-varying filtering by thresholding a bank LGFT");
  add_inputs(fl, c);
  BankArgs fbank;
  fbank.K = 25;
  std::optional<double> threshold;
  std::string snr_ref;
  add_bank(fl, fbank);
  fl->add_option("--threshold", threshold, "keep coefficients with |S| >= T");
  fl->add_option("--snr-ref", snr_ref, "clean reference signal CSV");
  fl->callback([&] {
    if (!threshold && snr_ref.empty())
      throw Error(Errc::invalid_argument, "filter needs --threshold or --snr-ref");
    c.prepare();
    const Graph g = c.load_graph();
    const SpectralBasis b = c.load_basis(g);
    const Eigen::VectorXd x = c.load_signal(b);
    Representation rep;
    rep.bank = fbank.build(b.lambda_max());
    rep.map = lgft_bank(x, *rep.bank, b);
    rep.expected_energy = 0.0;
    if (!invert(rep, b))
      throw Error(Errc::condition_violated, "bank '" + fbank.kind + "' has no exact inverse");
    const Inverter inv = [&](const VertexFrequencyMap& m) {
      Representation r = rep;
      r.map = m;
      return *invert(r, b);
    };
    json report = {{"K", fbank.K}, {"bank", fbank.kind}, {"snr_in", nullptr}, {"snr_out", nullptr}};
    Eigen::VectorXd filtered;
    std::optional<Eigen::VectorXd> clean;
    if (!snr_ref.empty()) {
      SignalSpec s;
      s.file = snr_ref;
      clean = make_signal(s, b, c.out);
    }
    if (threshold) {
      filtered = vertex_varying_filter(rep.map, threshold_mask(rep.map, *threshold), inv);
      report["T"] = *threshold;
    } else {
      const ThresholdChoice choice = tune_threshold(rep.map, inv, *clean);
      filtered = choice.filtered;
      report["T"] = choice.T;
    }
    if (clean) {
      report["snr_in"] = snr_db(*clean, x);
      report["snr_out"] = snr_db(*clean, filtered);
    }
    io::write_vector_csv(c.path("filtered.csv"), filtered, "x");
    io::write_json(c.path("filter.json"), report);
    say(c.path("filtered.csv"));
    say(c.path("filter.json"));
  });

  // optimize-tau
  auto* ot = app.add_subcommand("optimize-tau", "heat window tau minimizing the concentration measure");
  add_inputs(ot, c);
  TauOptions topt;
  ot->add_option("--tau0", topt.tau0, "initial tau")->capture_default_str();
  ot->add_option("--alpha", topt.alpha, "step size")->capture_default_str();
  ot->add_option("--tol", topt.tol, "stop when the tau update is below this")->capture_default_str();
  ot->add_option("--max-iter", topt.max_iter, "iteration cap")->capture_default_str();
  ot->callback([&] {
    c.prepare();
    const SpectralBasis b = c.load_basis(c.load_graph());
    const TauResult r = optimize_tau(c.load_signal(b), b, topt);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(r.trace.size()), 3);
    for (size_t i = 0; i < r.trace.size(); ++i)
      m.row(static_cast<Eigen::Index>(i)) << static_cast<double>(i), r.trace[i].first, r.trace[i].second;
    io::write_matrix_csv(c.path("tau_trace.csv"), m, {"iteration", "tau", "measure"});
    io::write_json(c.path("tau.json"),
                   {{"tau", r.tau}, {"measure", r.measure}, {"converged", r.converged}});
    say(c.path("tau_trace.csv"));
  });

  // frame-bounds
  auto* fb = app.add_subcommand("frame-bounds", "frame bounds of a filter bank");
  add_inputs(fb, c, false);
  BankArgs bbank;
  add_bank(fb, bbank);
  fb->callback([&] {
    c.prepare();
    const SpectralBasis b = c.load_basis(c.load_graph());
    const TransferBank bank = bbank.build(b.lambda_max());
    const FrameBounds exact = frame_bounds(bank, b);
    const FrameBounds grid = frame_bounds_grid(bank, b);
    json j = {{"A", exact.A}, {"B", exact.B}, {"A_grid", grid.A}, {"B_grid", grid.B},
              {"parseval", std::abs(exact.A - 1.0) <= kReportTol && std::abs(exact.B - 1.0) <= kReportTol},
              {"bank", io::bank_to_json(bank)}};
    const Eigen::VectorXd lambdas = plot_grid(b);
    Eigen::MatrixXd m(lambdas.size(), bbank.order > 0 ? 3 : 2);
    m.col(0) = lambdas;
    m.col(1) = frame_function(bank, lambdas);
    std::vector<std::string> header{"lambda", "g"};
    if (bbank.order > 0) {
      const ChebyshevApprox approx = cheb_fit(bank, bbank.order, b.lambda_max());
      const FrameBounds poly = frame_bounds_grid(approx, lambdas);
      j["A_polynomial"] = poly.A;
      j["B_polynomial"] = poly.B;
      m.col(2) = approx.evaluate(lambdas).colwise().squaredNorm().transpose();
      header.push_back("g_polynomial");
    }
    io::write_matrix_csv(c.path("frame.csv"), m, header);
    io::write_json(c.path("frame_bounds.json"), j);
    std::cout << "A = " << io::format_double(exact.A) << ", B = " << io::format_double(exact.B)
              << (j["parseval"].get<bool>() ? " (Parseval frame)" : "") << '\n';
  });

  // run, verify
  auto* rn = app.add_subcommand("run", "run an experiment config");
  std::string config_path;
  rn->add_option("config", config_path, "experiment config file")->required();
  rn->callback([&] {
    const ExperimentConfig cfg = load_config(config_path);
    run_experiment(cfg, c.out);
    const fs::path dir = cfg.output_dir.empty() ? fs::path(c.out) : resolve(c.out, cfg.output_dir);
    say(dir / "report.json");
  });
  auto* vr = app.add_subcommand("verify", "re-check the invariants of a run report");
  std::string report_path = "report.json";
  bool verified = true;
  vr->add_option("report", report_path, "report written by run")->capture_default_str();
  vr->callback([&] { verified = verify_run(c.path(report_path), std::cout); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "vf: " << e.what() << '\n';
    return e.code() == Errc::io ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "vf: " << e.what() << '\n';
    return 3;
  }
  return verified ? 0 : 1;
}

}  // namespace vf::cli
