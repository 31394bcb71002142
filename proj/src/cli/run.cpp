// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cli/pipeline.hpp"
#include "vf/error.hpp"
#include "vf/inversion.hpp"
#include "vf/io.hpp"
#include "vf/wavelet.hpp"

namespace vf::cli {

using nlohmann::json;

namespace {

Eigen::VectorXd spectrum_power(const Eigen::VectorXd& x, const SpectralBasis& basis) {
  const Eigen::VectorXcd xc = x.cast<std::complex<double>>();
  return gft(xc, basis).cwiseAbs2();
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double vec_rel_error(const Eigen::VectorXd& got, const Eigen::VectorXd& want) {
  if (got.size() != want.size()) return INFINITY;
  return max_abs(got - want) / std::max(1.0, max_abs(want));
}

bool filterable(const Representation& rep) {
  return rep.bank && !rep.approx && rep.expected_energy &&
         (rep.bank->kind == BankKind::wavelet || rep.bank->condition != BankCondition::none);
}

Inverter inverter_for(const Representation& rep, const SpectralBasis& basis) {
  return [&rep, &basis](const VertexFrequencyMap& m) {
    Representation r = rep;
    r.map = m;
    return *invert(r, basis);
  };
}

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

VertexFrequencyMap read_map(const fs::path& csv) {
  VertexFrequencyMap m;
  const Eigen::MatrixXd re = io::read_matrix_csv(csv);
  fs::path imag = csv;
  imag.replace_filename(csv.stem().string() + "_imag" + csv.extension().string());
  m.S = re.cast<std::complex<double>>();
  if (fs::exists(imag)) {
    const Eigen::MatrixXd im = io::read_matrix_csv(imag);
    if (im.rows() != re.rows() || im.cols() != re.cols())
      throw Error(Errc::dimension_mismatch, "imaginary part shape differs from " + csv.string());
    m.S.imag() = im;
  }
  return m;
}

}  // namespace

json run_experiment(const ExperimentConfig& cfg, const fs::path& out_root) {
  const fs::path dir = cfg.output_dir.empty() ? out_root : resolve(out_root, cfg.output_dir);
  fs::create_directories(dir);
  const fs::path inputs = cfg.source.empty() ? out_root : cfg.source;

  int kappa_used = cfg.graph.kappa;
  const Graph g = make_graph(cfg.graph, inputs, &kappa_used);
  if (!cfg.signal.segments.empty()) validate_segments(cfg.signal.segments, g.size());
  const SpectralBasis basis = decompose(g, parse_basis_kind(cfg.transform.basis));
  const Eigen::VectorXd clean = make_signal(cfg.signal, basis, inputs);
  const bool noisy = cfg.signal.noise_snr_db.has_value();
  const Eigen::VectorXd x =
      noisy ? add_noise(clean, *cfg.signal.noise_snr_db, cfg.signal.noise_seed) : clean;

  json artifacts = {{"graph", "graph.csv"},
                    {"eigenvalues", "eigenvalues.csv"},
                    {"signal", "signal.csv"},
                    {"representation", "representation.csv"},
                    {"marginals", "marginals.csv"}};
  io::write_graph(dir / "graph.csv", g,
                  cfg.graph.kind == "swiss-roll" ? std::optional(cfg.graph.seed) : std::nullopt);
  io::write_vector_csv(dir / "eigenvalues.csv", basis.eigenvalues, "lambda");
  io::write_vector_csv(dir / "signal.csv", clean, "x");
  if (noisy) {
    io::write_vector_csv(dir / "noisy_signal.csv", x, "x");
    artifacts["noisy_signal"] = "noisy_signal.csv";
  }

  const Representation rep = compute_representation(cfg.transform, g, basis, x);
  io::write_map(dir / "representation.csv", rep.map,
                {{"form", cfg.transform.form}, {"kind", rep.is_energy ? "energy" : "coefficients"}});
  const Eigen::MatrixXd P = energy_matrix(rep.map, rep.is_energy);
  const Marginals marg = marginals(P);
  write_marginals(dir / "marginals.csv", marg);

  json report;
  report["graph"] = {{"kind", cfg.graph.kind}, {"n", g.size()}, {"seed", cfg.graph.seed},
                     {"alpha", cfg.graph.alpha}, {"kappa", cfg.graph.kappa},
                     {"kappa_used", kappa_used}};
  report["transform"] = to_json(cfg.transform);
  report["artifacts"] = artifacts;
  report["signal_energy"] = x.squaredNorm();
  report["representation_energy"] = P.sum();
  report["expected_energy"] = nullable(rep.expected_energy);
  report["energy_preserving"] =
      rep.expected_energy.has_value() && rel_diff(*rep.expected_energy, x.squaredNorm()) <= kReportTol;

  if (rep.is_energy) {
    report["marginal_errors"] = {
        {"vertex", vec_rel_error(marg.vertex, x.cwiseAbs2())},
        {"frequency", vec_rel_error(marg.frequency, spectrum_power(x, basis))}};
  } else {
    report["marginal_errors"] = nullptr;
  }

  if (rep.bank) {
    const FrameBounds fb = frame_bounds(*rep.bank, basis);
    report["bank"] = io::bank_to_json(*rep.bank);
    report["frame_bounds"] = {{"A", fb.A}, {"B", fb.B},
                              {"parseval", std::abs(fb.A - 1.0) <= kReportTol &&
                                               std::abs(fb.B - 1.0) <= kReportTol}};
  } else {
    report["frame_bounds"] = nullptr;
  }

  std::optional<double> round_trip;
  if (rep.is_energy) {
    round_trip = vec_rel_error(igft(gft(x, basis), basis), x);
  } else if (const auto back = invert(rep, basis)) {
    round_trip = vec_rel_error(*back, x);
  }
  report["round_trip_error"] = nullable(round_trip);
  report["concentration"] = concentration(rep.map);

  if (noisy) {
    json snr = {{"snr_in", snr_db(clean, x)}};
    if (filterable(rep)) {
      const Inverter inv = inverter_for(rep, basis);
      Eigen::VectorXd filtered;
      double T = 0.0;
      if (cfg.transform.threshold) {
        T = *cfg.transform.threshold;
        filtered = vertex_varying_filter(rep.map, threshold_mask(rep.map, T), inv);
      } else {
        const ThresholdChoice c = tune_threshold(rep.map, inv, clean);
        T = c.T;
        filtered = c.filtered;
      }
      io::write_vector_csv(dir / "filtered_signal.csv", filtered, "x");
      report["artifacts"]["filtered_signal"] = "filtered_signal.csv";
      snr["snr_out"] = snr_db(clean, filtered);
      snr["threshold"] = T;
    }
    report["snr"] = snr;
  } else {
    report["snr"] = nullptr;
  }

  io::write_json(dir / "report.json", report);
  return report;
}

namespace {

class Table {
 public:
  explicit Table(std::ostream& out) : out_(out) { out_ << "invariant,status,value,tolerance,note\n"; }

  void row(const std::string& name, bool ok, double value, double tol, const std::string& note = "") {
    failed_ |= !ok;
    out_ << name << ',' << (ok ? "pass" : "fail") << ',' << io::format_double(value) << ','
         << io::format_double(tol) << ',' << note << '\n';
  }
  void check(const std::string& name, double value, double tol, const std::string& note = "") {
    row(name, std::isfinite(value) && value <= tol, value, tol, note);
  }
  void error(const std::string& name, const std::string& what) {
    failed_ = true;
    std::string clean = what;
    std::replace(clean.begin(), clean.end(), ',', ';');
    std::replace(clean.begin(), clean.end(), '\n', ' ');
    out_ << name << ",fail,nan,nan," << clean << '\n';
  }
  bool ok() const { return !failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

}  // namespace

bool verify_run(const fs::path& report_path, std::ostream& out) {
  Table t(out);
  json report;
  try {
    report = io::read_json(report_path);
  } catch (const std::exception& e) {
    t.error("report", e.what());
    return false;
  }
  const fs::path dir = report_path.parent_path().empty() ? fs::path(".") : report_path.parent_path();
  try {
    const json& art = report.at("artifacts");
    const Graph g = io::read_graph(dir / art.at("graph").get<std::string>());
    const TransformSpec spec = transform_from_json(report.at("transform"));
    const SpectralBasis basis = decompose(g, parse_basis_kind(spec.basis));
    const Eigen::VectorXd clean = io::read_vector_csv(dir / art.at("signal").get<std::string>());
    const bool noisy = art.contains("noisy_signal");
    const Eigen::VectorXd x =
        noisy ? io::read_vector_csv(dir / art.at("noisy_signal").get<std::string>()) : clean;

    const Eigen::VectorXd lambdas =
        io::read_vector_csv(dir / art.at("eigenvalues").get<std::string>());
    t.check("eigenvalues", vec_rel_error(lambdas, basis.eigenvalues), kReportTol);

    const double energy = x.squaredNorm();
    t.check("signal_energy", rel_diff(report.at("signal_energy").get<double>(), energy), kReportTol);

    const VertexFrequencyMap stored = read_map(dir / art.at("representation").get<std::string>());
    const Representation rep = compute_representation(spec, g, basis, x);
    const double scale = std::max(1.0, rep.map.S.cwiseAbs().maxCoeff());
    const bool same_shape = stored.S.rows() == rep.map.S.rows() && stored.S.cols() == rep.map.S.cols();
    t.check("representation_reproduces",
            same_shape ? (stored.S - rep.map.S).cwiseAbs().maxCoeff() / scale : INFINITY, kReportTol);

    const Eigen::MatrixXd P = energy_matrix(stored, rep.is_energy);
    const double total = P.sum();
    t.check("representation_energy",
            rel_diff(report.at("representation_energy").get<double>(), total), kReportTol);
    if (rep.expected_energy) {
      t.check("energy_total", rel_diff(total, *rep.expected_energy), kReportTol,
              rel_diff(*rep.expected_energy, energy) <= kReportTol ? "energy preserving" : "");
    }

    const Marginals m = marginals(P);
    const Marginals file = read_marginals(dir / art.at("marginals").get<std::string>());
    t.check("marginals_file",
            std::max(vec_rel_error(file.vertex, m.vertex), vec_rel_error(file.frequency, m.frequency)),
            kReportTol);
    if (rep.is_energy) {
      t.check("vertex_marginal", vec_rel_error(m.vertex, x.cwiseAbs2()), kReportTol);
      t.check("frequency_marginal", vec_rel_error(m.frequency, spectrum_power(x, basis)), kReportTol);
    }

    if (rep.bank) {
      const FrameBounds fb = frame_bounds(*rep.bank, basis);
      const json& rb = report.at("frame_bounds");
      t.check("frame_bound_A", rel_diff(rb.at("A").get<double>(), fb.A), kReportTol);
      t.check("frame_bound_B", rel_diff(rb.at("B").get<double>(), fb.B), kReportTol);
      const bool parseval = std::abs(fb.A - 1.0) <= kReportTol && std::abs(fb.B - 1.0) <= kReportTol;
      t.row("parseval_frame", parseval == rb.at("parseval").get<bool>(), fb.B - fb.A, kReportTol,
            parseval ? "Parseval frame" : "not tight");
    }

    Representation from_file = rep;
    from_file.map.S = stored.S;
    if (rep.is_energy) {
      t.check("round_trip", vec_rel_error(igft(gft(x, basis), basis), x), kReportTol);
    } else if (const auto back = invert(from_file, basis)) {
      t.check("round_trip", vec_rel_error(*back, x), kReportTol);
    }

    t.check("concentration", rel_diff(report.at("concentration").get<double>(), concentration(stored)),
            kReportTol);

    if (noisy) {
      const json& snr = report.at("snr");
      t.check("snr_in", std::abs(snr.at("snr_in").get<double>() - snr_db(clean, x)), kReportTol);
      if (art.contains("filtered_signal")) {
        const Eigen::VectorXd filtered =
            io::read_vector_csv(dir / art.at("filtered_signal").get<std::string>());
        t.check("snr_out", std::abs(snr.at("snr_out").get<double>() - snr_db(clean, filtered)),
                kReportTol);
        const Eigen::VectorXd again = vertex_varying_filter(
            from_file.map, threshold_mask(from_file.map, snr.at("threshold").get<double>()),
            inverter_for(from_file, basis));
        t.check("filter_reproduces", vec_rel_error(again, filtered), kReportTol);
      }
    }
  } catch (const std::exception& e) {
    t.error("artifacts", e.what());
  }
  return t.ok();
}

}  // namespace vf::cli
