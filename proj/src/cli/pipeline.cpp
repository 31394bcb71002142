// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/pipeline.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "vf/energy.hpp"
#include "vf/error.hpp"
#include "vf/inversion.hpp"
#include "vf/io.hpp"
#include "vf/wavelet.hpp"

namespace vf::cli {

using nlohmann::json;

fs::path resolve(const fs::path& base, const fs::path& p) {
  return p.is_absolute() ? p : base / p;
}

Graph make_graph(const GraphSpec& spec, const fs::path& base, int* kappa_used) {
  if (kappa_used) *kappa_used = spec.kappa;
  if (spec.kind == "swiss-roll") {
    gen::SwissRollParams p;
    p.n = spec.n;
    p.alpha = spec.alpha;
    p.kappa = spec.kappa;
    p.seed = spec.seed;
    return gen::swiss_roll(p, kappa_used);
  }
  if (spec.kind == "path") return gen::path(spec.n);
  if (spec.kind == "cycle") return gen::cycle(spec.n);
  if (spec.kind == "directed-cycle") return gen::directed_cycle(spec.n);
  if (spec.kind == "file") return io::read_graph(resolve(base, spec.file));
  throw Error(Errc::unsupported_kind, "unknown graph kind '" + spec.kind + "'");
}

Eigen::VectorXd make_signal(const SignalSpec& spec, const SpectralBasis& basis,
                            const fs::path& base) {
  if (!spec.file.empty()) {
    Eigen::VectorXd x = io::read_vector_csv(resolve(base, spec.file));
    if (x.size() != basis.size())
      throw Error(Errc::dimension_mismatch, "signal has " + std::to_string(x.size()) +
                                                " samples, graph has " +
                                                std::to_string(basis.size()) + " vertices");
    return x;
  }
  return piecewise_signal(basis, spec.segments);
}

Eigen::VectorXd add_noise(const Eigen::VectorXd& x, double snr_db, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd noise(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) noise(i) = gauss(rng);
  noise *= x.norm() / noise.norm() * std::pow(10.0, -snr_db / 20.0);
  return x + noise;
}

TransferBank make_bank(const std::string& kind, int K, double lambda_max, bool squared,
                       double scale_factor, const std::vector<double>& focus,
                       double focus_width) {
  switch (parse_bank_kind(kind)) {
    case BankKind::binomial: return binomial_bank(K, lambda_max);
    case BankKind::raised_cosine: return raised_cosine_bank(K, lambda_max, squared);
    case BankKind::meyer: return meyer_bank(K, lambda_max);
    case BankKind::wavelet: return meyer_wavelet_bank(scale_factor, K, lambda_max);
    case BankKind::adaptive:
      return adaptive_bank(adaptive_centers(K, lambda_max, focus, focus_width), lambda_max);
    case BankKind::custom: break;
  }
  throw Error(Errc::unsupported_kind, "bank '" + kind + "' cannot be built from parameters");
}

TransferBank make_bank(const TransformSpec& t, double lambda_max) {
  return make_bank(t.bank, t.K, lambda_max, t.squared, t.scale_factor, t.focus, t.focus_width);
}

VertexWindowSet make_windows(const TransformSpec& t, const Graph& g, const SpectralBasis& basis) {
  if (t.window == "heat") return spectral_window_shift(heat_window(t.tau, 1.0, basis), basis);
  const VertexShape shape = t.window == "hann" ? VertexShape::hann : VertexShape::rectangular;
  return vertex_window(distance_matrices(g, t.D), shape);
}

namespace {

VertexFrequencyMap as_map(const Eigen::MatrixXcd& E) {
  VertexFrequencyMap m;
  m.S = E;
  return m;
}

double weighted_energy(const Eigen::VectorXd& spectrum, const Eigen::MatrixXd& responses) {
  double total = 0.0;
  for (Eigen::Index p = 0; p < spectrum.size(); ++p)
    total += spectrum(p) * spectrum(p) * responses.col(p).squaredNorm();
  return total;
}

}  // namespace

Representation compute_representation(const TransformSpec& t, const Graph& g,
                                       const SpectralBasis& basis, const Eigen::VectorXd& x) {
  Representation rep;
  const double energy = x.squaredNorm();
  if (t.form == "rihaczek" || t.form == "rid") {
    rep.is_energy = true;
    const EnergyDistribution E =
        t.form == "rihaczek"
            ? energy_distribution(x, basis)
            : rid(x, basis, parse_kernel_kind(t.kernel) == KernelKind::sinc ? sinc_kernel()
                                                                              : delta_kernel());
    rep.map = as_map(E.E);
    rep.expected_energy = energy;
    return rep;
  }
  if (t.form == "lgft-window") {
    rep.windows = make_windows(t, g, basis);
    rep.map = lgft_window(x, *rep.windows, basis);
    const Eigen::VectorXd per_vertex = rep.windows->h.rowwise().squaredNorm();
    rep.expected_energy = (x.array().square() * per_vertex.array()).sum();
  } else if (t.form == "lgft-bank" || t.form == "wavelet") {
    const double lmax = basis.lambda_max();
    const bool wavelet = t.form == "wavelet";
    rep.bank = wavelet ? meyer_wavelet_bank(t.scale_factor, t.K, lmax) : make_bank(t, lmax);
    const Eigen::VectorXd X = gft(x, basis);
    if (t.order > 0) {
      rep.approx = cheb_fit(*rep.bank, t.order, lmax);
      ApplyOptions opts;
      opts.spectral_radius = lmax;
      rep.map = lgft_bank_polynomial(x, *rep.bank, g, t.order, opts);
      rep.expected_energy = weighted_energy(X, rep.approx->evaluate(basis.eigenvalues));
    } else {
      rep.map = lgft_bank(x, *rep.bank, basis);
      rep.expected_energy = weighted_energy(X, rep.bank->sample(basis.eigenvalues));
    }
  } else {
    throw Error(Errc::unsupported_kind, "unknown transform form '" + t.form + "'");
  }
  if (t.reassign) {
    rep.map = reassign(rep.map);
    rep.expected_energy.reset();
  }
  return rep;
}

Eigen::MatrixXd energy_matrix(const VertexFrequencyMap& map, bool is_energy) {
  if (is_energy) return map.S.real();
  return map.S.cwiseAbs2();
}

std::optional<Eigen::VectorXd> invert(const Representation& rep, const SpectralBasis& basis) {
  if (rep.is_energy || rep.approx || !rep.expected_energy) return std::nullopt;
  if (rep.windows) return invert_summation(rep.map, *rep.windows, basis).real();
  if (!rep.bank) return std::nullopt;
  if (rep.bank->kind == BankKind::wavelet) {
    WaveletCoefficients c{rep.map.real(), *rep.bank};
    return wavelet_inverse(c, basis);
  }
  if (rep.bank->condition == BankCondition::sum)
    return invert_band_sum(rep.map, *rep.bank, basis);
  if (rep.bank->condition == BankCondition::sum_of_squares)
    return invert_kernel(rep.map, *rep.bank, basis);
  return std::nullopt;
}

void write_marginals(const fs::path& path, const Marginals& m) {
  std::ostringstream out;
  out << "axis,index,value\n";
  for (Eigen::Index i = 0; i < m.vertex.size(); ++i)
    out << "vertex," << i + 1 << ',' << io::format_double(m.vertex(i)) << '\n';
  for (Eigen::Index i = 0; i < m.frequency.size(); ++i)
    out << "frequency," << i + 1 << ',' << io::format_double(m.frequency(i)) << '\n';
  io::write_file_atomic(path, out.str());
}

Marginals read_marginals(const fs::path& path) {
  std::istringstream in(io::read_file(path));
  std::string line;
  std::vector<double> vertex, frequency;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    std::istringstream row(line);
    std::string axis, index, value;
    if (!std::getline(row, axis, ',') || !std::getline(row, index, ',') ||
        !std::getline(row, value))
      throw Error(Errc::parse, path.string() + ":" + std::to_string(line_no) + ": expected axis,index,value");
    double v = 0.0;
    try {
      v = std::stod(value);
    } catch (const std::exception&) {
      throw Error(Errc::parse, path.string() + ":" + std::to_string(line_no) + ": bad value");
    }
    (axis == "vertex" ? vertex : frequency).push_back(v);
  }
  Marginals m;
  m.vertex = Eigen::Map<Eigen::VectorXd>(vertex.data(), static_cast<Eigen::Index>(vertex.size()));
  m.frequency = Eigen::Map<Eigen::VectorXd>(frequency.data(),
                                            static_cast<Eigen::Index>(frequency.size()));
  return m;
}

json to_json(const TransformSpec& t) {
  json j = {{"form", t.form},       {"basis", t.basis},   {"window", t.window},
            {"tau", t.tau},         {"D", t.D},           {"bank", t.bank},
            {"K", t.K},             {"squared", t.squared}, {"scale_factor", t.scale_factor},
            {"order", t.order},     {"kernel", t.kernel}, {"reassign", t.reassign},
            {"focus", t.focus},     {"focus_width", t.focus_width}};
  j["threshold"] = t.threshold ? json(*t.threshold) : json(nullptr);
  return j;
}

TransformSpec transform_from_json(const json& j) {
  TransformSpec t;
  t.form = j.at("form").get<std::string>();
  t.basis = j.at("basis").get<std::string>();
  t.window = j.at("window").get<std::string>();
  t.tau = j.at("tau").get<double>();
  t.D = j.at("D").get<int>();
  t.bank = j.at("bank").get<std::string>();
  t.K = j.at("K").get<int>();
  t.squared = j.at("squared").get<bool>();
  t.scale_factor = j.at("scale_factor").get<double>();
  t.order = j.at("order").get<int>();
  t.kernel = j.at("kernel").get<std::string>();
  t.reassign = j.at("reassign").get<bool>();
  t.focus = j.at("focus").get<std::vector<double>>();
  t.focus_width = j.at("focus_width").get<double>();
  if (!j.at("threshold").is_null()) t.threshold = j.at("threshold").get<double>();
  return t;
}

}  // namespace vf::cli
