// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "vf/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "detail.hpp"

namespace vf::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    detail::require(static_cast<bool>(out), Errc::io, "cannot open " + tmp.string());
    out << content;
    out.flush();
    detail::require(static_cast<bool>(out), Errc::io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(Errc::io, "cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(static_cast<bool>(in), Errc::io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string matrix_csv(const Eigen::MatrixXd& m, const std::vector<std::string>& header) {
  std::string out;
  if (!header.empty()) {
    detail::require_size(static_cast<Eigen::Index>(header.size()), m.cols(), "CSV header");
    for (size_t j = 0; j < header.size(); ++j) {
      if (j) out += ',';
      out += header[j];
    }
    out += '\n';
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_matrix_csv(const fs::path& path, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header) {
  write_file_atomic(path, matrix_csv(m, header));
}

void write_vector_csv(const fs::path& path, const Eigen::VectorXd& v, const std::string& name) {
  write_matrix_csv(path, v, {name});
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_number(const std::string& s, double& v) {
  const char* begin = s.c_str();
  while (*begin == ' ' || *begin == '\t') ++begin;
  if (*begin == '\0') return false;
  char* end = nullptr;
  errno = 0;
  v = std::strtod(begin, &end);
  while (*end == ' ' || *end == '\t') ++end;
  return *end == '\0' && errno != ERANGE;
}

}  // namespace

Eigen::MatrixXd read_matrix_csv(const fs::path& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::vector<std::vector<double>> rows;
  int line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> cells = split(line, ',');
    std::vector<double> row(cells.size());
    bool ok = true;
    for (size_t j = 0; j < cells.size() && ok; ++j) ok = parse_number(cells[j], row[j]);
    if (!ok) {
      detail::require(first, Errc::parse,
                      path.string() + ":" + std::to_string(line_no) + ": non-numeric value");
      first = false;
      continue;
    }
    first = false;
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw Error(Errc::parse, path.string() + ":" + std::to_string(line_no) + ": expected " +
                                   std::to_string(rows.front().size()) + " columns, got " +
                                   std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Eigen::VectorXd read_vector_csv(const fs::path& path) {
  const Eigen::MatrixXd m = read_matrix_csv(path);
  if (m.cols() == 1) return m.col(0);
  if (m.rows() == 1) return m.row(0).transpose();
  throw Error(Errc::parse, path.string() + ": expected a single column of values");
}

void write_json(const fs::path& path, const json& j) { write_file_atomic(path, j.dump(2) + "\n"); }

json read_json(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse, path.string() + ": " + e.what());
  }
}

fs::path sidecar_path(const fs::path& csv_path) {
  fs::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

void write_graph(const fs::path& csv_path, const Graph& g, std::optional<std::uint64_t> seed) {
  std::string out = "src,dst,weight\n";
  const Eigen::MatrixXd& w = g.weights();
  for (int i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.size(); ++j) {
      if (w(i, j) == 0.0) continue;
      if (g.undirected()) {
        if (j <= i) continue;
        out += std::to_string(i + 1) + "," + std::to_string(j + 1) + ",";
      } else {
        // W(i, j) feeds x(j) into vertex i.
        out += std::to_string(j + 1) + "," + std::to_string(i + 1) + ",";
      }
      out += format_double(w(i, j)) + "\n";
    }
  }
  write_file_atomic(csv_path, out);
  json meta = {{"n", g.size()},
               {"kind", g.undirected() ? "undirected" : "directed-cycle"}};
  meta["seed"] = seed ? json(*seed) : json(nullptr);
  write_json(sidecar_path(csv_path), meta);
}

Graph read_graph(const fs::path& csv_path) {
  const json meta = read_json(sidecar_path(csv_path));
  detail::require(meta.contains("n") && meta["n"].is_number_integer(), Errc::parse,
                  sidecar_path(csv_path).string() + ": missing integer field 'n'");
  const int n = meta["n"].get<int>();
  detail::require(n >= 1, Errc::parse, "graph sidecar has n < 1");
  const std::string kind = meta.value("kind", "undirected");
  if (kind == "directed-cycle") return Graph::directed_cycle(n);
  detail::require(kind == "undirected", Errc::parse, "unknown graph kind '" + kind + "'");
  const Eigen::MatrixXd edges = read_matrix_csv(csv_path);
  detail::require(edges.rows() == 0 || edges.cols() == 3, Errc::parse,
                  csv_path.string() + ": expected columns src,dst,weight");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index e = 0; e < edges.rows(); ++e) {
    const int s = static_cast<int>(edges(e, 0));
    const int d = static_cast<int>(edges(e, 1));
    detail::require(s >= 1 && s <= n && d >= 1 && d <= n && s != d &&
                        edges(e, 0) == s && edges(e, 1) == d,
                    Errc::parse,
                    csv_path.string() + ": bad vertex pair on edge row " + std::to_string(e + 1));
    w(s - 1, d - 1) = w(d - 1, s - 1) = edges(e, 2);
  }
  return Graph(std::move(w));
}

void write_basis(const fs::path& eigenvalues_csv, const fs::path& vectors_csv,
                 const SpectralBasis& basis) {
  write_vector_csv(eigenvalues_csv, basis.eigenvalues, "lambda");
  std::vector<std::string> header;
  for (int k = 1; k <= basis.size(); ++k) header.push_back("u" + std::to_string(k));
  if (!basis.is_complex) {
    write_matrix_csv(vectors_csv, basis.vectors, header);
    return;
  }
  write_matrix_csv(vectors_csv, basis.cvectors.real(), header);
  fs::path imag = vectors_csv;
  imag.replace_filename(vectors_csv.stem().string() + "_imag" + vectors_csv.extension().string());
  write_matrix_csv(imag, basis.cvectors.imag(), header);
}

json bank_to_json(const TransferBank& bank) {
  json j = {{"kind", std::string(to_string(bank.kind))},
            {"K", bank.K},
            {"lambda_max", bank.lambda_max},
            {"condition", std::string(to_string(bank.condition))}};
  switch (bank.kind) {
    case BankKind::raised_cosine:
      j["squared"] = bank.squared;
      [[fallthrough]];
    case BankKind::meyer:
    case BankKind::adaptive: {
      json bands = json::array();
      for (const Band& b : bank.bands) bands.push_back({b.a, b.b, b.c});
      j["bands"] = bands;
      break;
    }
    case BankKind::wavelet:
      j["scale_factor"] = bank.scale_factor;
      j["scales"] = bank.scales;
      break;
    case BankKind::custom:
      j["sample_lambdas"] = std::vector<double>(bank.sample_lambdas.data(),
                                                bank.sample_lambdas.data() +
                                                    bank.sample_lambdas.size());
      {
        json rows = json::array();
        for (Eigen::Index k = 0; k < bank.sample_values.rows(); ++k) {
          const Eigen::RowVectorXd r = bank.sample_values.row(k);
          rows.push_back(std::vector<double>(r.data(), r.data() + r.size()));
        }
        j["sample_values"] = rows;
      }
      break;
    case BankKind::binomial:
      break;
  }
  return j;
}

TransferBank bank_from_json(const json& j) {
  try {
    const BankKind kind = parse_bank_kind(j.at("kind").get<std::string>());
    const int K = j.at("K").get<int>();
    const double lmax = j.at("lambda_max").get<double>();
    switch (kind) {
      case BankKind::binomial:
        return binomial_bank(K, lmax);
      case BankKind::raised_cosine:
        return raised_cosine_bank(K, lmax, j.at("squared").get<bool>());
      case BankKind::meyer:
        return meyer_bank(K, lmax);
      case BankKind::adaptive: {
        std::vector<double> centers;
        for (const json& b : j.at("bands")) centers.push_back(b.at(1).get<double>());
        detail::require(static_cast<int>(centers.size()) == K, Errc::parse,
                        "adaptive bank: band count differs from K");
        return adaptive_bank(centers, lmax);
      }
      case BankKind::wavelet:
        return meyer_wavelet_bank(j.at("scale_factor").get<double>(), K, lmax);
      case BankKind::custom: {
        const auto ls = j.at("sample_lambdas").get<std::vector<double>>();
        const auto rows = j.at("sample_values").get<std::vector<std::vector<double>>>();
        detail::require(static_cast<int>(rows.size()) == K, Errc::parse,
                        "custom bank: row count differs from K");
        Eigen::MatrixXd v(K, static_cast<Eigen::Index>(ls.size()));
        for (int k = 0; k < K; ++k) {
          detail::require(rows[k].size() == ls.size(), Errc::parse,
                          "custom bank: ragged sample rows");
          for (size_t p = 0; p < ls.size(); ++p) v(k, p) = rows[k][p];
        }
        BankCondition cond = BankCondition::none;
        const std::string c = j.value("condition", "none");
        if (c == "sum") cond = BankCondition::sum;
        if (c == "sum-of-squares") cond = BankCondition::sum_of_squares;
        return custom_bank(Eigen::Map<const Eigen::VectorXd>(ls.data(), ls.size()), v, cond);
      }
    }
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("bank descriptor: ") + e.what());
  }
  throw Error(Errc::parse, "bank descriptor: unsupported kind");
}

void write_bank_samples(const fs::path& path, const TransferBank& bank,
                        const Eigen::VectorXd& lambdas) {
  Eigen::MatrixXd m(lambdas.size(), bank.K + 1);
  m.col(0) = lambdas;
  m.rightCols(bank.K) = bank.sample(lambdas).transpose();
  std::vector<std::string> header{"lambda"};
  for (int k = 0; k < bank.K; ++k) header.push_back("H" + std::to_string(k));
  write_matrix_csv(path, m, header);
}

void write_chebyshev(const fs::path& path, const ChebyshevApprox& approx) {
  Eigen::MatrixXd m(approx.coeffs.size(), 3);
  Eigen::Index r = 0;
  for (int k = 0; k < approx.bands(); ++k) {
    for (int i = 0; i < approx.terms(); ++i, ++r) m.row(r) << k, i, approx.coeffs(k, i);
  }
  write_matrix_csv(path, m, {"k", "m", "c_km"});
}

void write_monomial(const fs::path& path, const Eigen::MatrixXd& h) {
  Eigen::MatrixXd m(h.size(), 3);
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < h.rows(); ++k) {
    for (Eigen::Index p = 0; p < h.cols(); ++p, ++r) m.row(r) << k, p, h(k, p);
  }
  write_matrix_csv(path, m, {"k", "p", "h_pk"});
}

void write_map(const fs::path& path, const VertexFrequencyMap& map, const json& extra) {
  write_matrix_csv(path, map.S.real());
  const double peak = map.S.size() == 0 ? 0.0 : map.S.cwiseAbs().maxCoeff();
  const bool complex_map = map.max_imag() > 1e-12 * std::max(peak, 1e-300);
  if (complex_map) {
    fs::path imag = path;
    imag.replace_filename(path.stem().string() + "_imag" + path.extension().string());
    write_matrix_csv(imag, map.S.imag());
  }
  json meta = extra;
  meta["axis"] = std::string(to_string(map.axis));
  meta["rows"] = map.rows();
  meta["cols"] = map.cols();
  meta["complex"] = complex_map;
  std::vector<int> one_based(map.vertices);
  for (int& v : one_based) ++v;
  meta["vertices"] = one_based;
  if (!map.band_centers.empty()) meta["band_centers"] = map.band_centers;
  fs::path jpath = path;
  jpath.replace_extension(".json");
  write_json(jpath, meta);
}

}  // namespace vf::io
