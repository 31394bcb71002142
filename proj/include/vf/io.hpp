// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vf/graph.hpp"
#include "vf/lgft.hpp"
#include "vf/polyops.hpp"
#include "vf/spectral.hpp"
#include "vf/windows.hpp"

namespace vf::io {

namespace fs = std::filesystem;

/// %.17g; every CSV value goes through this.
std::string format_double(double v);

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const fs::path& path, const std::string& content);
std::string read_file(const fs::path& path);

std::string matrix_csv(const Eigen::MatrixXd& m, const std::vector<std::string>& header = {});
void write_matrix_csv(const fs::path& path, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header = {});
void write_vector_csv(const fs::path& path, const Eigen::VectorXd& v, const std::string& name);

/// Numeric CSV; a first line that does not parse as numbers is a header.
Eigen::MatrixXd read_matrix_csv(const fs::path& path);
/// Single-column (or single-row) CSV as a vector.
Eigen::VectorXd read_vector_csv(const fs::path& path);

void write_json(const fs::path& path, const nlohmann::json& j);
nlohmann::json read_json(const fs::path& path);

/// Edge list `src,dst,weight` (1-based, undirected edges once with src < dst)
/// plus sidecar JSON {n, kind, seed}.
void write_graph(const fs::path& csv_path, const Graph& g,
                 std::optional<std::uint64_t> seed = std::nullopt);
Graph read_graph(const fs::path& csv_path);
fs::path sidecar_path(const fs::path& csv_path);

void write_basis(const fs::path& eigenvalues_csv, const fs::path& vectors_csv,
                 const SpectralBasis& basis);

nlohmann::json bank_to_json(const TransferBank& bank);
TransferBank bank_from_json(const nlohmann::json& j);
/// Rows: sample points; columns: lambda, H_0 .. H_{K-1}.
void write_bank_samples(const fs::path& path, const TransferBank& bank,
                        const Eigen::VectorXd& lambdas);

/// Rows (k, m, c_km), optionally followed by a file of (k, p, h_pk).
void write_chebyshev(const fs::path& path, const ChebyshevApprox& approx);
void write_monomial(const fs::path& path, const Eigen::MatrixXd& h);

/// Real part to `path`; the imaginary part goes to `<stem>_imag.csv` when
/// the map is complex. Metadata JSON to `<stem>.json`.
void write_map(const fs::path& path, const VertexFrequencyMap& map,
               const nlohmann::json& extra = nlohmann::json::object());

}  // namespace vf::io
