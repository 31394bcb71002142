// Copyright 2026 The vfgraph Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli/config.hpp"

#include <map>
#include <set>

#include "json.hpp"
#include "vf/error.hpp"
#include "vf/io.hpp"

namespace vf::cli {

namespace {

using nlohmann::json;

struct Entry {
  json value;
  int line = 0;
};

struct Section {
  int line = 0;
  std::map<std::string, Entry> keys;
};

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"graph", {"kind", "n", "seed", "alpha", "kappa", "file"}},
      {"signal", {"segments", "preset", "file", "noise_snr_db", "noise_seed"}},
      {"transform",
       {"form", "basis", "window", "tau", "D", "bank", "K", "squared", "scale_factor", "order",
        "kernel", "reassign", "threshold", "focus", "focus_width"}},
      {"output", {"dir"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (c == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (c == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

class Reader {
 public:
  Reader(std::string name, std::map<std::string, Section> sections)
      : name_(std::move(name)), sections_(std::move(sections)) {}

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw Error(Errc::parse, name_ + ":" + std::to_string(line) + ": " + msg);
  }

  bool has(const std::string& sec, const std::string& key) const {
    auto it = sections_.find(sec);
    return it != sections_.end() && it->second.keys.count(key);
  }

  const Entry& entry(const std::string& sec, const std::string& key) const {
    return sections_.at(sec).keys.at(key);
  }

  int section_line(const std::string& sec) const {
    auto it = sections_.find(sec);
    return it == sections_.end() ? 0 : it->second.line;
  }

  void get(const std::string& sec, const std::string& key, std::string& out) const {
    if (!has(sec, key)) return;
    const Entry& e = entry(sec, key);
    if (!e.value.is_string()) fail(e.line, sec + "." + key + " must be a string");
    out = e.value.get<std::string>();
  }

  void get(const std::string& sec, const std::string& key, double& out) const {
    if (!has(sec, key)) return;
    const Entry& e = entry(sec, key);
    if (!e.value.is_number()) fail(e.line, sec + "." + key + " must be a number");
    out = e.value.get<double>();
  }

  void get(const std::string& sec, const std::string& key, int& out) const {
    if (!has(sec, key)) return;
    const Entry& e = entry(sec, key);
    if (!e.value.is_number_integer()) fail(e.line, sec + "." + key + " must be an integer");
    out = e.value.get<int>();
  }

  void get(const std::string& sec, const std::string& key, std::uint64_t& out) const {
    if (!has(sec, key)) return;
    const Entry& e = entry(sec, key);
    if (!e.value.is_number_integer() || e.value.get<long long>() < 0)
      fail(e.line, sec + "." + key + " must be a nonnegative integer");
    out = e.value.get<std::uint64_t>();
  }

  void get(const std::string& sec, const std::string& key, bool& out) const {
    if (!has(sec, key)) return;
    const Entry& e = entry(sec, key);
    if (!e.value.is_boolean()) fail(e.line, sec + "." + key + " must be true or false");
    out = e.value.get<bool>();
  }

  void get(const std::string& sec, const std::string& key, std::optional<double>& out) const {
    if (!has(sec, key)) return;
    double v = 0.0;
    get(sec, key, v);
    out = v;
  }

  void get(const std::string& sec, const std::string& key, std::vector<double>& out) const {
    if (!has(sec, key)) return;
    const Entry& e = entry(sec, key);
    if (!e.value.is_array()) fail(e.line, sec + "." + key + " must be an array of numbers");
    out.clear();
    for (const json& v : e.value) {
      if (!v.is_number()) fail(e.line, sec + "." + key + " must be an array of numbers");
      out.push_back(v.get<double>());
    }
  }

  void require_one_of(const std::string& sec, const std::string& key, const std::string& value,
                      std::initializer_list<const char*> allowed) const {
    for (const char* a : allowed)
      if (value == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    const int line = has(sec, key) ? entry(sec, key).line : section_line(sec);
    fail(line, sec + "." + key + " = \"" + value + "\" is not one of: " + list);
  }

 private:
  std::string name_;
  std::map<std::string, Section> sections_;
};

std::vector<SignalSegment> parse_segments(const Reader& r) {
  const Entry& e = r.entry("signal", "segments");
  if (!e.value.is_array() || e.value.empty())
    r.fail(e.line, "signal.segments must be a non-empty array of [first, last, eigen_index, amplitude]");
  std::vector<SignalSegment> out;
  for (const json& s : e.value) {
    if (!s.is_array() || (s.size() != 3 && s.size() != 4) || !s[0].is_number_integer() ||
        !s[1].is_number_integer() || !s[2].is_number_integer() ||
        (s.size() == 4 && !s[3].is_number()))
      r.fail(e.line, "each segment must be [first, last, eigen_index] or [first, last, eigen_index, amplitude]");
    SignalSegment seg;
    seg.first = s[0].get<int>();
    seg.last = s[1].get<int>();
    seg.eigen_index = s[2].get<int>();
    seg.amplitude = s.size() == 4 ? s[3].get<double>() : 1.0;
    out.push_back(seg);
  }
  return out;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& name) {
  std::map<std::string, Section> sections;
  std::string current;
  int line_no = 0;
  size_t pos = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(Errc::parse, name + ":" + std::to_string(line_no) + ": " + msg);
  };
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    const std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      current = trim(line.substr(1, line.size() - 2));
      if (!schema().count(current)) fail("unknown section [" + current + "]");
      if (sections.count(current)) fail("duplicate section [" + current + "]");
      sections[current].line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    if (current.empty()) fail("key outside of a section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");
    if (!schema().at(current).count(key)) fail("unknown key '" + key + "' in [" + current + "]");
    if (sections[current].keys.count(key)) fail("duplicate key '" + key + "'");
    if (value.empty()) fail("missing value for '" + key + "'");
    json parsed;
    try {
      parsed = json::parse(value);
    } catch (const json::parse_error&) {
      fail("cannot parse value for '" + key + "': " + value);
    }
    sections[current].keys[key] = {std::move(parsed), line_no};
  }

  const Reader r(name, std::move(sections));
  ExperimentConfig cfg;

  if (!r.section_line("graph")) r.fail(line_no, "missing [graph] section");
  if (!r.has("graph", "kind")) r.fail(r.section_line("graph"), "[graph] needs kind");
  r.get("graph", "kind", cfg.graph.kind);
  r.require_one_of("graph", "kind", cfg.graph.kind,
                   {"swiss-roll", "path", "cycle", "directed-cycle", "file"});
  r.get("graph", "n", cfg.graph.n);
  r.get("graph", "seed", cfg.graph.seed);
  r.get("graph", "alpha", cfg.graph.alpha);
  r.get("graph", "kappa", cfg.graph.kappa);
  r.get("graph", "file", cfg.graph.file);
  if (cfg.graph.n < 2) r.fail(r.has("graph", "n") ? r.entry("graph", "n").line : r.section_line("graph"), "graph.n must be >= 2");
  if (cfg.graph.kind == "file" && cfg.graph.file.empty())
    r.fail(r.section_line("graph"), "graph.kind = \"file\" needs graph.file");

  if (!r.section_line("signal")) r.fail(line_no, "missing [signal] section");
  const int sources = r.has("signal", "segments") + r.has("signal", "preset") + r.has("signal", "file");
  if (sources != 1)
    r.fail(r.section_line("signal"), "[signal] needs exactly one of segments, preset, file");
  if (r.has("signal", "segments")) {
    cfg.signal.segments = parse_segments(r);
  } else if (r.has("signal", "preset")) {
    std::string preset;
    r.get("signal", "preset", preset);
    r.require_one_of("signal", "preset", preset, {"three-component"});
    cfg.signal.segments = three_component_segments();
  }
  r.get("signal", "file", cfg.signal.file);
  if (!cfg.signal.segments.empty() && cfg.graph.kind != "file") {
    try {
      validate_segments(cfg.signal.segments, cfg.graph.n);
    } catch (const Error& e) {
      const int line = r.has("signal", "segments") ? r.entry("signal", "segments").line
                                                   : r.entry("signal", "preset").line;
      r.fail(line, e.what());
    }
  }
  r.get("signal", "noise_snr_db", cfg.signal.noise_snr_db);
  r.get("signal", "noise_seed", cfg.signal.noise_seed);

  if (!r.section_line("transform")) r.fail(line_no, "missing [transform] section");
  TransformSpec& t = cfg.transform;
  r.get("transform", "form", t.form);
  r.require_one_of("transform", "form", t.form,
                   {"rihaczek", "rid", "lgft-window", "lgft-bank", "wavelet"});
  r.get("transform", "basis", t.basis);
  try {
    parse_basis_kind(t.basis);
  } catch (const Error& e) {
    r.fail(r.entry("transform", "basis").line, e.what());
  }
  r.get("transform", "window", t.window);
  r.require_one_of("transform", "window", t.window, {"heat", "hann", "rectangular"});
  r.get("transform", "tau", t.tau);
  r.get("transform", "D", t.D);
  r.get("transform", "bank", t.bank);
  r.require_one_of("transform", "bank", t.bank,
                   {"binomial", "raised-cosine", "meyer", "adaptive", "wavelet"});
  r.get("transform", "K", t.K);
  r.get("transform", "squared", t.squared);
  r.get("transform", "scale_factor", t.scale_factor);
  r.get("transform", "order", t.order);
  r.get("transform", "kernel", t.kernel);
  r.require_one_of("transform", "kernel", t.kernel, {"delta", "sinc"});
  r.get("transform", "reassign", t.reassign);
  r.get("transform", "threshold", t.threshold);
  r.get("transform", "focus", t.focus);
  r.get("transform", "focus_width", t.focus_width);
  auto positive = [&](const char* key, bool ok, const char* what) {
    if (!ok) r.fail(r.has("transform", key) ? r.entry("transform", key).line : r.section_line("transform"),
                    std::string("transform.") + key + " " + what);
  };
  positive("tau", t.tau > 0.0, "must be positive");
  positive("D", t.D >= 1, "must be >= 1");
  positive("K", t.K >= 1, "must be >= 1");
  positive("scale_factor", t.scale_factor > 1.0, "must be > 1");
  positive("order", t.order >= 0, "must be >= 0");
  positive("focus_width", t.focus_width > 0.0, "must be positive");

  r.get("output", "dir", cfg.output_dir);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  ExperimentConfig cfg = parse_config(io::read_file(path), path.string());
  cfg.source = path.parent_path();
  return cfg;
}

}  // namespace vf::cli
