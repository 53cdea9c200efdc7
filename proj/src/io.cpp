// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exclust/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace exclust {

std::string_view to_string(InputFormat format) {
  return format == InputFormat::kVectorsCsv ? "vectors-csv" : "matrix-csv";
}

InputFormat parse_input_format(std::string_view name) {
  if (name == "vectors-csv") return InputFormat::kVectorsCsv;
  if (name == "matrix-csv") return InputFormat::kMatrixCsv;
  throw InputError("unknown input format '" + std::string(name) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_real(std::string_view cell, std::size_t line, std::size_t col) {
  // from_chars ignores the locale and rejects a leading '+'.
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto* end = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  if (cell.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw InputError("line " + std::to_string(line) + ", column " +
                     std::to_string(col + 1) + ": not a finite number: '" +
                     std::string(cell) + "'");
  }
  return value;
}

struct Row {
  std::size_t line;
  std::vector<std::string_view> cells;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  if (!lines.empty() && lines.front().starts_with("\xEF\xBB\xBF")) {
    lines.front().erase(0, 3);
  }
  return lines;
}

std::optional<std::size_t> resolve_label_column(
    const InputSpec& spec, const std::vector<std::string_view>* header) {
  if (!spec.label_column) return std::nullopt;
  const std::string& name = *spec.label_column;
  if (header) {
    for (std::size_t c = 0; c < header->size(); ++c) {
      if ((*header)[c] == name) return c;
    }
  }
  std::size_t index = 0;
  const auto [ptr, ec] =
      std::from_chars(name.data(), name.data() + name.size(), index);
  if (ec != std::errc() || ptr != name.data() + name.size()) {
    throw InputError("label column '" + name + "' not found");
  }
  return index;
}

}  // namespace

LoadedInput parse_dataset(std::istream& in, const InputSpec& spec) {
  const auto lines = read_lines(in);
  std::vector<Row> rows;
  std::optional<std::vector<std::string_view>> header;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto text = trim(lines[l]);
    if (text.empty()) continue;
    if (spec.has_header && !header) {
      header = split(text);
      continue;
    }
    rows.push_back({l + 1, split(text)});
  }
  if (rows.empty()) throw InputError("input contains no data rows");

  const std::size_t width = rows.front().cells.size();
  for (const auto& row : rows) {
    if (row.cells.size() != width) {
      throw InputError("line " + std::to_string(row.line) + " has " +
                       std::to_string(row.cells.size()) + " cells, expected " +
                       std::to_string(width));
    }
  }

  const auto n = static_cast<Index>(rows.size());
  if (spec.format == InputFormat::kMatrixCsv) {
    if (spec.label_column) {
      throw InputError("label_column is not supported for matrix-csv");
    }
    if (static_cast<Index>(width) != n) {
      throw InputError("distance matrix is not square: " + std::to_string(n) +
                       " rows x " + std::to_string(width) + " columns");
    }
    Eigen::MatrixXd m(n, n);
    for (Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      for (Index j = 0; j < n; ++j) {
        m(i, j) = parse_real(row.cells[static_cast<std::size_t>(j)], row.line,
                             static_cast<std::size_t>(j));
      }
    }
    Dataset ds = Dataset::opaque(n);
    DistanceMatrix dm = compute_distances(ds, m);
    return {std::move(ds), std::move(dm)};
  }

  const auto label_col = resolve_label_column(spec, header ? &*header : nullptr);
  if (label_col && *label_col >= width) {
    throw InputError("label column " + std::to_string(*label_col) +
                     " is beyond the " + std::to_string(width) + " columns");
  }
  const auto dims = static_cast<Index>(width - (label_col ? 1 : 0));
  if (dims < 1) throw InputError("vectors must have dimension >= 1");

  Eigen::MatrixXd points(n, dims);
  std::vector<std::string> labels;
  if (label_col) labels.reserve(rows.size());
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    Index d = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (label_col && c == *label_col) {
        labels.emplace_back(row.cells[c]);
        continue;
      }
      points(i, d++) = parse_real(row.cells[c], row.line, c);
    }
  }
  return {Dataset::from_vectors(std::move(points), std::move(labels)),
          std::nullopt};
}

LoadedInput load_dataset(const InputSpec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + spec.path + "'");
  return parse_dataset(in, spec);
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

Json to_json(const ClusteringSolution& sol) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Json params;
  params["algorithm"] = sol.is_sccrb() ? "sccrb" : "scce";
  params["n"] = sol.size();
  params["k"] = sol.params.k;
  params["epsilon"] = sol.params.epsilon;
  if (sol.params.beta) params["beta"] = *sol.params.beta;
  params["metric"] = std::string(to_string(sol.params.metric));
  params["seed_index"] = sol.params.seed_index;
  doc["params"] = params;
  doc["blocks"] = {{"heads", sol.blocks.heads},
                   {"assignment", sol.blocks.assignment}};
  doc["clusters"] = sol.clusters;
  doc["exemplars"] = sol.exemplars;
  Json covered = Json::array();
  for (Index e : sol.covered_by) {
    covered.push_back(e == kUncovered ? Json(nullptr) : Json(e));
  }
  doc["covered_by"] = covered;
  doc["uncovered"] = sol.uncovered;
  return doc;
}

Json timings_to_json(const StepTimings& t) {
  return {{"distances_ms", t.distances_ms},
          {"partition_ms", t.partition_ms},
          {"neighborhoods_ms", t.neighborhoods_ms},
          {"selection_ms", t.selection_ms},
          {"assignment_ms", t.assignment_ms},
          {"total_ms", t.total_ms}};
}

StepTimings timings_from_json(const Json& j) {
  StepTimings t;
  t.distances_ms = j.at("distances_ms").get<double>();
  t.partition_ms = j.at("partition_ms").get<double>();
  t.neighborhoods_ms = j.at("neighborhoods_ms").get<double>();
  t.selection_ms = j.at("selection_ms").get<double>();
  t.assignment_ms = j.at("assignment_ms").get<double>();
  t.total_ms = j.at("total_ms").get<double>();
  return t;
}

Json to_json(const SolutionReport& report) {
  Json per_cluster = Json::array();
  for (const auto& c : report.per_cluster) {
    per_cluster.push_back({{"size", c.size},
                           {"exemplar_count", c.exemplar_count},
                           {"diameter", c.diameter},
                           {"mean_exemplar_distance", c.mean_exemplar_distance},
                           {"empty", c.empty}});
  }
  const auto& g = report.global;
  Json out;
  out["per_cluster"] = per_cluster;
  out["global"] = {{"n", g.n},
                   {"max_diameter", g.max_diameter},
                   {"total_exemplars", g.total_exemplars},
                   {"covered_count", g.covered_count},
                   {"covered_fraction", g.covered_fraction},
                   {"empty_clusters", g.empty_clusters},
                   {"uncovered", g.uncovered}};
  if (report.ratios) {
    const auto& r = *report.ratios;
    out["ratios"] = {{"d_star", optional_json(r.d_star)},
                     {"n_star", optional_json(r.n_star)},
                     {"q_star", optional_json(r.q_star)},
                     {"diameter", optional_json(r.diameter)},
                     {"exemplars", optional_json(r.exemplars)},
                     {"coverage", optional_json(r.coverage)}};
  }
  return out;
}

ClusteringSolution solution_from_json(const Json& doc) {
  if (doc.at("schema_version").get<std::string>() != kSchemaVersion) {
    throw InputError("unsupported schema_version");
  }
  ClusteringSolution sol;
  const auto& p = doc.at("params");
  sol.params.k = p.at("k").get<Index>();
  sol.params.epsilon = p.at("epsilon").get<double>();
  sol.params.beta = optional_from<Index>(p, "beta");
  sol.params.metric = parse_metric(p.at("metric").get<std::string>());
  sol.params.seed_index = p.at("seed_index").get<Index>();
  sol.blocks.k = sol.params.k;
  sol.blocks.heads = doc.at("blocks").at("heads").get<IndexList>();
  sol.blocks.assignment = doc.at("blocks").at("assignment").get<IndexList>();
  sol.clusters = doc.at("clusters").get<std::vector<IndexList>>();
  sol.exemplars = doc.at("exemplars").get<std::vector<IndexList>>();
  for (const auto& e : doc.at("covered_by")) {
    sol.covered_by.push_back(e.is_null() ? kUncovered : e.get<Index>());
  }
  sol.uncovered = doc.at("uncovered").get<IndexList>();
  if (doc.contains("timings")) sol.timings = timings_from_json(doc["timings"]);
  return sol;
}

SolutionReport report_from_json(const Json& doc) {
  const auto& r = doc.at("report");
  SolutionReport report;
  for (const auto& c : r.at("per_cluster")) {
    report.per_cluster.push_back({c.at("size").get<Index>(),
                                  c.at("exemplar_count").get<Index>(),
                                  c.at("diameter").get<double>(),
                                  c.at("mean_exemplar_distance").get<double>(),
                                  c.at("empty").get<bool>()});
  }
  const auto& g = r.at("global");
  report.global.n = g.at("n").get<Index>();
  report.global.max_diameter = g.at("max_diameter").get<double>();
  report.global.total_exemplars = g.at("total_exemplars").get<Index>();
  report.global.covered_count = g.at("covered_count").get<Index>();
  report.global.covered_fraction = g.at("covered_fraction").get<double>();
  report.global.empty_clusters = g.at("empty_clusters").get<Index>();
  report.global.uncovered = g.at("uncovered").get<IndexList>();
  if (r.contains("ratios")) {
    const auto& j = r.at("ratios");
    ApproximationRatios ratios;
    ratios.d_star = optional_from<double>(j, "d_star");
    ratios.n_star = optional_from<Index>(j, "n_star");
    ratios.q_star = optional_from<Index>(j, "q_star");
    ratios.diameter = optional_from<double>(j, "diameter");
    ratios.exemplars = optional_from<double>(j, "exemplars");
    ratios.coverage = optional_from<double>(j, "coverage");
    report.ratios = ratios;
  }
  if (doc.contains("timings")) report.timing = timings_from_json(doc["timings"]);
  return report;
}

std::string render_document(const ClusteringSolution& sol,
                            const SolutionReport& report,
                            const std::vector<std::string>& labels,
                            bool include_timings) {
  Json doc = to_json(sol);
  if (!labels.empty()) doc["labels"] = labels;
  doc["report"] = to_json(report);
  if (include_timings) doc["timings"] = timings_to_json(report.timing);
  return doc.dump(2) + "\n";
}

Document parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed solution document: ") + e.what());
  }
  try {
    Document out{solution_from_json(doc), report_from_json(doc), {}};
    if (doc.contains("labels")) {
      out.labels = doc["labels"].get<std::vector<std::string>>();
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid solution document: ") + e.what());
  }
}

void write_solution(const ClusteringSolution& sol, const SolutionReport& report,
                    const std::string& path,
                    const std::vector<std::string>& labels,
                    bool include_timings) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << render_document(sol, report, labels, include_timings);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open solution file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace exclust
