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

// CSV ingestion and the solution document.
//
// Document schema (version "1"), keys in this order:
//   schema_version, params, blocks, clusters, exemplars, covered_by,
//   uncovered, [labels], report, [timings]
// Reals use the shortest representation that parses back to the same
// double. "timings" holds the only non-deterministic values and can be
// omitted.

#ifndef EXCLUST_IO_HPP_
#define EXCLUST_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "exclust/core.hpp"
#include "exclust/pipeline.hpp"
#include "exclust/stats.hpp"

namespace exclust {

enum class InputFormat { kVectorsCsv, kMatrixCsv };

std::string_view to_string(InputFormat format);
InputFormat parse_input_format(std::string_view name);

struct InputSpec {
  std::string path;
  InputFormat format = InputFormat::kVectorsCsv;
  bool has_header = false;
  // Header name, or zero-based column index. Vectors only.
  std::optional<std::string> label_column;
};

struct LoadedInput {
  Dataset dataset;
  std::optional<DistanceMatrix> distances;  // matrix-csv only
};

LoadedInput load_dataset(const InputSpec& spec);
LoadedInput parse_dataset(std::istream& in, const InputSpec& spec);

inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

Json to_json(const ClusteringSolution& sol);
Json to_json(const SolutionReport& report);
Json timings_to_json(const StepTimings& t);
ClusteringSolution solution_from_json(const Json& doc);
SolutionReport report_from_json(const Json& doc);
StepTimings timings_from_json(const Json& doc);

struct Document {
  ClusteringSolution solution;
  SolutionReport report;
  std::vector<std::string> labels;
};

std::string render_document(const ClusteringSolution& sol,
                            const SolutionReport& report,
                            const std::vector<std::string>& labels = {},
                            bool include_timings = true);
Document parse_document(std::string_view text);

void write_solution(const ClusteringSolution& sol, const SolutionReport& report,
                    const std::string& path,
                    const std::vector<std::string>& labels = {},
                    bool include_timings = true);
Document read_document(const std::string& path);

}  // namespace exclust

#endif  // EXCLUST_IO_HPP_
