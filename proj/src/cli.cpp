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

#include "exclust/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "exclust/core.hpp"
#include "exclust/coverage.hpp"
#include "exclust/io.hpp"
#include "exclust/oracle.hpp"
#include "exclust/pipeline.hpp"
#include "exclust/stats.hpp"

namespace exclust::cli {

namespace {

struct Config {
  std::string input;
  std::string format = "vectors-csv";
  bool header = false;
  std::string label_column;
  Index k = 0;
  double epsilon = 0.0;
  Index beta = 0;
  std::string metric;
  Index seed_index = 0;
  std::string output;
  std::string solution;
  bool verify_exact = false;
  bool strict_metric = false;
  bool omit_timings = false;
  int threads = 1;
};

struct Inputs {
  LoadedInput loaded;
  DistanceMatrix dm;
  MetricKind metric;
  double distances_ms;
};

void add_input_options(CLI::App& cmd, Config& cfg) {
  cmd.add_option("--input", cfg.input, "Input CSV file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd.add_option("--format", cfg.format, "Input format")
      ->check(CLI::IsMember({"vectors-csv", "matrix-csv"}))
      ->capture_default_str();
  cmd.add_flag("--header", cfg.header, "First non-blank row is a header");
  cmd.add_option("--label-column", cfg.label_column,
                 "Header name or zero-based index of a pass-through label "
                 "column (vectors-csv)");
  cmd.add_option("--metric", cfg.metric,
                 "euclidean | cosine-angular | precomputed (default: "
                 "precomputed for matrix-csv, euclidean otherwise)")
      ->check(CLI::IsMember({"euclidean", "cosine-angular", "precomputed"}));
  cmd.add_flag("--strict-metric", cfg.strict_metric,
               "Treat a triangle-inequality violation in a precomputed "
               "matrix as an error");
  cmd.add_option("--threads", cfg.threads,
                 "Worker threads for distances and neighborhoods")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

Inputs load_inputs(const Config& cfg, std::ostream& err) {
  InputSpec spec;
  spec.path = cfg.input;
  spec.format = parse_input_format(cfg.format);
  spec.has_header = cfg.header;
  if (!cfg.label_column.empty()) spec.label_column = cfg.label_column;

  const bool matrix = spec.format == InputFormat::kMatrixCsv;
  const MetricKind metric =
      cfg.metric.empty()
          ? (matrix ? MetricKind::kPrecomputed : MetricKind::kEuclidean)
          : parse_metric(cfg.metric);
  if ((metric == MetricKind::kPrecomputed) != matrix) {
    throw InputError("--metric " + std::string(to_string(metric)) +
                     " is incompatible with --format " + cfg.format +
                     " (precomputed goes with matrix-csv)");
  }

  const auto start = std::chrono::steady_clock::now();
  LoadedInput loaded = load_dataset(spec);
  std::optional<DistanceMatrix> dm = loaded.distances;
  if (!dm) {
    dm = compute_distances(loaded.dataset, metric, cfg.threads);
  } else {
    const TriangleCheck tri = check_triangle_inequality(*dm);
    if (!tri.ok()) {
      const auto& v = *tri.violation;
      const std::string msg =
          "distance matrix violates the triangle inequality: d(" +
          std::to_string(v[0]) + "," + std::to_string(v[2]) + ") exceeds d(" +
          std::to_string(v[0]) + "," + std::to_string(v[1]) + ") + d(" +
          std::to_string(v[1]) + "," + std::to_string(v[2]) + ") by " +
          std::to_string(tri.excess);
      if (cfg.strict_metric) throw InputError(msg);
      err << "warning: " << msg << "; approximation guarantees may not hold\n";
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return {std::move(loaded), std::move(*dm), metric, ms};
}

std::string fmt_real(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

void print_summary(std::ostream& out, const ClusteringSolution& sol,
                   const SolutionReport& report) {
  const auto& g = report.global;
  auto row = [&out](const char* key, const std::string& value) {
    out << std::left << std::setw(18) << key << value << "\n";
  };
  row("algorithm", sol.is_sccrb() ? "sccrb" : "scce");
  row("n", std::to_string(g.n));
  row("k", std::to_string(sol.params.k));
  row("epsilon", fmt_real(sol.params.epsilon));
  row("beta", sol.params.beta ? std::to_string(*sol.params.beta) : "-");
  row("max diameter", fmt_real(g.max_diameter));
  row("exemplars", std::to_string(g.total_exemplars));
  row("covered", std::to_string(g.covered_count) + "/" + std::to_string(g.n) +
                     " (" + fmt_real(g.covered_fraction) + ")");
  row("empty clusters", std::to_string(g.empty_clusters));
  const auto& t = report.timing;
  row("time (ms)", "distances " + fmt_real(t.distances_ms) + ", partition " +
                       fmt_real(t.partition_ms) + ", neighborhoods " +
                       fmt_real(t.neighborhoods_ms) + ", selection " +
                       fmt_real(t.selection_ms) + ", assignment " +
                       fmt_real(t.assignment_ms));
}

void print_ratios(std::ostream& out, const SolutionReport& report,
                  const ClusteringSolution& sol) {
  if (!report.ratios) return;
  const auto& r = *report.ratios;
  const double n = static_cast<double>(report.global.n);
  bool any = false;
  if (r.d_star) {
    out << "D* = " << fmt_real(*r.d_star) << ", diameter / 2(D*+eps) = "
        << fmt_real(*r.diameter) << " (bound 1)\n";
    any = true;
  }
  if (r.n_star && !sol.is_sccrb()) {
    out << "N* = " << *r.n_star << ", exemplars / N* = "
        << fmt_real(*r.exemplars) << " (bound H_n = "
        << fmt_real(harmonic_number(static_cast<Index>(n))) << ")\n";
    any = true;
  }
  if (r.q_star && sol.is_sccrb()) {
    out << "Q* = " << *r.q_star << ", covered / Q* = " << fmt_real(*r.coverage)
        << " (bound 1-1/e = " << fmt_real(1.0 - 1.0 / std::exp(1.0)) << ")\n";
    any = true;
  }
  if (!any) out << "instance too large for exact verification\n";
}

// Structural and, when the oracles fit, approximation-bound checks.
int verify_against_oracles(std::ostream& out, std::ostream& err,
                           const DistanceMatrix& dm,
                           const ClusteringSolution& sol,
                           SolutionReport& report, bool exact) {
  std::vector<std::string> problems;
  const VerificationReport structural = verify_solution(dm, sol);
  for (const auto& check : structural.checks) {
    for (const auto& v : check.violations) {
      problems.push_back(check.name + ": " + v);
    }
  }
  if (exact && structural.find("partition")->passed()) {
    const OracleResult oracle = solve_within_limits(
        dm, sol.params.k, Epsilon(sol.params.epsilon), sol.params.beta);
    const StepTimings timing = report.timing;
    report = summarize(dm, sol, oracle);
    report.timing = timing;
    print_ratios(out, report, sol);
    for (auto& v : check_bounds(report, sol)) problems.push_back(std::move(v));
  }
  for (const auto& p : problems) err << "violation: " << p << "\n";
  if (!problems.empty()) return kExitBoundViolation;
  out << "verification passed\n";
  return kExitOk;
}

int run_pipeline_command(const Config& cfg, bool budgeted, std::ostream& out,
                         std::ostream& err) {
  Inputs in = load_inputs(cfg, err);
  const Epsilon eps(cfg.epsilon);
  PipelineOptions options{cfg.seed_index, in.metric, cfg.threads};
  ClusteringSolution sol =
      budgeted ? run_sccrb(in.loaded.dataset, in.dm, cfg.k, eps, cfg.beta,
                           options)
               : run_scce(in.loaded.dataset, in.dm, cfg.k, eps, options);
  sol.timings.distances_ms = in.distances_ms;
  SolutionReport report = summarize(in.dm, sol);

  int status = kExitOk;
  if (cfg.verify_exact) {
    status = verify_against_oracles(out, err, in.dm, sol, report, true);
  }
  write_solution(sol, report, cfg.output, in.loaded.dataset.labels(),
                 !cfg.omit_timings);
  print_summary(out, sol, report);
  return status;
}

int run_oracle_command(const Config& cfg, bool have_k, bool have_eps,
                       bool have_beta, std::ostream& out, std::ostream& err) {
  if (!have_k && !have_eps) {
    throw InputError("oracle needs --k and/or --epsilon");
  }
  if (have_beta && !have_eps) throw InputError("--beta requires --epsilon");
  Inputs in = load_inputs(cfg, err);

  Json doc;
  doc["n"] = in.dm.size();
  if (have_k) {
    const auto opt = exact_min_diameter(in.dm, cfg.k);
    doc["k"] = cfg.k;
    doc["d_star"] = opt.d_star;
    doc["diameter_witness"] = opt.assignment;
  }
  if (have_eps) {
    const Epsilon eps(cfg.epsilon);
    const auto neigh = build_neighborhoods(in.dm, eps);
    const auto cover = exact_min_exemplars(neigh);
    doc["epsilon"] = cfg.epsilon;
    doc["n_star"] = cover.n_star;
    doc["exemplar_witness"] = cover.witness;
    if (have_beta) {
      const auto best = exact_max_coverage(neigh, cfg.beta);
      doc["beta"] = cfg.beta;
      doc["q_star"] = best.q_star;
      doc["coverage_witness"] = best.witness;
    }
  }
  const std::string text = doc.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + cfg.output + "'");
    f << text;
  }
  return kExitOk;
}

int run_verify_command(const Config& cfg, std::ostream& out,
                       std::ostream& err) {
  Inputs in = load_inputs(cfg, err);
  Document doc = read_document(cfg.solution);
  if (doc.solution.size() != in.dm.size()) {
    throw InputError("solution has " + std::to_string(doc.solution.size()) +
                     " instances but input has " +
                     std::to_string(in.dm.size()));
  }
  return verify_against_oracles(out, err, in.dm, doc.solution, doc.report,
                                cfg.verify_exact);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Clustering with exemplar explanations: partitions instances into k "
      "clusters and picks exemplars that cover each cluster within epsilon.",
      "exclust"};
  app.require_subcommand(1);
  Config cfg;

  auto* scce = app.add_subcommand(
      "scce", "Cluster and explain every instance (greedy set cover)");
  auto* sccrb = app.add_subcommand(
      "sccrb", "Cluster with at most beta exemplars (greedy max coverage)");
  auto* oracle = app.add_subcommand(
      "oracle", "Exact D*, N* and Q* by exhaustive search (small inputs)");
  auto* verify = app.add_subcommand(
      "verify", "Check a solution document against its input");

  CLI::Option* k_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  for (auto* cmd : {scce, sccrb, oracle, verify}) {
    add_input_options(*cmd, cfg);
  }
  for (auto* cmd : {scce, sccrb}) {
    cmd->add_option("--k", cfg.k, "Number of clusters")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--epsilon", cfg.epsilon, "Coverage radius (> 0)")
        ->required();
    cmd->add_option("--seed-index", cfg.seed_index,
                    "First farthest-first head")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_option("--output", cfg.output, "Solution document path")
        ->required();
    cmd->add_flag("--verify-exact", cfg.verify_exact,
                  "Check structure and, on small inputs, the approximation "
                  "bounds against exact optima");
    cmd->add_flag("--omit-timings", cfg.omit_timings,
                  "Leave the timings section out of the document");
  }
  sccrb->add_option("--beta", cfg.beta, "Exemplar budget")
      ->required()
      ->check(CLI::PositiveNumber);

  k_opt = oracle->add_option("--k", cfg.k, "Clusters for D*")
              ->check(CLI::PositiveNumber);
  eps_opt = oracle->add_option("--epsilon", cfg.epsilon, "Radius for N*, Q*");
  beta_opt = oracle->add_option("--beta", cfg.beta, "Budget for Q*")
                 ->check(CLI::PositiveNumber);
  oracle->add_option("--output", cfg.output, "Write JSON here, not stdout");

  verify->add_option("--solution", cfg.solution, "Solution document")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_flag("--verify-exact", cfg.verify_exact,
                   "Also check approximation bounds against exact optima");

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("exclust");
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    if (*scce) return run_pipeline_command(cfg, false, out, err);
    if (*sccrb) return run_pipeline_command(cfg, true, out, err);
    if (*oracle) {
      return run_oracle_command(cfg, k_opt->count() > 0, eps_opt->count() > 0,
                                beta_opt->count() > 0, out, err);
    }
    return run_verify_command(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace exclust::cli
