// Copyright 2026 The querylab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "querylab/algorithms.hpp"
#include "querylab/hypergraph.hpp"
#include "querylab/oracle.hpp"

namespace querylab {

/// One experiment row. `answer` is an Answer name, "budget_exceeded" or
/// "error"; `success` and `witness_valid` are "true", "false" or "na".
struct TrialReport {
  std::string algo;
  std::size_t n = 0, d = 0, k = 0, t = 0;
  std::uint64_t seed = 0;
  QueryStats queries;
  std::string answer;
  std::string truth;
  std::string success;
  std::string witness_valid;
  double elapsed_ms = 0;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

inline constexpr const char* kCsvHeader =
    "algo,n,d,k,t,seed,bis,bise,gpis,gpise,answer,truth,success,witness_valid,elapsed_ms";

std::string to_csv_row(const TrialReport& r);
TrialReport parse_csv_row(std::string_view line);
void write_csv(std::ostream& out, const std::vector<TrialReport>& rows);
std::vector<TrialReport> read_csv(std::istream& in);  // expects the header line
nlohmann::json to_json(const TrialReport& r);

struct TrialSpec {
  std::string algo;
  std::size_t k = 1;
  std::size_t t = 2;
  std::uint64_t seed = 0;
  EdgeSelectionPolicy policy = EdgeSelectionPolicy::Lexicographic;
  AlgorithmConstants constants;
  SolverLimits limits;
  std::ostream* query_log = nullptr;
};

struct TrialOutcome {
  TrialReport report;
  std::optional<AlgorithmResult> result;  // absent when a budget ran out
};

/// Runs one algorithm against `hidden` and grades it against exact solvers.
/// The algorithm seed and the oracle policy seed both derive from spec.seed.
/// Throws InvalidArgument for an unknown algorithm or an arity mismatch.
TrialOutcome execute_trial(const Hypergraph& hidden, const TrialSpec& spec);

struct SweepConfig {
  std::vector<std::string> algorithms;
  std::string generator;  // empty: chosen per algorithm
  std::vector<std::size_t> n, d, k, t, m;
  std::vector<long long> k_offsets{0};  // query k = planted k + offset
  double p = 0.1;                       // gnp edge probability
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  EdgeSelectionPolicy policy = EdgeSelectionPolicy::Lexicographic;
  AlgorithmConstants constants;
  SolverLimits limits;
  std::string csv_path;
  std::string summary_path;
};

// Throws InvalidArgument on unknown keys' values, empty grids or trials == 0.
SweepConfig parse_sweep_config(const nlohmann::json& j);
void apply_overrides(AlgorithmConstants& c, const nlohmann::json& overrides);

struct SweepCell {
  std::string algo;
  std::string generator;
  std::size_t n, d, k, t, m;
  long long k_offset;
  [[nodiscard]] std::string key() const;
};

std::vector<SweepCell> expand_cells(const SweepConfig& cfg);

// Ground-truth-carrying instance for one trial of a cell.
PlantedInstance make_instance(const SweepCell& cell, double p, std::uint64_t seed);

std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, std::size_t trial);

// One row per (cell, trial) in cell-major order. Trials run in parallel.
std::vector<TrialReport> run_sweep(const SweepConfig& cfg);
std::vector<TrialReport> run_sweep_serial(const SweepConfig& cfg);

// Per-cell success rates and query means, plus log-log fitted exponents.
nlohmann::json summarize(const SweepConfig& cfg, const std::vector<TrialReport>& rows);

// Exponent of k in the predicted query bound (null when none is stated).
nlohmann::json predicted_exponent(std::string_view algo, std::size_t d);

/// Exact optima, core classification, conditional bound checks and the
/// representative family for one instance.
nlohmann::json verify_report(const Hypergraph& h, std::size_t k, const SolverLimits& limits = {});

}  // namespace querylab
