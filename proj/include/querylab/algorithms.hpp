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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "querylab/coloring.hpp"
#include "querylab/hypergraph.hpp"
#include "querylab/oracle.hpp"
#include "querylab/solvers.hpp"

namespace querylab {

/// Every named constant of the algorithms. Unset optionals take their
/// d-dependent defaults; `colors_factor`, when set, replaces the leading
/// color constant of whichever algorithm runs.
struct AlgorithmConstants {
  double vc_colors_factor = 1000;       // b = 1000k
  double vc_rounds_factor = 100;        // 100 log k samples
  double vc_decision_colors = 100;      // b = 100k^4
  double match_colors_factor = 2000;    // b = 2000k
  double match_rounds_factor = 200;     // 200 log k samples
  std::optional<double> pack_gamma;     // 100d^2, b = gamma k^2
  std::optional<double> hs_alpha;       // 100d^2
  std::optional<double> hs_beta;        // 100 d^3 2^(d+5)
  std::optional<double> hs_decision_gamma;  // 100 9^d d^2, b = gamma k^(2d)
  double cut_colors = 100;              // b = 100k^2
  double boost_c = 10;                  // C log k repetitions
  std::optional<double> colors_factor;

  [[nodiscard]] double gamma_for(std::size_t d) const;
  [[nodiscard]] double alpha_for(std::size_t d) const;
  [[nodiscard]] double beta_for(std::size_t d) const;
  [[nodiscard]] double decision_gamma_for(std::size_t d) const;

  // Throws InvalidArgument unless every factor is >= 1 (boost_c > 0).
  void validate() const;
};

nlohmann::json to_json(const AlgorithmConstants& c, std::size_t d);

// max(1, ceil(log2 k)); 1 for k <= 2.
std::size_t log_k(std::size_t k);

// ceil(factor * x), saturating; at least 1.
std::uint64_t scaled(double factor, double x);

enum class Answer { Found, NotExists, Yes, No };
std::string_view to_string(Answer a) noexcept;

struct Witness {
  enum class Kind { None, Vertices, Edges, Partition };
  Kind kind = Kind::None;
  VertexSet vertices;
  std::vector<Hyperedge> edges;
  Partition part;
};

// One coloring and the query batch it drove.
struct RoundRecord {
  enum class Mode { Sample, Quotient };
  Mode mode;
  std::size_t arity;
  HashColoring coloring;
  std::uint64_t queries;
};

struct AlgorithmResult {
  std::string algorithm;
  Answer answer = Answer::NotExists;
  Witness witness;
  // Packing / cover / cut size behind the answer; yes-votes for majority rules.
  std::size_t value = 0;
  QueryStats stats;
  std::size_t rounds_used = 0;
  AlgorithmConstants constants;
  std::vector<RoundRecord> rounds;
};

struct RunOptions {
  AlgorithmConstants constants;
  std::uint64_t seed = 0;
  SolverLimits limits;
};

AlgorithmResult packing(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult packing_deterministic(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult vc_promised(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult vertex_cover(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult matching_promised(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult vc_decision(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult hs_promised(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult hitting_set(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult hs_decision(OracleSession& s, std::size_t k, const RunOptions& opt);
AlgorithmResult cut(OracleSession& s, std::size_t t, std::size_t k, const RunOptions& opt);
AlgorithmResult cut_decision(OracleSession& s, std::size_t t, std::size_t k, const RunOptions& opt);
AlgorithmResult cut_deterministic(OracleSession& s, std::size_t t, std::size_t k, const RunOptions& opt);
AlgorithmResult cut_decision_deterministic(OracleSession& s, std::size_t t, std::size_t k,
                                           const RunOptions& opt);

struct AlgorithmInfo {
  std::string_view name;
  bool needs_graph;  // d == 2 only
  bool uses_t;
  bool decision;     // Yes / No answers
};

const std::vector<AlgorithmInfo>& algorithm_catalog();
const AlgorithmInfo& algorithm_info(std::string_view name);  // throws InvalidArgument

// Dispatch by catalog name; t is ignored unless the algorithm uses it.
AlgorithmResult run_algorithm(std::string_view name, OracleSession& s, std::size_t k, std::size_t t,
                              const RunOptions& opt);

// Sum over rounds of C(q_r, arity), recomputed from the recorded colorings.
QueryStats recount_queries(const std::vector<RoundRecord>& rounds);

}  // namespace querylab
