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

#include <doctest.h>

#include <sstream>

#include "querylab/errors.hpp"
#include "querylab/harness.hpp"

using namespace querylab;

namespace {

std::vector<TrialReport> without_time(std::vector<TrialReport> rows) {
  for (auto& r : rows) r.elapsed_ms = 0;
  return rows;
}

SweepConfig small_sweep() {
  return parse_sweep_config(nlohmann::json::parse(R"({
    "algorithms": ["packing", "vc-promised", "hs-decision", "cut"],
    "n": [16], "d": [2, 3], "k": [1, 2], "m": [12], "trials": 3, "master_seed": 5
  })"));
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("csv round trip") {
  TrialReport r{"cut", 10, 2, 3, 2, 77, {1, 2, 3, 4}, "found", "found", "true", "true", 1.25};
  CHECK(parse_csv_row(to_csv_row(r)) == r);
  std::stringstream io;
  write_csv(io, {r, r});
  const auto back = read_csv(io);
  REQUIRE(back.size() == 2);
  CHECK(back[1] == r);
  CHECK_THROWS_AS(parse_csv_row("a,b"), InvalidArgument);
  std::stringstream bad("nope\n");
  CHECK_THROWS_AS(read_csv(bad), InvalidArgument);
}

TEST_CASE("single trial") {
  const auto inst = gen_planted_hitting_set(20, 2, 2, 30, 1);
  TrialSpec spec;
  spec.algo = "hitting-set";
  spec.k = 2;
  spec.seed = 3;
  const auto a = execute_trial(inst.graph, spec);
  CHECK(a.report.success == "true");
  CHECK(a.report.queries.total() > 0);
  const auto b = execute_trial(inst.graph, spec);
  auto ra = a.report, rb = b.report;
  ra.elapsed_ms = rb.elapsed_ms = 0;
  CHECK(ra == rb);

  spec.algo = "cut";
  CHECK_THROWS_AS(execute_trial(gen_gnp(8, 3, 0.2, 1), spec), InvalidArgument);

  spec.algo = "hitting-set";
  spec.limits = SolverLimits{5, std::chrono::milliseconds{0}};
  const auto c = execute_trial(gen_gnp(40, 3, 0.05, 2), spec);
  CHECK(c.report.success == "na");
}

TEST_CASE("sweep shape and determinism") {
  auto one = parse_sweep_config(nlohmann::json::parse(
      R"({"algorithms": ["packing"], "n": [12], "d": [2], "k": [2], "trials": 1})"));
  const auto rows = run_sweep(one);
  CHECK(rows.size() == 1);
  std::stringstream csv;
  write_csv(csv, rows);
  std::string line;
  int lines = 0;
  while (std::getline(csv, line)) ++lines;
  CHECK(lines == 2);

  const auto cfg = small_sweep();
  // Graph algorithms only run at d = 2.
  CHECK(expand_cells(cfg).size() == (2 + 2 * 2) * 2);
  const auto p1 = without_time(run_sweep(cfg));
  const auto p2 = without_time(run_sweep(cfg));
  const auto s = without_time(run_sweep_serial(cfg));
  CHECK(p1.size() == expand_cells(cfg).size() * 3);
  CHECK(p1 == p2);
  CHECK(p1 == s);
  const auto summary = summarize(cfg, p1);
  CHECK(summary.contains("cells"));
  CHECK(trial_seed(5, 0, 1) != trial_seed(5, 1, 0));
}

TEST_CASE("sweep config validation") {
  CHECK_THROWS_AS(parse_sweep_config(nlohmann::json::parse(R"({"algorithms": ["bogus"]})")), InvalidArgument);
  CHECK_THROWS_AS(parse_sweep_config(nlohmann::json::parse(R"({"algorithms": ["packing"], "trials": "x"})")),
                  InvalidArgument);
  AlgorithmConstants c;
  apply_overrides(c, nlohmann::json::parse(R"({"boost_c": 3, "pack_gamma": 7})"));
  CHECK(c.boost_c == 3);
  CHECK(c.gamma_for(5) == 7);
  CHECK_THROWS_AS(apply_overrides(c, nlohmann::json::parse(R"({"nope": 1})")), InvalidArgument);
}

TEST_CASE("verify report") {
  const auto empty = verify_report(Hypergraph(6, 2, {}), 2);
  CHECK(empty["optima"]["hitting_set"]["size"] == 0);
  CHECK(empty["optima"]["packing"]["size"] == 0);
  CHECK(empty["optima"]["max_cut_t2"]["size"] == 0);
  for (const auto& [name, check] : empty["checks"].items()) CHECK(check["status"] == "pass");

  const auto planted = gen_planted_hitting_set(14, 3, 2, 40, 4).graph;
  const auto r = verify_report(planted, 2);
  CHECK(r["hypothesis"]["met"] == true);
  CHECK(r["checks"]["small_edges_bound"]["status"] == "pass");
  CHECK(r["checks"]["c_prime_bound"]["status"] == "pass");
  CHECK(r["representative_family"]["status"] == "pass");

  std::vector<Hyperedge> dj{{0, 1}, {2, 3}, {4, 5}};
  const auto over = verify_report(Hypergraph(6, 2, dj), 2);
  CHECK(over["hypothesis"]["met"] == false);
  for (const auto& [name, check] : over["checks"].items()) CHECK(check["status"] == "hypothesis not met");
}

}  // TEST_SUITE
