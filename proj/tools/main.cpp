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

// querylab command-line driver: gen | run | sweep | verify.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "querylab/algorithms.hpp"
#include "querylab/errors.hpp"
#include "querylab/harness.hpp"
#include "querylab/hypergraph.hpp"

namespace {

using nlohmann::json;
using namespace querylab;

struct CommonFlags {
  std::uint64_t seed = 0;
  std::string policy = "lex";
  std::optional<double> boost_c, gamma, alpha, beta, colors_factor;
  long long budget_ms = 0;
  std::string log_queries;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "Base seed");
  cmd->add_option("--policy", f.policy, "Edge selection policy")->check(CLI::IsMember({"lex", "random"}));
  cmd->add_option("--boost-c", f.boost_c, "Repetition constant C (C log k rounds)");
  cmd->add_option("--gamma", f.gamma, "Packing and decision-hitting-set gamma");
  cmd->add_option("--alpha", f.alpha, "Promised hitting set alpha");
  cmd->add_option("--beta", f.beta, "Promised hitting set beta");
  cmd->add_option("--colors-factor", f.colors_factor, "Replace the leading color constant");
  cmd->add_option("--budget-ms", f.budget_ms, "Solver time budget in ms (0 = none)");
  cmd->add_option("--log-queries", f.log_queries, "Write one line per oracle call");
  cmd->add_option("-o,--out", f.out, "Output path");
}

void apply_common(const CommonFlags& f, AlgorithmConstants& c) {
  if (f.boost_c) c.boost_c = *f.boost_c;
  if (f.gamma) {
    c.pack_gamma = *f.gamma;
    c.hs_decision_gamma = *f.gamma;
  }
  if (f.alpha) c.hs_alpha = *f.alpha;
  if (f.beta) c.hs_beta = *f.beta;
  if (f.colors_factor) c.colors_factor = *f.colors_factor;
  c.validate();
}

EdgeSelectionPolicy policy_of(const std::string& s) {
  return s == "random" ? EdgeSelectionPolicy::UniformRandom : EdgeSelectionPolicy::Lexicographic;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

json truth_json(const PlantedInstance& inst, const std::string& kind, const json& params) {
  json w;
  std::visit([&](const auto& v) { w = v; }, inst.truth.witness);
  return {{"generator", kind}, {"params", params}, {"kind", std::string(to_string(inst.truth.kind))},
          {"k", inst.truth.k}, {"witness", w}};
}

// --- gen -------------------------------------------------------------------

struct GenFlags {
  std::string kind;
  std::size_t n = 0, d = 2, k = 1, m = 0, extra = 0, t = 2;
  double p = 0.1;
};

int cmd_gen(const GenFlags& g, const CommonFlags& f) {
  if (f.out.empty()) throw InvalidArgument("gen needs -o PATH");
  json params{{"n", g.n}, {"d", g.d}, {"seed", f.seed}};
  json sidecar;
  Hypergraph h(1, 2);
  if (g.kind == "gnp") {
    params["p"] = g.p;
    h = gen_gnp(g.n, g.d, g.p, f.seed);
    sidecar = {{"generator", g.kind}, {"params", params}, {"kind", nullptr}, {"k", nullptr}, {"witness", nullptr}};
  } else {
    PlantedInstance inst = [&] {
      params["k"] = g.k;
      if (g.kind == "planted-hs") {
        params["m"] = g.m;
        return gen_planted_hitting_set(g.n, g.d, g.k, g.m, f.seed);
      }
      if (g.kind == "planted-packing") {
        params["extra"] = g.extra;
        return gen_planted_packing(g.n, g.d, g.k, g.extra, f.seed);
      }
      params["t"] = g.t;
      params["extra"] = g.extra;
      params["d"] = 2;
      return gen_planted_cut(g.n, g.t, g.k, f.seed, g.extra);
    }();
    h = inst.graph;
    sidecar = truth_json(inst, g.kind, params);
  }
  write_hypergraph_file(f.out, h);
  emit(f.out + ".truth.json", sidecar.dump(2) + "\n");
  return 0;
}

// --- run -------------------------------------------------------------------

struct RunFlags {
  std::string algo, instance, csv;
  std::size_t k = 1, t = 2;
};

int cmd_run(const RunFlags& r, const CommonFlags& f) {
  const auto h = read_hypergraph_file(r.instance);
  TrialSpec spec;
  spec.algo = r.algo;
  spec.k = r.k;
  spec.t = r.t;
  spec.seed = f.seed;
  spec.policy = policy_of(f.policy);
  apply_common(f, spec.constants);
  spec.limits.time_budget = std::chrono::milliseconds(f.budget_ms);
  std::ofstream log;
  if (!f.log_queries.empty()) {
    log.open(f.log_queries, std::ios::binary);
    if (!log) throw std::runtime_error("cannot write " + f.log_queries);
    spec.query_log = &log;
  }
  const auto outcome = execute_trial(h, spec);
  json j = to_json(outcome.report);
  if (outcome.result) {
    const auto& res = *outcome.result;
    j["rounds"] = res.rounds_used;
    j["value"] = res.value;
    j["constants"] = to_json(res.constants, h.d());
    const auto& w = res.witness;
    if (w.kind == Witness::Kind::Vertices) j["witness"] = w.vertices;
    if (w.kind == Witness::Kind::Edges) j["witness"] = w.edges;
    if (w.kind == Witness::Kind::Partition) j["witness"] = w.part;
    const auto recount = recount_queries(res.rounds);
    j["recounted_queries"] = {{"bis", recount.bis}, {"bise", recount.bise}, {"gpis", recount.gpis},
                              {"gpise", recount.gpise}};
  }
  emit(f.out, j.dump(2) + "\n");
  if (!r.csv.empty()) {
    const bool fresh = !std::ifstream(r.csv).good();
    std::ofstream csv(r.csv, std::ios::app | std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + r.csv);
    if (fresh) csv << kCsvHeader << '\n';
    csv << to_csv_row(outcome.report) << '\n';
  }
  return 0;
}

// --- sweep -----------------------------------------------------------------

struct SweepFlags {
  std::string config, summary;
  bool serial = false;
};

int cmd_sweep(const SweepFlags& s, const CommonFlags& f, const CLI::App& cmd) {
  std::ifstream in(s.config);
  if (!in) throw InvalidArgument("cannot read " + s.config);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  auto cfg = parse_sweep_config(j);
  if (cmd.count("--seed")) cfg.master_seed = f.seed;
  if (cmd.count("--policy")) cfg.policy = policy_of(f.policy);
  if (cmd.count("--budget-ms")) cfg.limits.time_budget = std::chrono::milliseconds(f.budget_ms);
  apply_common(f, cfg.constants);
  if (!f.out.empty()) cfg.csv_path = f.out;
  if (!s.summary.empty()) cfg.summary_path = s.summary;

  const auto rows = s.serial ? run_sweep_serial(cfg) : run_sweep(cfg);
  std::ostringstream csv;
  write_csv(csv, rows);
  emit(cfg.csv_path, csv.str());
  const auto summary = summarize(cfg, rows).dump(2) + "\n";
  if (!cfg.summary_path.empty()) {
    emit(cfg.summary_path, summary);
  } else if (!cfg.csv_path.empty()) {
    emit(cfg.csv_path + ".summary.json", summary);
  }
  return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyFlags {
  std::string instance;
  std::size_t k = 1;
};

int cmd_verify(const VerifyFlags& v, const CommonFlags& f) {
  const auto h = read_hypergraph_file(v.instance);
  SolverLimits limits;
  limits.time_budget = std::chrono::milliseconds(f.budget_ms);
  emit(f.out, verify_report(h, v.k, limits).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"querylab: query-complexity laboratory for hypergraph oracles"};
  app.require_subcommand(1);

  CommonFlags gen_common, run_common, sweep_common, verify_common;

  GenFlags gen;
  auto* g = app.add_subcommand("gen", "Generate an instance file and a truth sidecar");
  g->add_option("kind", gen.kind, "Generator")
      ->required()
      ->check(CLI::IsMember({"gnp", "planted-hs", "planted-packing", "planted-cut"}));
  g->add_option("--n", gen.n, "Vertices")->required();
  g->add_option("--d", gen.d, "Edge size");
  g->add_option("--k", gen.k, "Planted parameter");
  g->add_option("--m", gen.m, "Edge count (planted-hs)");
  g->add_option("--extra", gen.extra, "Extra edges (planted-packing, planted-cut)");
  g->add_option("--t", gen.t, "Parts (planted-cut)");
  g->add_option("--p", gen.p, "Edge probability (gnp)");
  add_common(g, gen_common);

  RunFlags run;
  auto* r = app.add_subcommand("run", "Run one graded trial");
  r->add_option("algo", run.algo, "Algorithm")->required();
  r->add_option("instance", run.instance, "Instance file")->required()->check(CLI::ExistingFile);
  r->add_option("--k", run.k, "Parameter k");
  r->add_option("--t", run.t, "Parts for cut algorithms");
  r->add_option("--csv", run.csv, "Append the report row to this CSV");
  add_common(r, run_common);

  SweepFlags sweep;
  auto* s = app.add_subcommand("sweep", "Run a configured grid of trials");
  s->add_option("config", sweep.config, "Sweep config JSON")->required()->check(CLI::ExistingFile);
  s->add_option("--summary", sweep.summary, "Summary JSON path");
  s->add_flag("--serial", sweep.serial, "Run trials on one thread");
  add_common(s, sweep_common);

  VerifyFlags verify;
  auto* v = app.add_subcommand("verify", "Exact optima and structural checks");
  v->add_option("instance", verify.instance, "Instance file")->required()->check(CLI::ExistingFile);
  v->add_option("--k", verify.k, "Parameter k");
  add_common(v, verify_common);

  CLI11_PARSE(app, argc, argv);
  try {
    if (g->parsed()) return cmd_gen(gen, gen_common);
    if (r->parsed()) return cmd_run(run, run_common);
    if (s->parsed()) return cmd_sweep(sweep, sweep_common, *s);
    return cmd_verify(verify, verify_common);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
