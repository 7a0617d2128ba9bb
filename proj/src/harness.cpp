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

#include "querylab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "querylab/errors.hpp"
#include "querylab/solvers.hpp"
#include "querylab/sunflower.hpp"

namespace querylab {

// ---------------------------------------------------------------------------
// CSV

std::string to_csv_row(const TrialReport& r) {
  std::ostringstream out;
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
  out << r.algo << ',' << r.n << ',' << r.d << ',' << r.k << ',' << r.t << ',' << r.seed << ','
      << r.queries.bis << ',' << r.queries.bise << ',' << r.queries.gpis << ',' << r.queries.gpise << ','
      << r.answer << ',' << r.truth << ',' << r.success << ',' << r.witness_valid << ',' << elapsed;
  return out.str();
}

TrialReport parse_csv_row(std::string_view line) {
  std::vector<std::string> f;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  f.push_back(cur);
  if (f.size() != 15) throw InvalidArgument("CSV row has " + std::to_string(f.size()) + " fields, expected 15");
  auto num = [](const std::string& s) -> std::uint64_t {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw InvalidArgument("malformed CSV number '" + s + "'");
    return v;
  };
  TrialReport r;
  try {
    r.algo = f[0];
    r.n = num(f[1]);
    r.d = num(f[2]);
    r.k = num(f[3]);
    r.t = num(f[4]);
    r.seed = num(f[5]);
    r.queries = {num(f[6]), num(f[7]), num(f[8]), num(f[9])};
    r.answer = f[10];
    r.truth = f[11];
    r.success = f[12];
    r.witness_valid = f[13];
    r.elapsed_ms = std::stod(f[14]);
  } catch (const std::logic_error& e) {
    throw InvalidArgument(std::string("malformed CSV row: ") + e.what());
  }
  return r;
}

void write_csv(std::ostream& out, const std::vector<TrialReport>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << to_csv_row(r) << '\n';
}

std::vector<TrialReport> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw InvalidArgument("unexpected CSV header");
  std::vector<TrialReport> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(parse_csv_row(line));
  }
  return rows;
}

nlohmann::json to_json(const TrialReport& r) {
  return {{"algo", r.algo},
          {"n", r.n},
          {"d", r.d},
          {"k", r.k},
          {"t", r.t},
          {"seed", r.seed},
          {"queries", {{"bis", r.queries.bis}, {"bise", r.queries.bise}, {"gpis", r.queries.gpis},
                       {"gpise", r.queries.gpise}}},
          {"answer", r.answer},
          {"truth", r.truth},
          {"success", r.success},
          {"witness_valid", r.witness_valid},
          {"elapsed_ms", r.elapsed_ms}};
}

// ---------------------------------------------------------------------------
// Trials

namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

struct Grade {
  std::string truth;
  std::string success;
  std::string witness_valid;
};

Grade grade(const Hypergraph& hidden, const TrialSpec& spec, const AlgorithmResult& res) {
  const std::string& a = spec.algo;
  const std::size_t k = spec.k;
  const auto& w = res.witness;
  Grade g{"", "false", "na"};
  const bool positive = res.answer == Answer::Found || res.answer == Answer::Yes;

  if (a == "packing" || a == "packing-deterministic") {
    const bool truth = max_set_packing(hidden, spec.limits).size() >= k;
    g.truth = truth ? "found" : "not_exists";
    bool valid = true;
    if (res.answer == Answer::Found) {
      valid = is_packing(hidden, w.edges) && w.edges.size() >= k;
      g.witness_valid = flag(valid);
    }
    g.success = flag(positive == truth && valid);
  } else if (a == "matching-promised") {
    const auto best = matching_number(hidden.n(), hidden.edges());
    g.truth = "found";
    const bool valid = is_packing(hidden, w.edges);
    g.witness_valid = flag(valid);
    g.success = flag(valid && w.edges.size() == best);
  } else if (a == "vc-promised" || a == "hs-promised") {
    g.truth = "found";
    const bool covers = is_hitting_set(hidden, w.vertices);
    g.witness_valid = flag(covers);
    g.success = flag(covers && w.vertices.size() == min_hitting_set(hidden, spec.limits).size());
  } else if (a == "vertex-cover" || a == "hitting-set") {
    const auto truth_set = hitting_set_at_most(hidden, k, spec.limits);
    g.truth = truth_set ? "found" : "not_exists";
    bool valid = true;
    if (res.answer == Answer::Found) {
      valid = is_hitting_set(hidden, w.vertices) &&
              w.vertices.size() == min_hitting_set(hidden, spec.limits).size();
      g.witness_valid = flag(is_hitting_set(hidden, w.vertices));
    }
    g.success = flag(positive == truth_set.has_value() && valid);
  } else if (a == "vc-decision" || a == "hs-decision") {
    const bool truth = hitting_set_at_most(hidden, k, spec.limits).has_value();
    g.truth = truth ? "yes" : "no";
    g.success = flag(positive == truth);
  } else {
    const bool decision = algorithm_info(a).decision;
    const bool truth = max_t_cut(hidden, spec.t, spec.limits).size >= k;
    g.truth = decision ? (truth ? "yes" : "no") : (truth ? "found" : "not_exists");
    bool valid = true;
    if (positive) {
      valid = w.part.size() == hidden.n() && cut_size(hidden, w.part) >= k;
      g.witness_valid = flag(valid);
    }
    g.success = flag(positive == truth && valid);
  }
  return g;
}

}  // namespace

TrialOutcome execute_trial(const Hypergraph& hidden, const TrialSpec& spec) {
  const auto& info = algorithm_info(spec.algo);
  if (info.needs_graph && hidden.d() != 2) {
    throw InvalidArgument("arity mismatch: " + spec.algo + " needs d = 2, instance has d = " +
                          std::to_string(hidden.d()));
  }
  TrialOutcome out;
  auto& r = out.report;
  r.algo = spec.algo;
  r.n = hidden.n();
  r.d = hidden.d();
  r.k = spec.k;
  r.t = info.uses_t ? spec.t : 0;
  r.seed = spec.seed;

  OracleSession session(hidden, spec.policy, derive_seed(spec.seed, "policy"));
  session.set_query_log(spec.query_log);
  const RunOptions opt{spec.constants, derive_seed(spec.seed, "algorithm"), spec.limits};
  const auto start = std::chrono::steady_clock::now();
  try {
    out.result = run_algorithm(spec.algo, session, spec.k, spec.t, opt);
  } catch (const BudgetExceeded&) {
    r.answer = "budget_exceeded";
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.queries = session.stats();
  if (!out.result) {
    r.truth = "na";
    r.success = "na";
    r.witness_valid = "na";
    return out;
  }
  r.answer = std::string(to_string(out.result->answer));
  try {
    const auto g = grade(hidden, spec, *out.result);
    r.truth = g.truth;
    r.success = g.success;
    r.witness_valid = g.witness_valid;
  } catch (const BudgetExceeded&) {
    r.truth = "budget_exceeded";
    r.success = "na";
    r.witness_valid = "na";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

template <typename T>
std::vector<T> grid(const nlohmann::json& j, const char* key, std::vector<T> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_array()) return v.get<std::vector<T>>();
  return {v.get<T>()};
}

std::string default_generator(std::string_view algo) {
  if (algo.starts_with("packing")) return "planted-packing";
  if (algo.starts_with("cut")) return "planted-cut";
  return "planted-hs";
}

EdgeSelectionPolicy parse_policy(const std::string& s) {
  if (s == "lex") return EdgeSelectionPolicy::Lexicographic;
  if (s == "random") return EdgeSelectionPolicy::UniformRandom;
  throw InvalidArgument("unknown policy '" + s + "' (expected lex or random)");
}

}  // namespace

void apply_overrides(AlgorithmConstants& c, const nlohmann::json& o) {
  for (const auto& [key, value] : o.items()) {
    const double v = value.get<double>();
    if (key == "vc_colors_factor") c.vc_colors_factor = v;
    else if (key == "vc_rounds_factor") c.vc_rounds_factor = v;
    else if (key == "vc_decision_colors") c.vc_decision_colors = v;
    else if (key == "match_colors_factor") c.match_colors_factor = v;
    else if (key == "match_rounds_factor") c.match_rounds_factor = v;
    else if (key == "pack_gamma") c.pack_gamma = v;
    else if (key == "hs_alpha") c.hs_alpha = v;
    else if (key == "hs_beta") c.hs_beta = v;
    else if (key == "hs_decision_gamma") c.hs_decision_gamma = v;
    else if (key == "cut_colors") c.cut_colors = v;
    else if (key == "boost_c") c.boost_c = v;
    else if (key == "colors_factor") c.colors_factor = v;
    else throw InvalidArgument("unknown constant override '" + key + "'");
  }
  c.validate();
}

SweepConfig parse_sweep_config(const nlohmann::json& j) {
  SweepConfig c;
  try {
    c.algorithms = grid<std::string>(j, "algorithms", {});
    c.generator = j.value("generator", std::string{});
    c.n = grid<std::size_t>(j, "n", {});
    c.d = grid<std::size_t>(j, "d", {2});
    c.k = grid<std::size_t>(j, "k", {});
    c.t = grid<std::size_t>(j, "t", {2});
    c.m = grid<std::size_t>(j, "m", {0});
    c.k_offsets = grid<long long>(j, "k_offsets", {0});
    c.p = j.value("p", 0.1);
    c.trials = j.value("trials", std::size_t{1});
    c.master_seed = j.value("master_seed", std::uint64_t{0});
    c.policy = parse_policy(j.value("policy", std::string("lex")));
    if (j.contains("overrides")) apply_overrides(c.constants, j.at("overrides"));
    if (j.contains("budget_ms")) c.limits.time_budget = std::chrono::milliseconds(j.at("budget_ms").get<long long>());
    if (j.contains("max_branch_nodes")) c.limits.max_branch_nodes = j.at("max_branch_nodes").get<std::uint64_t>();
    if (j.contains("outputs")) {
      c.csv_path = j.at("outputs").value("csv", std::string{});
      c.summary_path = j.at("outputs").value("summary", std::string{});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed sweep config: ") + e.what());
  }
  if (c.algorithms.empty()) throw InvalidArgument("sweep config needs at least one algorithm");
  for (const auto& a : c.algorithms) algorithm_info(a);
  if (c.n.empty() || c.d.empty() || c.k.empty() || c.t.empty() || c.m.empty() || c.k_offsets.empty()) {
    throw InvalidArgument("sweep grids must be non-empty");
  }
  if (c.trials == 0) throw InvalidArgument("sweep config needs trials >= 1");
  return c;
}

std::string SweepCell::key() const {
  std::ostringstream out;
  out << algo << "|" << generator << "|n=" << n << "|d=" << d << "|k=" << k << "|t=" << t << "|m=" << m
      << "|offset=" << k_offset;
  return out.str();
}

std::vector<SweepCell> expand_cells(const SweepConfig& cfg) {
  std::vector<SweepCell> cells;
  for (const auto& algo : cfg.algorithms) {
    const auto& info = algorithm_info(algo);
    const std::string gen = cfg.generator.empty() ? default_generator(algo) : cfg.generator;
    const auto ds = info.needs_graph || gen == "planted-cut" ? std::vector<std::size_t>{2} : cfg.d;
    const auto ts = info.uses_t || gen == "planted-cut" ? cfg.t : std::vector<std::size_t>{0};
    for (auto n : cfg.n)
      for (auto d : ds)
        for (auto k : cfg.k)
          for (auto t : ts)
            for (auto m : cfg.m)
              for (auto off : cfg.k_offsets) cells.push_back({algo, gen, n, d, k, t, m, off});
  }
  return cells;
}

PlantedInstance make_instance(const SweepCell& cell, double p, std::uint64_t seed) {
  if (cell.generator == "planted-hs") return gen_planted_hitting_set(cell.n, cell.d, cell.k, cell.m, seed);
  if (cell.generator == "planted-packing") return gen_planted_packing(cell.n, cell.d, cell.k, cell.m, seed);
  if (cell.generator == "planted-cut") return gen_planted_cut(cell.n, std::max<std::size_t>(cell.t, 2), cell.k, seed, cell.m);
  if (cell.generator == "gnp") {
    return {gen_gnp(cell.n, cell.d, p, seed),
            {PlantedTruth::Kind::HittingSet, cell.k, decltype(PlantedTruth::witness)(std::in_place_index<0>)}};
  }
  throw InvalidArgument("unknown generator '" + cell.generator + "'");
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, std::size_t trial) {
  return derive_seed(derive_seed(master, static_cast<std::uint64_t>(cell)), static_cast<std::uint64_t>(trial));
}

namespace {

TrialReport run_job(const SweepConfig& cfg, const SweepCell& cell, std::size_t cell_index, std::size_t trial) {
  const auto seed = trial_seed(cfg.master_seed, cell_index, trial);
  const long long query_k = static_cast<long long>(cell.k) + cell.k_offset;
  TrialReport failed;
  failed.algo = cell.algo;
  failed.n = cell.n;
  failed.d = cell.d;
  failed.k = query_k < 0 ? 0 : static_cast<std::size_t>(query_k);
  failed.t = cell.t;
  failed.seed = seed;
  failed.answer = "error";
  failed.truth = failed.success = failed.witness_valid = "na";
  try {
    if (query_k < 0) throw InvalidArgument("negative query k");
    const auto inst = make_instance(cell, cfg.p, derive_seed(seed, "instance"));
    TrialSpec spec;
    spec.algo = cell.algo;
    spec.k = static_cast<std::size_t>(query_k);
    spec.t = std::max<std::size_t>(cell.t, 2);
    spec.seed = seed;
    spec.policy = cfg.policy;
    spec.constants = cfg.constants;
    spec.limits = cfg.limits;
    return execute_trial(inst.graph, spec).report;
  } catch (const std::exception&) {
    return failed;
  }
}

}  // namespace

std::vector<TrialReport> run_sweep_serial(const SweepConfig& cfg) {
  const auto cells = expand_cells(cfg);
  std::vector<TrialReport> rows;
  rows.reserve(cells.size() * cfg.trials);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t t = 0; t < cfg.trials; ++t) rows.push_back(run_job(cfg, cells[c], c, t));
  return rows;
}

std::vector<TrialReport> run_sweep(const SweepConfig& cfg) {
  const auto cells = expand_cells(cfg);
  const auto jobs = static_cast<std::int64_t>(cells.size() * cfg.trials);
  std::vector<TrialReport> rows(static_cast<std::size_t>(jobs));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t j = 0; j < jobs; ++j) {
    const auto c = static_cast<std::size_t>(j) / cfg.trials;
    const auto t = static_cast<std::size_t>(j) % cfg.trials;
    rows[static_cast<std::size_t>(j)] = run_job(cfg, cells[c], c, t);
  }
  return rows;
}

nlohmann::json predicted_exponent(std::string_view algo, std::size_t d) {
  const auto dd = static_cast<double>(d);
  if (algo == "packing") return 2 * dd;
  if (algo == "matching-promised" || algo == "vc-promised") return 2;
  if (algo == "vertex-cover") return 4;
  if (algo == "vc-decision") return 8;
  if (algo == "hs-promised") return dd;
  if (algo == "hitting-set") return 2 * dd;
  if (algo == "hs-decision") return 2 * dd * dd;
  if (algo == "cut" || algo == "cut-decision") return 4;
  return nullptr;
}

nlohmann::json summarize(const SweepConfig& cfg, const std::vector<TrialReport>& rows) {
  const auto cells = expand_cells(cfg);
  nlohmann::json out = nlohmann::json::object();
  nlohmann::json cell_json = nlohmann::json::object();
  // (group key without k) -> (k, mean total queries)
  std::map<std::string, std::vector<std::pair<double, double>>> groups;
  std::map<std::string, std::pair<std::string, std::size_t>> group_algo;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& cell = cells[c];
    std::size_t ok = 0, graded = 0, budget = 0, errors = 0;
    double sums[5] = {0, 0, 0, 0, 0};
    std::uint64_t max_total = 0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const auto& r = rows.at(c * cfg.trials + t);
      if (r.answer == "error") ++errors;
      if (r.answer == "budget_exceeded" || r.truth == "budget_exceeded") ++budget;
      if (r.success != "na") {
        ++graded;
        ok += r.success == "true";
      }
      sums[0] += static_cast<double>(r.queries.bis);
      sums[1] += static_cast<double>(r.queries.bise);
      sums[2] += static_cast<double>(r.queries.gpis);
      sums[3] += static_cast<double>(r.queries.gpise);
      sums[4] += static_cast<double>(r.queries.total());
      max_total = std::max(max_total, r.queries.total());
    }
    const double trials = static_cast<double>(cfg.trials);
    nlohmann::json cj{{"algo", cell.algo},
                      {"generator", cell.generator},
                      {"n", cell.n},
                      {"d", cell.d},
                      {"k", cell.k},
                      {"t", cell.t},
                      {"m", cell.m},
                      {"k_offset", cell.k_offset},
                      {"trials", cfg.trials},
                      {"graded", graded},
                      {"successes", ok},
                      {"budget_exceeded", budget},
                      {"errors", errors},
                      {"status", errors + budget == 0 ? "complete" : "partial"},
                      {"mean_queries", {{"bis", sums[0] / trials}, {"bise", sums[1] / trials},
                                        {"gpis", sums[2] / trials}, {"gpise", sums[3] / trials},
                                        {"total", sums[4] / trials}}},
                      {"max_total_queries", max_total}};
    cj["success_rate"] = graded ? nlohmann::json(static_cast<double>(ok) / static_cast<double>(graded))
                                : nlohmann::json(nullptr);
    cell_json[cell.key()] = cj;
    std::ostringstream g;
    g << cell.algo << "|" << cell.generator << "|n=" << cell.n << "|d=" << cell.d << "|t=" << cell.t
      << "|m=" << cell.m << "|offset=" << cell.k_offset;
    const double mean = sums[4] / trials;
    if (cell.k > 0 && mean > 0) groups[g.str()].emplace_back(static_cast<double>(cell.k), mean);
    group_algo[g.str()] = {cell.algo, cell.d};
  }
  nlohmann::json fits = nlohmann::json::object();
  for (const auto& [key, pts] : groups) {
    nlohmann::json f{{"points", pts.size()}, {"predicted_exponent", predicted_exponent(group_algo[key].first, group_algo[key].second)}};
    std::vector<double> xs, ys;
    for (const auto& [k, q] : pts) {
      xs.push_back(std::log(k));
      ys.push_back(std::log(q));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    f["fitted_exponent"] = sxx > 0 ? nlohmann::json(sxy / sxx) : nlohmann::json(nullptr);
    fits[key] = f;
  }
  out["cells"] = cell_json;
  out["exponent_fits"] = fits;
  out["master_seed"] = cfg.master_seed;
  out["policy"] = std::string(to_string(cfg.policy));
  return out;
}

// ---------------------------------------------------------------------------
// verify

namespace {

template <typename F>
nlohmann::json guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {{"error", e.what()}};
  }
}

std::uint64_t factorial(std::size_t x) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= x; ++i) f *= i;
  return f;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

nlohmann::json bound_check(std::size_t value, std::uint64_t bound, bool hypothesis) {
  nlohmann::json j{{"value", value}, {"bound", bound}};
  j["status"] = !hypothesis ? "hypothesis not met" : (value <= bound ? "pass" : "fail");
  return j;
}

}  // namespace

nlohmann::json verify_report(const Hypergraph& h, std::size_t k, const SolverLimits& limits) {
  const std::size_t d = h.d();
  nlohmann::json out{{"n", h.n()}, {"d", d}, {"m", h.num_edges()}, {"k", k}};
  nlohmann::json optima = nlohmann::json::object();
  optima["hitting_set"] = guarded([&] {
    const auto s = min_hitting_set(h, limits);
    return nlohmann::json{{"size", s.size()}, {"set", s}};
  });
  optima["packing"] = guarded([&] {
    const auto p = max_set_packing(h, limits);
    return nlohmann::json{{"size", p.size()}, {"edges", p}};
  });
  if (d == 2) {
    optima["vertex_cover"] = optima["hitting_set"];
    optima["matching"] = optima["packing"];
    optima["max_cut_t2"] = guarded([&] {
      const auto c = max_t_cut(h, 2, limits);
      return nlohmann::json{{"size", c.size}, {"part", c.part}};
    });
  }
  out["optima"] = optima;

  bool hypothesis = false;
  nlohmann::json hyp = guarded([&] {
    hypothesis = hitting_set_at_most(h, k, limits).has_value();
    return nlohmann::json{{"condition", "minimum hitting set <= k"}, {"met", hypothesis}};
  });
  out["hypothesis"] = hyp;

  nlohmann::json checks = nlohmann::json::object();
  out["core_report"] = guarded([&] {
    const auto report = classify_cores(h, k, limits);
    checks["small_edges_bound"] =
        bound_check(report.small_edges.size(), factorial(d) * ipow(10 * d * k, d), hypothesis);
    checks["c_prime_bound"] = bound_check(report.c_prime.size(), factorial(d - 1) * ipow(k, d - 1), hypothesis);
    return to_json(report);
  });
  if (d == 2) {
    const auto prof = degree_profile(h, k);
    checks["high_degree_bound"] = bound_check(prof.high.size(), k, hypothesis);
    checks["low_edges_bound"] = bound_check(prof.low_edges.size(), 20 * k * k, hypothesis);
    out["degree_profile"] = {{"threshold", prof.threshold}, {"high", prof.high}, {"low_edges", prof.low_edges.size()}};
  }
  out["checks"] = checks;
  out["representative_family"] = guarded([&] {
    const auto rep = representative_family(h, k, limits);
    const auto bound = binomial(k + d, d);
    return nlohmann::json{{"size", rep.size()},
                          {"bound", bound},
                          {"status", rep.size() <= bound ? "pass" : "fail"},
                          {"edges", rep}};
  });
  return out;
}

}  // namespace querylab
