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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Ground truth comes from the exact solvers and the brute-force
// oracles in oracles.hpp.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "querylab/algorithms.hpp"
#include "querylab/harness.hpp"
#include "querylab/sampler.hpp"
#include "querylab/solvers.hpp"
#include "querylab/sunflower.hpp"

using namespace querylab;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool ok = v.pass && in_time;
  failures += !ok;
  std::printf("%s criterion %d: %s | %s | %.1fs (limit %.0fs)\n", ok ? "PASS" : "FAIL", id, title,
              v.detail.c_str(), secs, limit_s);
  std::fflush(stdout);
}

std::vector<VertexSet> random_parts(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<VertexSet> parts(d);
  for (;;) {
    for (auto& p : parts) p.clear();
    for (VertexId v = 0; v < n; ++v) {
      const auto slot = rng.uniform(d + 1);
      if (slot < d) parts[slot].push_back(v);
    }
    bool ok = true;
    for (const auto& p : parts) ok = ok && !p.empty();
    if (ok) return parts;
  }
}

// ---------------------------------------------------------------------------
// 1

Verdict oracle_correctness() {
  Rng rng(101);
  std::size_t queries = 0, agree = 0, witnesses_ok = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const std::size_t d = 2 + inst % 2;
    const std::size_t n = 10 + rng.uniform(16);
    const double p = d == 2 ? 0.05 + 0.2 * rng.uniform01() : 0.005 + 0.02 * rng.uniform01();
    const auto h = gen_gnp(n, d, p, rng.next());
    OracleSession s(h);
    for (int q = 0; q < 20; ++q) {
      const auto parts = random_parts(n, d, rng);
      const bool expect = bf::cross_product_exists(h, parts);
      const bool got = d == 2 ? s.bis(parts[0], parts[1]) : s.gpis(parts);
      const auto e = d == 2 ? s.bise(parts[0], parts[1]) : s.gpise(parts);
      ++queries;
      agree += got == expect && e.has_value() == expect;
      witnesses_ok += !e || (h.contains(*e) && bf::qualifies(*e, parts));
    }
  }
  return {agree == queries && witnesses_ok == queries,
          std::to_string(agree) + "/" + std::to_string(queries) + " agree, " + std::to_string(witnesses_ok) +
              " valid witnesses"};
}

// ---------------------------------------------------------------------------
// 2

Verdict solver_equivalence() {
  std::size_t checks = 0, ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t d = 2 + seed % 2;
    const std::size_t n = 8 + seed % 7;
    const auto h = gen_gnp(n, d, d == 2 ? 0.3 : 0.05, 7000 + seed);
    auto check = [&](bool b) { ++checks; ok += b; };
    const auto hs = min_hitting_set(h);
    check(is_hitting_set(h, hs) && hs.size() == bf::min_hitting_set(h));
    const auto pk = max_set_packing(h);
    check(is_packing(h, pk) && pk.size() == bf::max_packing(h));
    if (d == 2) {
      const auto vc = min_vertex_cover(h);
      check(is_hitting_set(h, vc) && vc.size() == bf::min_hitting_set(h));
      const auto m = max_matching(h);
      check(is_packing(h, m) && m.size() == bf::max_packing(h));
      const auto c = max_t_cut(h, 2);
      check(cut_size(h, c.part) == c.size && c.size == bf::max_cut(h, 2));
    }
  }
  return {ok == checks, std::to_string(ok) + "/" + std::to_string(checks) + " optima match"};
}

// ---------------------------------------------------------------------------
// 3, 4, 5

struct Accounting {
  std::size_t trials = 0;
  std::size_t exact = 0;
  std::size_t bounded = 0;
} accounting;

void account(const TrialOutcome& out) {
  ++accounting.trials;
  if (!out.result) return;
  const auto& r = *out.result;
  accounting.exact += recount_queries(r.rounds) == r.stats && r.stats == out.report.queries;
  bool within = true;
  for (const auto& round : r.rounds)
    within = within && round.coloring.num_classes() <= std::min<std::uint64_t>(round.coloring.b(), round.coloring.n());
  accounting.bounded += within;
}

struct Setup {
  std::string label;
  std::string algo;
  std::function<PlantedInstance(std::uint64_t)> make;
  // Query k for a trial; odd trials probe the negative side where meaningful.
  std::function<std::size_t(const Hypergraph&, std::size_t trial)> k;
  std::size_t t = 2;
  AlgorithmConstants constants{};
};

std::size_t fixed_k(std::size_t k, const Hypergraph&, std::size_t) { return k; }

// Even trials: k; odd trials: exact minimum hitting set minus one (>= min_k).
std::function<std::size_t(const Hypergraph&, std::size_t)> cover_k(std::size_t k, std::size_t min_k) {
  return [k, min_k](const Hypergraph& h, std::size_t trial) {
    if (trial % 2 == 0) return k;
    const auto opt = min_hitting_set(h).size();
    return std::max(min_k, opt == 0 ? 0 : opt - 1);
  };
}

std::function<std::size_t(const Hypergraph&, std::size_t)> packing_k(std::size_t k) {
  return [k](const Hypergraph& h, std::size_t trial) {
    return trial % 2 == 0 ? k : max_set_packing(h).size() + 1;
  };
}

std::function<std::size_t(const Hypergraph&, std::size_t)> cut_k(std::size_t k, std::size_t t) {
  return [k, t](const Hypergraph& h, std::size_t trial) {
    return trial % 2 == 0 ? k : max_t_cut(h, t).size + 1;
  };
}

std::function<PlantedInstance(std::uint64_t)> planted_hs(std::size_t n, std::size_t d, std::size_t k,
                                                         std::size_t m) {
  return [=](std::uint64_t seed) { return gen_planted_hitting_set(n, d, k, m, seed); };
}

std::string run_setup(const Setup& s, std::size_t& passed_configs, std::size_t& total_configs) {
  std::size_t ok = 0;
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::uint64_t seed = derive_seed(derive_seed(2026, s.label), trial);
    const auto inst = s.make(derive_seed(seed, "instance"));
    TrialSpec spec;
    spec.algo = s.algo;
    spec.k = s.k(inst.graph, trial);
    spec.t = s.t;
    spec.seed = seed;
    spec.constants = s.constants;
    const auto out = execute_trial(inst.graph, spec);
    ok += out.report.success == "true";
    account(out);
  }
  ++total_configs;
  passed_configs += ok >= 95;
  return s.label + "=" + std::to_string(ok);
}

Verdict randomized_success() {
  AlgorithmConstants small_gamma;
  small_gamma.hs_decision_gamma = 900;
  using std::placeholders::_1;
  using std::placeholders::_2;
  const std::vector<Setup> setups{
      {"packing/d2", "packing",
       [](std::uint64_t seed) { return gen_planted_packing(20, 2, 2, 8, seed); }, packing_k(2)},
      {"packing/d3", "packing",
       [](std::uint64_t seed) { return gen_planted_packing(30, 3, 2, 10, seed); }, packing_k(2)},
      {"matching-promised", "matching-promised", planted_hs(60, 2, 2, 80), std::bind(fixed_k, 2, _1, _2)},
      {"vc-promised", "vc-promised", planted_hs(60, 2, 2, 80), std::bind(fixed_k, 2, _1, _2)},
      {"vertex-cover", "vertex-cover", planted_hs(60, 2, 3, 100), cover_k(3, 1)},
      {"vc-decision", "vc-decision", planted_hs(60, 2, 2, 80), cover_k(2, 0)},
      {"hs-promised/d2", "hs-promised", planted_hs(40, 2, 2, 60), std::bind(fixed_k, 2, _1, _2)},
      {"hs-promised/d3", "hs-promised", planted_hs(30, 3, 2, 120), std::bind(fixed_k, 2, _1, _2)},
      {"hitting-set/d3", "hitting-set", planted_hs(20, 3, 2, 60), cover_k(2, 1)},
      {"hs-decision/d2", "hs-decision", planted_hs(40, 2, 2, 60), cover_k(2, 0)},
      {"hs-decision/d3", "hs-decision", planted_hs(16, 3, 2, 40), cover_k(2, 0), 2, small_gamma},
      {"cut", "cut", [](std::uint64_t seed) { return gen_planted_cut(30, 2, 3, seed, 10); }, cut_k(3, 2)},
      {"cut-decision", "cut-decision", [](std::uint64_t seed) { return gen_planted_cut(20, 2, 3, seed, 6); },
       cut_k(3, 2)},
  };
  std::size_t passed = 0, total = 0;
  std::string detail;
  for (const auto& s : setups) {
    if (!detail.empty()) detail += ' ';
    detail += run_setup(s, passed, total);
  }
  return {passed == total, detail + " (each >= 95/100)"};
}

Verdict deterministic_variants() {
  std::size_t ok = 0, stable = 0, trials = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t k = 1 + i % 3;
    const bool cut_case = i % 2 == 1;
    const auto inst = cut_case ? gen_planted_cut(16, 2, k, 900 + i, 4)
                               : gen_planted_packing(16, 2 + (i / 2) % 2, k, 4, 900 + i);
    TrialSpec spec;
    spec.algo = cut_case ? "cut-deterministic" : "packing-deterministic";
    spec.k = k;
    spec.t = 2;
    spec.seed = i;
    const auto a = execute_trial(inst.graph, spec);
    spec.seed = derive_seed(i, "other");
    const auto b = execute_trial(inst.graph, spec);
    ++trials;
    ok += a.report.success == "true" && b.report.success == "true";
    stable += a.result && b.result && a.report.queries == b.report.queries &&
              a.result->witness.edges == b.result->witness.edges && a.result->witness.part == b.result->witness.part;
    account(a);
    account(b);
  }
  return {ok == trials && stable == trials,
          std::to_string(ok) + "/" + std::to_string(trials) + " succeed, " + std::to_string(stable) +
              " identical across seeds"};
}

Verdict query_accounting() {
  const auto t = std::to_string(accounting.trials);
  return {accounting.trials > 0 && accounting.exact == accounting.trials && accounting.bounded == accounting.trials,
          std::to_string(accounting.exact) + "/" + t + " exact recounts, " + std::to_string(accounting.bounded) +
              "/" + t + " with q <= min(b, n)"};
}

// ---------------------------------------------------------------------------
// 6

Verdict structural_bounds() {
  std::size_t ok = 0, total = 0, skipped = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t d = 2 + i % 2;
    const std::size_t k = 1 + (i / 2) % 3;
    const auto inst = d == 2 ? gen_planted_hitting_set(40, 2, k, 20 * k, 300 + i)
                             : gen_planted_hitting_set(30, 3, k, 50 * k, 300 + i);
    if (!hitting_set_at_most(inst.graph, k)) {
      ++skipped;
      continue;
    }
    ++total;
    const auto r = verify_report(inst.graph, k);
    bool all = r.at("hypothesis").at("met") == true && r.at("representative_family").at("status") == "pass";
    for (const auto& [name, check] : r.at("checks").items()) all = all && check.at("status") == "pass";
    all = all && r.at("checks").contains("c_prime_bound") && r.at("checks").contains("small_edges_bound");
    if (d == 2) all = all && r.at("checks").contains("high_degree_bound") && r.at("checks").contains("low_edges_bound");
    ok += all;
  }
  return {ok == total && total == 200,
          std::to_string(ok) + "/" + std::to_string(total) + " instances pass every bound (" +
              std::to_string(skipped) + " skipped)"};
}

// ---------------------------------------------------------------------------
// 7

Verdict erdos_rado() {
  std::size_t ok = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t d = 2 + i % 2;
    const std::size_t k = 1 + (i / 2) % 2;
    const std::size_t bound = (d == 2 ? 2 : 6) * static_cast<std::size_t>(std::pow(k, d));
    const std::size_t n = d == 2 ? 10 : 14;
    const auto h = gen_planted_hitting_set(n, d, n / 2, bound + 1 + i % 5, 500 + i).graph;
    if (h.num_edges() <= bound) continue;
    const auto s = find_sunflower(h, k + 1);
    bool valid = s && s->edges.size() == k + 1 && is_sunflower(*s);
    if (s)
      for (const auto& e : s->edges) valid = valid && h.contains(e);
    ok += valid;
  }
  return {ok == 50, std::to_string(ok) + "/50 sunflowers found"};
}

// ---------------------------------------------------------------------------
// 8

constexpr std::size_t kSamples = 400;

// Fraction of single samples S_b satisfying `hit`.
double frequency(const Hypergraph& h, std::uint64_t b, std::uint64_t seed,
                 const std::function<bool(const Hypergraph&)>& hit) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < kSamples; ++i) {
    OracleSession s(h);
    Rng rng(derive_seed(seed, i));
    count += hit(sample_subhypergraph(s, random_coloring(h.n(), b, rng)).graph);
  }
  return static_cast<double>(count) / kSamples;
}

Verdict per_sample_claims() {
  const AlgorithmConstants c;
  double worst[4] = {1, 1, 1, 1};
  std::size_t targets[4] = {0, 0, 0, 0};

  // Graphs with a vertex cover of size 2: low-degree edges and heavy vertices.
  const std::size_t k = 2;
  const auto b_vc = scaled(c.vc_colors_factor, static_cast<double>(k));
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto sparse = gen_planted_hitting_set(60, 2, k, 30, 20 + seed).graph;
    const auto low = degree_profile(sparse, k).low_edges;
    for (std::size_t i = 0; i < low.size() && i < 3; ++i) {
      const auto e = low[i];
      worst[0] = std::min(worst[0], frequency(sparse, b_vc, seed * 10 + i, [&](const Hypergraph& s) { return s.contains(e); }));
      ++targets[0];
    }
    const auto g = gen_planted_hitting_set(60, 2, k, 110, 40 + seed).graph;
    const auto prof = degree_profile(g, k);
    for (VertexId u : prof.high) {
      const double f = frequency(g, b_vc, 100 + seed * 10 + u, [&](const Hypergraph& s) {
        std::size_t deg = 0;
        for (const auto& e : s.edges()) deg += e[0] == u || e[1] == u;
        return deg >= 2 * k;
      });
      worst[1] = std::min(worst[1], f);
      ++targets[1];
    }
  }

  // 3-uniform: small edges (no large core) and a heavy core in C'.
  const auto b_hs = [&](std::size_t kk) { return scaled(c.beta_for(3), static_cast<double>(kk)); };
  {
    const auto h = gen_planted_hitting_set(20, 3, 2, 40, 77).graph;
    const auto rep = classify_cores(h, 2);
    for (std::size_t i = 0; i < rep.small_edges.size() && i < 4; ++i) {
      const auto f = rep.small_edges[i];
      worst[2] = std::min(worst[2], frequency(h, b_hs(2), 200 + i, [&](const Hypergraph& s) { return s.contains(f); }));
      ++targets[2];
    }
  }
  {
    const std::size_t kk = 1;
    const auto h = gen_planted_hitting_set(70, 3, kk, 110, 78).graph;
    const auto rep = classify_cores(h, kk);
    for (std::size_t i = 0; i < rep.c_prime.size() && i < 2; ++i) {
      const auto core = rep.c_prime[i];
      worst[3] = std::min(worst[3], frequency(h, b_hs(kk), 300 + i, [&](const Hypergraph& s) {
        return sunflower_number(s, core, {}, kk + 1) > kk;
      }));
      ++targets[3];
    }
  }

  bool ok = true;
  std::string detail;
  const char* names[4] = {"low-edge kept", "high-degree >= 2k", "small edge kept", "core stays significant"};
  for (int i = 0; i < 4; ++i) {
    ok = ok && targets[i] > 0 && worst[i] >= 0.4;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%s min %.3f over %zu targets", i ? ", " : "", names[i], worst[i], targets[i]);
    detail += buf;
  }
  return {ok, detail};
}

// ---------------------------------------------------------------------------
// 9

std::string csv_without_time(std::vector<TrialReport> rows) {
  for (auto& r : rows) r.elapsed_ms = 0;
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

Verdict determinism() {
  const auto cfg = parse_sweep_config(nlohmann::json::parse(R"({
    "algorithms": ["packing", "vertex-cover", "hs-promised", "hs-decision", "cut"],
    "n": [18], "d": [2, 3], "k": [1, 2], "m": [20], "trials": 4, "master_seed": 31,
    "policy": "random", "k_offsets": [0, 1]
  })"));
  const auto a = csv_without_time(run_sweep(cfg));
  const auto b = csv_without_time(run_sweep(cfg));
  const auto c = csv_without_time(run_sweep_serial(cfg));
  const auto rows = std::count(a.begin(), a.end(), '\n') - 1;
  return {a == b && a == c && rows > 0, std::to_string(rows) + " rows identical across 2 parallel runs and 1 serial run"};
}

}  // namespace

int main() {
  criterion(1, "oracle correctness", 10, oracle_correctness);
  criterion(2, "exact solver equivalence", 60, solver_equivalence);
  criterion(3, "randomized algorithm success", 600, randomized_success);
  criterion(4, "deterministic variants", 600, deterministic_variants);
  criterion(5, "query accounting", 1, query_accounting);
  criterion(6, "structural bounds", 600, structural_bounds);
  criterion(7, "sunflower existence", 600, erdos_rado);
  criterion(8, "per-sample claims", 600, per_sample_claims);
  criterion(9, "sweep determinism", 600, determinism);
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
