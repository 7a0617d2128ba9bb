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

#include "querylab/algorithms.hpp"

#include <algorithm>
#include <cmath>

#include "querylab/errors.hpp"
#include "querylab/sampler.hpp"

namespace querylab {

double AlgorithmConstants::gamma_for(std::size_t d) const {
  return pack_gamma.value_or(100.0 * static_cast<double>(d * d));
}

double AlgorithmConstants::alpha_for(std::size_t d) const {
  return hs_alpha.value_or(100.0 * static_cast<double>(d * d));
}

double AlgorithmConstants::beta_for(std::size_t d) const {
  return hs_beta.value_or(100.0 * std::pow(static_cast<double>(d), 3) * std::ldexp(1.0, static_cast<int>(d) + 5));
}

double AlgorithmConstants::decision_gamma_for(std::size_t d) const {
  return hs_decision_gamma.value_or(100.0 * std::pow(9.0, static_cast<double>(d)) *
                                    static_cast<double>(d * d));
}

void AlgorithmConstants::validate() const {
  auto check = [](double v, const char* name) {
    if (!(v >= 1.0)) throw InvalidArgument(std::string(name) + " must be >= 1");
  };
  check(vc_colors_factor, "vc_colors_factor");
  check(vc_rounds_factor, "vc_rounds_factor");
  check(vc_decision_colors, "vc_decision_colors");
  check(match_colors_factor, "match_colors_factor");
  check(match_rounds_factor, "match_rounds_factor");
  check(cut_colors, "cut_colors");
  if (pack_gamma) check(*pack_gamma, "pack_gamma");
  if (hs_alpha) check(*hs_alpha, "hs_alpha");
  if (hs_beta) check(*hs_beta, "hs_beta");
  if (hs_decision_gamma) check(*hs_decision_gamma, "hs_decision_gamma");
  if (colors_factor) check(*colors_factor, "colors_factor");
  if (!(boost_c > 0.0)) throw InvalidArgument("boost_c must be positive");
}

nlohmann::json to_json(const AlgorithmConstants& c, std::size_t d) {
  nlohmann::json j{{"vc_colors_factor", c.vc_colors_factor},
                   {"vc_rounds_factor", c.vc_rounds_factor},
                   {"vc_decision_colors", c.vc_decision_colors},
                   {"match_colors_factor", c.match_colors_factor},
                   {"match_rounds_factor", c.match_rounds_factor},
                   {"pack_gamma", c.gamma_for(d)},
                   {"hs_alpha", c.alpha_for(d)},
                   {"hs_beta", c.beta_for(d)},
                   {"hs_decision_gamma", c.decision_gamma_for(d)},
                   {"cut_colors", c.cut_colors},
                   {"boost_c", c.boost_c}};
  j["colors_factor"] = c.colors_factor ? nlohmann::json(*c.colors_factor) : nlohmann::json(nullptr);
  return j;
}

std::size_t log_k(std::size_t k) {
  std::size_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < k) ++bits;
  return std::max<std::size_t>(1, bits);
}

std::uint64_t scaled(double factor, double x) {
  const double v = std::ceil(factor * x - 1e-9);
  if (!(v < 1.8e19)) return UINT64_MAX;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(v));
}

std::string_view to_string(Answer a) noexcept {
  switch (a) {
    case Answer::Found: return "found";
    case Answer::NotExists: return "not_exists";
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
  }
  return "?";
}

namespace {

double kd(std::size_t k) { return static_cast<double>(std::max<std::size_t>(k, 1)); }

std::size_t rounds_of(double factor, std::size_t k) {
  return static_cast<std::size_t>(scaled(factor, static_cast<double>(log_k(k))));
}

void require_graph(const OracleSession& s, std::string_view algo) {
  if (s.d() != 2) throw InvalidArgument(std::string(algo) + " needs a graph instance (d = 2), got d = " +
                                        std::to_string(s.d()));
}

void require_positive(std::size_t k, std::string_view algo) {
  if (k == 0) throw InvalidArgument(std::string(algo) + " needs k >= 1");
}

void require_parts(std::size_t t) {
  if (t < 2) throw InvalidArgument("cut needs t >= 2");
}

// Shared bookkeeping for one algorithm call.
class Run {
 public:
  Run(OracleSession& s, std::string name, const RunOptions& opt)
      : s_(s), opt_(opt), before_(s.stats()) {
    opt_.constants.validate();
    result_.algorithm = std::move(name);
    result_.constants = opt_.constants;
  }

  OracleSession& session() { return s_; }
  const RunOptions& options() const { return opt_; }
  const SolverLimits& limits() const { return opt_.limits; }
  Rng rng(std::string_view tag) const { return Rng(opt_.seed, tag); }
  double colors(double own) const { return opt_.constants.colors_factor.value_or(own); }

  Hypergraph sample(const HashColoring& c) {
    auto sampled = sample_subhypergraph(s_, c);
    record(RoundRecord::Mode::Sample, c, sampled.queries_spent);
    return std::move(sampled.graph);
  }

  Hypergraph sample_many(std::uint64_t b, std::size_t t, const Rng& rng) {
    auto sampled = sample_union(s_, b, t, rng);
    for (auto& c : sampled.provenance) record(RoundRecord::Mode::Sample, c, sample_query_count(c, s_.d()));
    return std::move(sampled.graph);
  }

  QuotientInstance quotient(const HashColoring& c) {
    auto q = quotient_existence(s_, c);
    record(RoundRecord::Mode::Quotient, c, q.queries_spent);
    return q;
  }

  // Absorb a sub-run's rounds (its queries are already on the session).
  void absorb(AlgorithmResult&& inner) {
    for (auto& r : inner.rounds) result_.rounds.push_back(std::move(r));
  }

  AlgorithmResult finish(Answer a) {
    result_.answer = a;
    result_.stats = s_.stats() - before_;
    result_.rounds_used = result_.rounds.size();
    return std::move(result_);
  }

  AlgorithmResult& result() { return result_; }

 private:
  void record(RoundRecord::Mode mode, const HashColoring& c, std::uint64_t queries) {
    result_.rounds.push_back({mode, s_.d(), c, queries});
  }

  OracleSession& s_;
  RunOptions opt_;
  QueryStats before_;
  AlgorithmResult result_;
};

std::vector<Hyperedge> best_packing(const Hypergraph& g, const SolverLimits& limits) {
  return g.d() == 2 ? max_matching(g, limits) : max_set_packing(g, limits);
}

AlgorithmResult packing_over(Run& run, std::size_t k, const std::vector<HashColoring>& colorings) {
  std::vector<Hyperedge> best;
  for (const auto& c : colorings) {
    const auto sample = run.sample(c);
    auto p = best_packing(sample, run.limits());
    if (!is_packing(sample, p)) throw std::logic_error("packing witness is not a packing of the sample");
    if (p.size() > best.size()) best = std::move(p);
  }
  auto& r = run.result();
  r.value = best.size();
  if (best.size() >= k) {
    r.witness.kind = Witness::Kind::Edges;
    r.witness.edges = std::move(best);
    return run.finish(Answer::Found);
  }
  return run.finish(Answer::NotExists);
}

std::vector<HashColoring> random_colorings(std::size_t n, std::uint64_t b, std::size_t rounds, const Rng& rng) {
  std::vector<HashColoring> out;
  out.reserve(rounds);
  for (std::size_t r = 0; r < rounds; ++r) {
    Rng stream = rng.child(r);
    out.push_back(random_coloring(n, b, stream));
  }
  return out;
}

// Lift a class-level partition to vertices; classes outside it go to part 0.
Partition lift(const QuotientInstance& q, const Partition& class_part, std::size_t n) {
  Partition out(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto c = q.class_map[v];
    out[v] = c < class_part.size() ? class_part[c] : 0;
  }
  return canonical_partition(out);
}

// Quotient view of a sampled subgraph: one vertex per class.
QuotientInstance class_graph(const Hypergraph& sample, const HashColoring& c) {
  const auto cls = classes(c);
  QuotientInstance q{Hypergraph(std::max<std::size_t>(cls.size(), 1), 2), std::vector<std::uint32_t>(c.n()), {}, 0};
  for (std::size_t i = 0; i < cls.size(); ++i) {
    q.class_colors.push_back(cls[i].color);
    for (VertexId v : cls[i].vertices) q.class_map[v] = static_cast<std::uint32_t>(i);
  }
  std::vector<Hyperedge> edges;
  for (const auto& e : sample.edges()) edges.push_back({q.class_map[e[0]], q.class_map[e[1]]});
  q.graph = Hypergraph(q.graph.n(), 2, std::move(edges));
  return q;
}

AlgorithmResult cut_over(Run& run, std::size_t t, std::size_t k, const std::vector<HashColoring>& colorings,
                         bool witness_oracle, bool decision) {
  const std::size_t n = run.session().n();
  std::size_t best = 0;
  bool have = false;
  Partition best_part(n, 0);
  for (const auto& c : colorings) {
    const auto q = witness_oracle ? class_graph(run.sample(c), c) : run.quotient(c);
    const auto cr = max_t_cut(q.graph, t, run.limits());
    if (!have || cr.size > best) {
      have = true;
      best = cr.size;
      best_part = lift(q, cr.part, n);
    }
  }
  auto& r = run.result();
  r.value = best;
  const bool ok = best >= k;
  if (ok) {
    r.witness.kind = Witness::Kind::Partition;
    r.witness.part = std::move(best_part);
  }
  if (decision) return run.finish(ok ? Answer::Yes : Answer::No);
  return run.finish(ok ? Answer::Found : Answer::NotExists);
}

// Majority vote over `rounds` quotients: a round votes yes iff HS <= k.
AlgorithmResult majority_over(Run& run, std::size_t k, std::uint64_t b, std::size_t rounds) {
  const Rng rng = run.rng("decision");
  std::size_t yes = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    Rng stream = rng.child(i);
    const auto q = run.quotient(random_coloring(run.session().n(), b, stream));
    if (hitting_set_at_most(q.graph, k, run.limits())) ++yes;
  }
  run.result().value = yes;
  return run.finish(2 * yes > rounds ? Answer::Yes : Answer::No);
}

AlgorithmResult cover_promised(Run& run, std::uint64_t b, std::size_t rounds) {
  const auto g = run.sample_many(b, rounds, run.rng("promised"));
  auto cover = min_hitting_set(g, run.limits());
  if (!is_hitting_set(g, cover)) throw std::logic_error("cover witness misses a sampled edge");
  auto& r = run.result();
  r.value = cover.size();
  r.witness.kind = Witness::Kind::Vertices;
  r.witness.vertices = std::move(cover);
  return run.finish(Answer::Found);
}

// Packing phase of size k+1, then the promised routine under bound `promise`.
template <typename Promised>
AlgorithmResult optimize_cover(OracleSession& s, std::string name, std::size_t k, std::size_t promise,
                               const RunOptions& opt, Promised promised) {
  Run run(s, std::move(name), opt);
  RunOptions packing_opt = opt;
  packing_opt.seed = derive_seed(opt.seed, "packing-phase");
  auto pack = packing(s, k + 1, packing_opt);
  const bool too_big = pack.answer == Answer::Found;
  auto witness = pack.witness;
  const std::size_t pack_value = pack.value;
  run.absorb(std::move(pack));
  if (too_big) {
    run.result().value = pack_value;
    run.result().witness = std::move(witness);
    return run.finish(Answer::NotExists);
  }
  RunOptions promised_opt = opt;
  promised_opt.seed = derive_seed(opt.seed, "promised-phase");
  auto found = promised(s, promise, promised_opt);
  const std::size_t size = found.witness.vertices.size();
  auto cover = std::move(found.witness);
  run.absorb(std::move(found));
  run.result().value = size;
  if (size <= k) {
    run.result().witness = std::move(cover);
    return run.finish(Answer::Found);
  }
  return run.finish(Answer::NotExists);
}

}  // namespace

AlgorithmResult packing(OracleSession& s, std::size_t k, const RunOptions& opt) {
  require_positive(k, "packing");
  Run run(s, "packing", opt);
  const std::size_t d = s.d();
  const auto b = scaled(run.colors(opt.constants.gamma_for(d)), kd(k) * kd(k));
  const auto rounds = rounds_of(opt.constants.boost_c, k);
  return packing_over(run, k, random_colorings(s.n(), b, rounds, run.rng("packing")));
}

AlgorithmResult packing_deterministic(OracleSession& s, std::size_t k, const RunOptions& opt) {
  require_positive(k, "packing-deterministic");
  Run run(s, "packing-deterministic", opt);
  const std::size_t d = s.d();
  const std::size_t span = d * k;
  const auto nominal_range = scaled(run.colors(opt.constants.gamma_for(d)), kd(k) * kd(k));
  const auto family = perfect_family(s.n(), span, std::max<std::uint64_t>(nominal_range, 4 * span * span));
  return packing_over(run, k, family.members());
}

AlgorithmResult vc_promised(OracleSession& s, std::size_t k, const RunOptions& opt) {
  require_graph(s, "vc-promised");
  Run run(s, "vc-promised", opt);
  const auto b = scaled(run.colors(opt.constants.vc_colors_factor), kd(k));
  return cover_promised(run, b, rounds_of(opt.constants.vc_rounds_factor, k));
}

AlgorithmResult vertex_cover(OracleSession& s, std::size_t k, const RunOptions& opt) {
  require_graph(s, "vertex-cover");
  require_positive(k, "vertex-cover");
  return optimize_cover(s, "vertex-cover", k, 2 * k, opt, vc_promised);
}

AlgorithmResult matching_promised(OracleSession& s, std::size_t k, const RunOptions& opt) {
  require_graph(s, "matching-promised");
  Run run(s, "matching-promised", opt);
  const auto b = scaled(run.colors(opt.constants.match_colors_factor), kd(k));
  const auto g = run.sample_many(b, rounds_of(opt.constants.match_rounds_factor, k), run.rng("promised"));
  auto m = max_matching(g, run.limits());
  run.result().value = m.size();
  run.result().witness.kind = Witness::Kind::Edges;
  run.result().witness.edges = std::move(m);
  return run.finish(Answer::Found);
}

AlgorithmResult vc_decision(OracleSession& s, std::size_t k, const RunOptions& opt) {
  require_graph(s, "vc-decision");
  Run run(s, "vc-decision", opt);
  const auto b = scaled(run.colors(opt.constants.vc_decision_colors), std::pow(kd(k), 4));
  return majority_over(run, k, b, rounds_of(opt.constants.boost_c, k));
}

AlgorithmResult hs_promised(OracleSession& s, std::size_t k, const RunOptions& opt) {
  Run run(s, "hs-promised", opt);
  const std::size_t d = s.d();
  const auto b = scaled(run.colors(opt.constants.beta_for(d)), kd(k));
  return cover_promised(run, b, rounds_of(opt.constants.alpha_for(d), k));
}

AlgorithmResult hitting_set(OracleSession& s, std::size_t k, const RunOptions& opt) {
  require_positive(k, "hitting-set");
  return optimize_cover(s, "hitting-set", k, s.d() * k, opt, hs_promised);
}

AlgorithmResult hs_decision(OracleSession& s, std::size_t k, const RunOptions& opt) {
  Run run(s, "hs-decision", opt);
  const std::size_t d = s.d();
  const auto b = scaled(run.colors(opt.constants.decision_gamma_for(d)),
                        std::pow(kd(k), 2.0 * static_cast<double>(d)));
  return majority_over(run, k, b, rounds_of(opt.constants.boost_c, k));
}

AlgorithmResult cut(OracleSession& s, std::size_t t, std::size_t k, const RunOptions& opt) {
  require_graph(s, "cut");
  require_parts(t);
  require_positive(k, "cut");
  Run run(s, "cut", opt);
  const auto b = scaled(run.colors(opt.constants.cut_colors), kd(k) * kd(k));
  return cut_over(run, t, k, random_colorings(s.n(), b, rounds_of(opt.constants.boost_c, k), run.rng("cut")),
                  true, false);
}

AlgorithmResult cut_decision(OracleSession& s, std::size_t t, std::size_t k, const RunOptions& opt) {
  require_graph(s, "cut-decision");
  require_parts(t);
  require_positive(k, "cut-decision");
  Run run(s, "cut-decision", opt);
  const auto b = scaled(run.colors(opt.constants.cut_colors), kd(k) * kd(k));
  return cut_over(run, t, k, random_colorings(s.n(), b, rounds_of(opt.constants.boost_c, k), run.rng("cut")),
                  false, true);
}

namespace {

PerfectFamily cut_family(const Run& run, std::size_t n, std::size_t k) {
  const std::size_t span = 2 * k;
  const auto nominal_range = scaled(run.colors(run.options().constants.cut_colors), kd(k) * kd(k));
  return perfect_family(n, span, std::max<std::uint64_t>(nominal_range, 4 * span * span));
}

}  // namespace

AlgorithmResult cut_deterministic(OracleSession& s, std::size_t t, std::size_t k, const RunOptions& opt) {
  require_graph(s, "cut-deterministic");
  require_parts(t);
  require_positive(k, "cut-deterministic");
  Run run(s, "cut-deterministic", opt);
  return cut_over(run, t, k, cut_family(run, s.n(), k).members(), true, false);
}

AlgorithmResult cut_decision_deterministic(OracleSession& s, std::size_t t, std::size_t k,
                                           const RunOptions& opt) {
  require_graph(s, "cut-decision-deterministic");
  require_parts(t);
  require_positive(k, "cut-decision-deterministic");
  Run run(s, "cut-decision-deterministic", opt);
  return cut_over(run, t, k, cut_family(run, s.n(), k).members(), false, true);
}

const std::vector<AlgorithmInfo>& algorithm_catalog() {
  static const std::vector<AlgorithmInfo> catalog{
      {"packing", false, false, false},
      {"packing-deterministic", false, false, false},
      {"matching-promised", true, false, false},
      {"vc-promised", true, false, false},
      {"vertex-cover", true, false, false},
      {"vc-decision", true, false, true},
      {"hs-promised", false, false, false},
      {"hitting-set", false, false, false},
      {"hs-decision", false, false, true},
      {"cut", true, true, false},
      {"cut-decision", true, true, true},
      {"cut-deterministic", true, true, false},
      {"cut-decision-deterministic", true, true, true},
  };
  return catalog;
}

const AlgorithmInfo& algorithm_info(std::string_view name) {
  for (const auto& a : algorithm_catalog())
    if (a.name == name) return a;
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "'");
}

AlgorithmResult run_algorithm(std::string_view name, OracleSession& s, std::size_t k, std::size_t t,
                              const RunOptions& opt) {
  const auto& info = algorithm_info(name);
  if (info.needs_graph && s.d() != 2) {
    throw InvalidArgument("arity mismatch: " + std::string(name) + " needs d = 2, instance has d = " +
                          std::to_string(s.d()));
  }
  if (name == "packing") return packing(s, k, opt);
  if (name == "packing-deterministic") return packing_deterministic(s, k, opt);
  if (name == "matching-promised") return matching_promised(s, k, opt);
  if (name == "vc-promised") return vc_promised(s, k, opt);
  if (name == "vertex-cover") return vertex_cover(s, k, opt);
  if (name == "vc-decision") return vc_decision(s, k, opt);
  if (name == "hs-promised") return hs_promised(s, k, opt);
  if (name == "hitting-set") return hitting_set(s, k, opt);
  if (name == "hs-decision") return hs_decision(s, k, opt);
  if (name == "cut") return cut(s, t, k, opt);
  if (name == "cut-decision") return cut_decision(s, t, k, opt);
  if (name == "cut-deterministic") return cut_deterministic(s, t, k, opt);
  return cut_decision_deterministic(s, t, k, opt);
}

QueryStats recount_queries(const std::vector<RoundRecord>& rounds) {
  QueryStats q;
  for (const auto& r : rounds) {
    const auto c = binomial(r.coloring.num_classes(), r.arity);
    const bool graph = r.arity == 2;
    if (r.mode == RoundRecord::Mode::Sample) {
      (graph ? q.bise : q.gpise) += c;
    } else {
      (graph ? q.bis : q.gpis) += c;
    }
  }
  return q;
}

}  // namespace querylab
