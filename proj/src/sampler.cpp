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

#include "querylab/sampler.hpp"

#include "querylab/errors.hpp"

namespace querylab {
namespace {

void check_coloring(const OracleSession& session, const HashColoring& c) {
  if (c.n() != session.n()) {
    throw InvalidArgument("coloring covers " + std::to_string(c.n()) + " vertices, instance has " +
                          std::to_string(session.n()));
  }
}

// Calls visit(index tuple) for every d-subset of [0, q) in lexicographic order.
template <typename Visit>
void for_each_tuple(std::size_t q, std::size_t d, Visit&& visit) {
  if (q < d) return;
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = d;
    while (i > 0 && idx[i - 1] == q - d + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void log_coloring(OracleSession& session, std::string_view tag, const HashColoring& c) {
  if (session.logging()) session.annotate(tag, c.to_string());
}

}  // namespace

std::uint64_t sample_query_count(const HashColoring& c, std::size_t d) {
  return binomial(c.num_classes(), d);
}

SampledSubgraph sample_subhypergraph(OracleSession& session, const HashColoring& coloring) {
  check_coloring(session, coloring);
  log_coloring(session, "sample", coloring);
  const std::size_t d = session.d();
  const auto cls = classes(coloring);
  const auto before = session.stats();
  std::vector<Part> parts(d);
  std::vector<Hyperedge> found;
  for_each_tuple(cls.size(), d, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < d; ++i) parts[i] = cls[idx[i]].vertices;
    auto e = d == 2 ? session.bise(parts[0], parts[1]) : session.gpise(parts);
    if (e) found.push_back(std::move(*e));
  });
  const auto spent = (session.stats() - before).total();
  return {Hypergraph(session.n(), d, std::move(found)), {coloring}, spent};
}

SampledSubgraph sample_union(OracleSession& session, std::uint64_t b, std::size_t t, const Rng& rng) {
  if (t == 0) throw InvalidArgument("sample_union needs at least one repetition");
  std::vector<Hyperedge> edges;
  SampledSubgraph out{Hypergraph(session.n(), session.d()), {}, 0};
  for (std::size_t r = 0; r < t; ++r) {
    Rng stream = rng.child(r);
    auto one = sample_subhypergraph(session, random_coloring(session.n(), b, stream));
    edges.insert(edges.end(), one.graph.edges().begin(), one.graph.edges().end());
    out.provenance.push_back(std::move(one.provenance.front()));
    out.queries_spent += one.queries_spent;
  }
  out.graph = Hypergraph(session.n(), session.d(), std::move(edges));
  return out;
}

QuotientInstance quotient_existence(OracleSession& session, const HashColoring& coloring) {
  check_coloring(session, coloring);
  log_coloring(session, "quotient", coloring);
  const std::size_t d = session.d();
  const auto cls = classes(coloring);
  QuotientInstance out{Hypergraph(std::max<std::size_t>(cls.size(), 1), d), {}, {}, 0};
  out.class_map.resize(session.n());
  for (std::size_t i = 0; i < cls.size(); ++i) {
    out.class_colors.push_back(cls[i].color);
    for (VertexId v : cls[i].vertices) out.class_map[v] = static_cast<std::uint32_t>(i);
  }
  const auto before = session.stats();
  std::vector<Part> parts(d);
  std::vector<Hyperedge> found;
  for_each_tuple(cls.size(), d, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < d; ++i) parts[i] = cls[idx[i]].vertices;
    const bool yes = d == 2 ? session.bis(parts[0], parts[1]) : session.gpis(parts);
    if (yes) found.emplace_back(idx.begin(), idx.end());
  });
  out.queries_spent = (session.stats() - before).total();
  out.graph = Hypergraph(std::max<std::size_t>(cls.size(), 1), d, std::move(found));
  return out;
}

}  // namespace querylab
