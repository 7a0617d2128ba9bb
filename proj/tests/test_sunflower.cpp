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

#include "oracles.hpp"
#include "querylab/errors.hpp"
#include "querylab/rng.hpp"
#include "querylab/sunflower.hpp"

using namespace querylab;

namespace {

Hypergraph star(std::size_t leaves) {
  std::vector<Hyperedge> e;
  for (VertexId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Hypergraph(leaves + 1, 2, e);
}

bool same_report(const CoreReport& a, const CoreReport& b) {
  if (a.cores.size() != b.cores.size()) return false;
  for (std::size_t i = 0; i < a.cores.size(); ++i) {
    const auto &x = a.cores[i], &y = b.cores[i];
    if (x.core != y.core || x.number != y.number || x.large != y.large || x.significant != y.significant)
      return false;
  }
  return a.large_cores == b.large_cores && a.small_edges == b.small_edges && a.c_prime == b.c_prime &&
         a.large_threshold == b.large_threshold;
}

}  // namespace

TEST_SUITE("sunflower") {

TEST_CASE("sunflower number examples") {
  CHECK(sunflower_number(Hypergraph(4, 2, {{0, 1}, {0, 2}, {0, 3}}), {0}) == 3);
  CHECK(sunflower_number(Hypergraph(4, 2, {{0, 1}, {2, 3}}), {}) == 2);
  CHECK(sunflower_number(Hypergraph(4, 2, {{0, 1}, {2, 3}}), {1}) == 1);
  CHECK(sunflower_number(star(30), {0}, {}, 5) == 5);
  const Hypergraph h(5, 3, {{0, 1, 2}});
  CHECK_THROWS_AS(sunflower_number(h, {0, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(sunflower_number(h, {2, 1}), InvalidArgument);
  CHECK_THROWS_AS(sunflower_number(h, {9}), InvalidArgument);
}

TEST_CASE("sunflower number against exhaustive petal packing") {
  Rng rng(13);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto h = gen_gnp(14, 3, 30.0 / 364.0, seed);
    for (int i = 0; i < 20; ++i) {
      const auto size = rng.uniform(3);
      VertexSet core;
      while (core.size() < size) {
        const auto v = static_cast<VertexId>(rng.uniform(14));
        if (std::find(core.begin(), core.end(), v) == core.end()) core.push_back(v);
      }
      std::sort(core.begin(), core.end());
      CHECK(sunflower_number(h, core) == bf::sunflower_number(h, core));
    }
  }
  const auto g = gen_gnp(12, 2, 0.3, 4);
  for (VertexId v = 0; v < 12; ++v) CHECK(sunflower_number(g, {v}) == bf::sunflower_number(g, {v}));
  CHECK(sunflower_number(g, {}) == bf::sunflower_number(g, {}));
}

TEST_CASE("find sunflower") {
  // Nine distinct pairs on few vertices force a 3-sunflower.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h = gen_planted_hitting_set(8, 2, 4, 9, seed).graph;
    REQUIRE(h.num_edges() == 9);
    const auto s = find_sunflower(h, 3);
    REQUIRE(s.has_value());
    CHECK(s->edges.size() == 3);
    CHECK(is_sunflower(*s));
    for (const auto& e : s->edges) CHECK(h.contains(e));
  }
  const auto disjoint = gen_planted_packing(12, 3, 4, 0, 1).graph;
  const auto s = find_sunflower(disjoint, 4);
  REQUIRE(s.has_value());
  CHECK(s->core.empty());
  CHECK_FALSE(find_sunflower(Hypergraph(3, 2, {{0, 1}}), 2).has_value());
  CHECK_FALSE(is_sunflower({{0}, {{0, 1}, {0, 1, 2}}}));
  CHECK_FALSE(is_sunflower({{}, {{0, 1}, {1, 2}}}));
  CHECK(is_sunflower({{1}, {{0, 1}, {1, 2}}}));
}

TEST_CASE("candidate cores") {
  const auto c = candidate_cores(Hypergraph(4, 3, {{0, 1, 2}}));
  CHECK(c.size() == 7);
  CHECK(c.front().empty());
  for (const auto& x : c) CHECK(x.size() < 3);
}

TEST_CASE("classification examples") {
  // k = 1, d = 2: 10dk + 1 = 21 leaves.
  const auto r = classify_cores(star(21), 1);
  CHECK(r.large_threshold == 20);
  CHECK(r.large_cores == std::vector<VertexSet>{{0}});
  CHECK(r.small_edges.empty());
  CHECK(r.c_prime == std::vector<VertexSet>{{0}});

  // Max degree <= k: no significant singleton, every edge small.
  const Hypergraph cyc(6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const auto q = classify_cores(cyc, 2);
  for (const auto& info : q.cores)
    if (info.core.size() == 1) CHECK_FALSE(info.significant);
  CHECK(q.small_edges == cyc.edges());
  CHECK(q.c_prime.empty());

  const auto empty = classify_cores(Hypergraph(5, 3, {}), 2);
  CHECK(empty.small_edges.empty());
  CHECK(empty.c_prime.empty());
}

TEST_CASE("parallel classification matches the serial reference") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = gen_gnp(30, 2, 0.3, seed);
    CHECK(same_report(classify_cores(g, 1), classify_cores_serial(g, 1)));
    const auto h = gen_planted_hitting_set(16, 3, 2, 60, seed).graph;
    CHECK(same_report(classify_cores(h, 1), classify_cores_serial(h, 1)));
  }
}

TEST_CASE("classification invariants") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = gen_planted_hitting_set(14, 3, 1, 40, seed).graph;
    const auto r = classify_cores_serial(h, 1);
    for (const auto& info : r.cores) {
      CHECK(info.number == std::min(bf::sunflower_number(h, info.core), r.large_threshold + 1));
      CHECK(info.large == (info.number > r.large_threshold));
      CHECK(info.significant == (info.number > 1));
    }
    for (const auto& e : r.small_edges)
      for (const auto& c : r.large_cores) CHECK_FALSE(is_subset(c, e));
    for (const auto& c : r.c_prime) {
      for (const auto& info : r.cores)
        if (info.significant && info.core.size() < c.size()) CHECK_FALSE(is_subset(info.core, c));
    }
    // Raising k can only shrink the significant set.
    const auto r2 = classify_cores_serial(h, 2);
    for (std::size_t i = 0; i < r.cores.size(); ++i)
      if (r2.cores[i].significant) CHECK(r.cores[i].significant);
  }
}

TEST_CASE("report json") {
  const auto j = to_json(classify_cores(star(21), 1));
  CHECK(j.at("large_threshold") == 20);
  CHECK(j.at("c_prime").size() == 1);
}

}  // TEST_SUITE
