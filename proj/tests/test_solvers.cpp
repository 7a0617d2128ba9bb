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
#include "querylab/solvers.hpp"

using namespace querylab;

namespace {

const Hypergraph kTriangle(3, 2, {{0, 1}, {0, 2}, {1, 2}});

Hypergraph clique(std::size_t n) {
  std::vector<Hyperedge> e;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) e.push_back({a, b});
  return Hypergraph(n, 2, e);
}

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("vertex cover and hitting set examples") {
  CHECK(min_vertex_cover(Hypergraph(4, 2, {{0, 1}, {1, 2}, {1, 3}})) == VertexSet{1});
  CHECK(min_vertex_cover(kTriangle).size() == 2);
  CHECK(min_vertex_cover(kTriangle) == VertexSet{0, 1});
  CHECK(min_vertex_cover(Hypergraph(5, 2, {})).empty());
  CHECK(min_hitting_set(Hypergraph(5, 3, {{0, 1, 2}, {0, 3, 4}})) == VertexSet{0});
  CHECK(min_hitting_set(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}})).size() == 2);
  CHECK(hitting_set_at_most(kTriangle, 1) == std::nullopt);
  CHECK(hitting_set_at_most(kTriangle, 2).has_value());
  std::vector<bool> forbid(3, false);
  forbid[0] = true;
  CHECK(hitting_set_at_most(kTriangle, 2, {}, forbid) == VertexSet{1, 2});
}

TEST_CASE("matching and packing examples") {
  CHECK(max_matching(Hypergraph(3, 2, {{0, 1}, {1, 2}})).size() == 1);
  CHECK(max_matching(Hypergraph(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})).size() == 2);
  const auto planted = gen_planted_packing(20, 2, 5, 0, 3);
  CHECK(max_matching(planted.graph).size() == 5);
  CHECK(max_set_packing(Hypergraph(6, 3, {{0, 1, 2}, {2, 3, 4}, {3, 4, 5}})).size() == 2);
  CHECK(matching_number(6, clique(6).edges()) == 3);
}

TEST_CASE("max cut examples") {
  CHECK(max_t_cut(kTriangle, 2).size == 2);
  CHECK(max_t_cut(kTriangle, 3).size == 3);
  CHECK(max_t_cut(clique(4), 2).size == 4);
  const auto r = max_t_cut(clique(5), 2);
  CHECK(r.size == 6);
  CHECK(cut_size(clique(5), r.part) == 6);
  CHECK(r.part[0] == 0);
  CHECK(max_t_cut(Hypergraph(4, 2, {}), 2).size == 0);
}

TEST_CASE("agreement with exhaustive search") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t d = 2 + seed % 2;
    const std::size_t n = 8 + seed % 7;
    const auto h = gen_gnp(n, d, d == 2 ? 0.25 : 0.04, seed);
    const auto hs = min_hitting_set(h);
    CHECK(is_hitting_set(h, hs));
    CHECK(hs.size() == bf::min_hitting_set(h));
    const auto pk = max_set_packing(h);
    CHECK(is_packing(h, pk));
    CHECK(pk.size() == bf::max_packing(h));
    // Weak duality and the d-approximation of the greedy cover.
    CHECK(pk.size() <= hs.size());
    CHECK(hs.size() <= d * pk.size());
    if (d == 2 && n <= 11) {
      for (std::size_t t : {2, 3}) {
        const auto cut = max_t_cut(h, t);
        CHECK(cut.size == bf::max_cut(h, t));
        CHECK(cut_size(h, cut.part) == cut.size);
        CHECK(cut.part == canonical_partition(cut.part));
      }
    }
  }
}

TEST_CASE("lexicographic optima") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = gen_gnp(10, 2, 0.3, seed + 500);
    const auto vc = min_vertex_cover(h);
    // Nothing of the same size is lexicographically smaller.
    const bool smaller = bf::any_subset<VertexId>(
        [&] {
          std::vector<VertexId> all(10);
          std::iota(all.begin(), all.end(), 0);
          return all;
        }(),
        vc.size(), [&](const std::vector<VertexId>& s) { return s < vc && bf::hits_all(h, s); });
    CHECK_FALSE(smaller);
    CHECK(min_vertex_cover(h) == vc);
  }
}

TEST_CASE("degree profile") {
  const auto sparse = gen_gnp(20, 2, 0.2, 1);
  const auto p = degree_profile(sparse, 2);
  CHECK(p.threshold == 40);
  CHECK(p.high.empty());
  CHECK(p.low_edges == sparse.edges());

  std::vector<Hyperedge> star;
  for (VertexId v = 1; v <= 45; ++v) star.push_back({0, v});
  star.push_back({50, 51});
  const auto q = degree_profile(Hypergraph(60, 2, star), 2);
  CHECK(q.high == VertexSet{0});
  CHECK(q.low.size() == 59);
  CHECK(q.low_edges == std::vector<Hyperedge>{{50, 51}});
}

TEST_CASE("representative family") {
  const Hypergraph small(5, 2, {{0, 1}, {2, 3}});
  CHECK(representative_family(small, 2) == small.edges());
  CHECK(representative_family(small, 0).size() == 1);
  CHECK(representative_family(Hypergraph(4, 2, {}), 0).empty());

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto h = gen_planted_hitting_set(10, 2, 4, 30, seed).graph;
    const auto rep = representative_family(h, 2);
    CHECK(rep.size() <= 6);
    CHECK(bf::representative(h, rep, 2));
    CHECK(is_representative(h, rep, 2));
    for (const auto& e : rep) CHECK(h.contains(e));
  }
  const auto h3 = gen_gnp(9, 3, 0.2, 4);
  const auto rep3 = representative_family(h3, 1);
  CHECK(rep3.size() <= 4);
  CHECK(bf::representative(h3, rep3, 1));
  CHECK_FALSE(bf::representative(kTriangle, {{0, 1}}, 1));
  CHECK_FALSE(is_representative(kTriangle, {{0, 1}}, 1));
}

TEST_CASE("budget") {
  const auto h = gen_gnp(40, 3, 0.05, 6);
  CHECK_THROWS_AS(min_hitting_set(h, SolverLimits{50, std::chrono::milliseconds{0}}), BudgetExceeded);
  SearchBudget b(SolverLimits{2, std::chrono::milliseconds{0}});
  b.tick();
  b.tick();
  CHECK_THROWS_AS(b.tick(), BudgetExceeded);
}

}  // TEST_SUITE
