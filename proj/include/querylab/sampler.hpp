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
#include <vector>

#include "querylab/coloring.hpp"
#include "querylab/hypergraph.hpp"
#include "querylab/oracle.hpp"
#include "querylab/rng.hpp"

namespace querylab {

struct SampledSubgraph {
  Hypergraph graph;                     // on the original vertex set
  std::vector<HashColoring> provenance;  // one coloring per single sample
  std::uint64_t queries_spent = 0;
};

struct QuotientInstance {
  Hypergraph graph;                      // vertex i is the i-th non-empty class
  std::vector<std::uint32_t> class_map;  // original vertex -> quotient vertex
  std::vector<std::uint64_t> class_colors;
  std::uint64_t queries_spent = 0;
};

/// S_b for a fixed coloring: one witness query (bise when d == 2, gpise
/// otherwise) per d-subset of the non-empty classes, in ascending
/// lexicographic order of color. Exactly C(q, d) queries.
SampledSubgraph sample_subhypergraph(OracleSession& session, const HashColoring& coloring);

// Union of t single samples; repetition r colors with rng.child(r).
SampledSubgraph sample_union(OracleSession& session, std::uint64_t b, std::size_t t, const Rng& rng);

// Existence queries (bis when d == 2, gpis otherwise) over the same class
// tuples; a quotient edge per yes answer.
QuotientInstance quotient_existence(OracleSession& session, const HashColoring& coloring);

// C(q, d) with q the number of non-empty classes of c.
std::uint64_t sample_query_count(const HashColoring& c, std::size_t d);

}  // namespace querylab
