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
#include <vector>

#include <json.hpp>

#include "querylab/hypergraph.hpp"
#include "querylab/solvers.hpp"

namespace querylab {

// Edges pairwise intersecting exactly in `core`; petals are non-empty.
struct Sunflower {
  VertexSet core;
  std::vector<Hyperedge> edges;
};

bool is_sunflower(const Sunflower& s);

/// S_H(C): the largest number of edges containing C whose petals F \ C are
/// pairwise disjoint. C must be sorted with |C| < d. Counting stops at `cap`.
std::size_t sunflower_number(const Hypergraph& h, const VertexSet& core, const SolverLimits& limits = {},
                             std::size_t cap = SIZE_MAX);

// A t-sunflower, if any. Cores are tried by (size, vertices) ascending.
std::optional<Sunflower> find_sunflower(const Hypergraph& h, std::size_t t, const SolverLimits& limits = {});

// The empty set plus every proper subset of every edge, by (size, vertices).
std::vector<VertexSet> candidate_cores(const Hypergraph& h);

struct CoreInfo {
  VertexSet core;
  std::size_t number = 0;  // S_H(core), capped at 10dk + 1
  bool large = false;      // number > 10dk
  bool significant = false;  // number > k
};

struct CoreReport {
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t large_threshold = 0;  // 10dk
  std::vector<CoreInfo> cores;      // every candidate, in candidate order
  std::vector<VertexSet> large_cores;
  std::vector<Hyperedge> small_edges;  // F_s: edges containing no large core
  std::vector<VertexSet> c_prime;      // large cores with no significant proper-subset core
};

// Parallel over cores; graphs (d = 2) read S_H({v}) off the degrees.
CoreReport classify_cores(const Hypergraph& h, std::size_t k, const SolverLimits& limits = {});
// Single-threaded reference using the generic petal packing for every d.
CoreReport classify_cores_serial(const Hypergraph& h, std::size_t k, const SolverLimits& limits = {});

nlohmann::json to_json(const CoreReport& r);

}  // namespace querylab
