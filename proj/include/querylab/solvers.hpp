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

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "querylab/hypergraph.hpp"

namespace querylab {

struct SolverLimits {
  std::uint64_t max_branch_nodes = 500'000'000;
  std::chrono::milliseconds time_budget{0};  // 0 disables the clock

  static SolverLimits unlimited() { return {UINT64_MAX, std::chrono::milliseconds{0}}; }
};

// Node/time accounting shared by the search routines. Throws BudgetExceeded.
class SearchBudget {
 public:
  explicit SearchBudget(const SolverLimits& limits);
  void tick();
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  SolverLimits limits_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

// Among optima every solver returns the lexicographically smallest one.

VertexSet min_vertex_cover(const Hypergraph& g, const SolverLimits& limits = {});
VertexSet min_hitting_set(const Hypergraph& h, const SolverLimits& limits = {});

// Some hitting set of size <= k, or nullopt. Vertices flagged in `forbidden`
// (if non-empty) may not be used.
std::optional<VertexSet> hitting_set_at_most(const Hypergraph& h, std::size_t k,
                                             const SolverLimits& limits = {},
                                             const std::vector<bool>& forbidden = {});

std::vector<Hyperedge> max_matching(const Hypergraph& g, const SolverLimits& limits = {});
std::vector<Hyperedge> max_set_packing(const Hypergraph& h, const SolverLimits& limits = {});

// Size of a maximum matching, by blossom contraction.
std::size_t matching_number(std::size_t n, const std::vector<Hyperedge>& edges);

/// Generic packing engine over arbitrary non-empty sets in [0, n).
/// Returns indices (ascending) of a maximum family of pairwise-disjoint sets,
/// or of some packing of size >= cap once one is found.
std::vector<std::size_t> max_disjoint_sets(std::size_t n, const std::vector<VertexSet>& sets,
                                           const SolverLimits& limits = {},
                                           std::size_t cap = SIZE_MAX);

struct CutResult {
  Partition part;  // canonical labels, at most t parts
  std::size_t size = 0;
};

// Maximum number of edges crossing a partition into <= t parts.
// Isolated vertices go to part 0.
CutResult max_t_cut(const Hypergraph& g, std::size_t t, const SolverLimits& limits = {});

struct DegreeProfile {
  std::size_t k = 0;
  std::size_t threshold = 0;  // 20k
  VertexSet high;             // V_h: degree >= threshold
  VertexSet low;              // V_l
  std::vector<Hyperedge> low_edges;  // E_l: edges avoiding V_h
};

DegreeProfile degree_profile(const Hypergraph& g, std::size_t k);

inline constexpr std::uint64_t kRepresentativeGuard = 1'000'000;

/// A minimal k-representative subfamily: for every X with |X| <= k, if some
/// edge avoids X then some kept edge does. Greedy deletion in edge order,
/// followed by an exhaustive check over all such X (GuardExceeded when more
/// than kRepresentativeGuard sets X would be enumerated).
std::vector<Hyperedge> representative_family(const Hypergraph& h, std::size_t k,
                                             const SolverLimits& limits = {});

// The exhaustive check itself; `sub` must be a subfamily of h.
bool is_representative(const Hypergraph& h, const std::vector<Hyperedge>& sub, std::size_t k);

bool is_hitting_set(const Hypergraph& h, std::span<const VertexId> s);
// Pairwise disjoint and every edge present in h.
bool is_packing(const Hypergraph& h, const std::vector<Hyperedge>& edges);
// Edges of g whose endpoints lie in different parts.
std::size_t cut_size(const Hypergraph& g, const Partition& part);

}  // namespace querylab
