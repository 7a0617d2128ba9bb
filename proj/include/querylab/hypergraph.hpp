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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace querylab {

using VertexId = std::uint32_t;

// Strictly increasing list of vertices.
using VertexSet = std::vector<VertexId>;

// Strictly increasing list of exactly d vertices.
using Hyperedge = std::vector<VertexId>;

// part[v] is the part index of vertex v.
using Partition = std::vector<std::uint32_t>;

// C(n, r) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept;

/// A d-uniform hypergraph on vertices [0, n); graphs are the d = 2 case.
///
/// Edges are canonical (sorted, no repeats) and kept globally sorted and
/// deduplicated, so every iteration order is deterministic. Values are
/// immutable after construction.
class Hypergraph {
 public:
  // Throws InvalidArgument on d < 2, n < 1, wrong arity, repeated vertex
  // inside an edge, or an out-of-range vertex. Edge vertex order is free.
  Hypergraph(std::size_t n, std::size_t d, std::vector<Hyperedge> edges = {});

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] std::size_t d() const noexcept { return d_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] bool empty() const noexcept { return edges_.empty(); }
  [[nodiscard]] const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Hyperedge& edge(std::size_t i) const { return edges_.at(i); }

  [[nodiscard]] bool contains(const Hyperedge& e) const;
  // Index of e in the canonical edge order, or num_edges() if absent.
  [[nodiscard]] std::size_t index_of(const Hyperedge& e) const;
  [[nodiscard]] std::vector<std::size_t> degrees() const;
  // Edge indices incident to each vertex, ascending.
  [[nodiscard]] std::vector<std::vector<std::uint32_t>> incidence() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<Hyperedge> edges_;
};

// Deduplicated union; throws InvalidArgument when n or d differ.
Hypergraph unite(const Hypergraph& a, const Hypergraph& b);

// Throws std::logic_error if any structural invariant is broken.
void validate(const Hypergraph& h);

struct PlantedTruth {
  enum class Kind { HittingSet, Packing, Cut };
  Kind kind;
  std::size_t k;
  // VertexSet for HittingSet, edge list for Packing, Partition for Cut.
  std::variant<VertexSet, std::vector<Hyperedge>, Partition> witness;
};

std::string_view to_string(PlantedTruth::Kind kind) noexcept;

struct PlantedInstance {
  Hypergraph graph;
  PlantedTruth truth;
};

// Each of the C(n, d) potential edges independently with probability p.
Hypergraph gen_gnp(std::size_t n, std::size_t d, double p, std::uint64_t seed);

// m distinct edges, each meeting a hidden random k-set.
PlantedInstance gen_planted_hitting_set(std::size_t n, std::size_t d, std::size_t k, std::size_t m,
                                        std::uint64_t seed);

// k pairwise-disjoint planted edges plus `extra` distinct random edges.
PlantedInstance gen_planted_packing(std::size_t n, std::size_t d, std::size_t k, std::size_t extra,
                                    std::uint64_t seed);

// Balanced random t-partition, k random cross edges and `extra` random
// same-part edges (as many as exist, if fewer).
PlantedInstance gen_planted_cut(std::size_t n, std::size_t t, std::size_t k, std::uint64_t seed,
                                std::size_t extra = 0);

// Relabel parts by first occurrence so vertex 0 is in part 0.
Partition canonical_partition(const Partition& part);

// Text format: '#' comment lines, header "n d m", then m edge lines.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

Hypergraph read_hypergraph_file(const std::string& path);
void write_hypergraph_file(const std::string& path, const Hypergraph& h);

// Small set helpers shared by several modules.
bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b);
bool intersects(std::span<const VertexId> a, std::span<const VertexId> b);

}  // namespace querylab
