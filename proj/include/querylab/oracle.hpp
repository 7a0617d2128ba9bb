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
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "querylab/hypergraph.hpp"

namespace querylab {

enum class EdgeSelectionPolicy {
  Lexicographic,  // smallest qualifying edge in canonical order
  UniformRandom,  // uniform over qualifying edges, keyed by (policy_seed, call index)
};

std::string_view to_string(EdgeSelectionPolicy p) noexcept;

struct QueryStats {
  std::uint64_t bis = 0;
  std::uint64_t bise = 0;
  std::uint64_t gpis = 0;
  std::uint64_t gpise = 0;

  [[nodiscard]] std::uint64_t total() const noexcept { return bis + bise + gpis + gpise; }
  friend bool operator==(const QueryStats&, const QueryStats&) = default;
  friend QueryStats operator-(const QueryStats& a, const QueryStats& b) noexcept {
    return {a.bis - b.bis, a.bise - b.bise, a.gpis - b.gpis, a.gpise - b.gpise};
  }
  friend QueryStats operator+(const QueryStats& a, const QueryStats& b) noexcept {
    return {a.bis + b.bis, a.bise + b.bise, a.gpis + b.gpis, a.gpise + b.gpise};
  }
};

using Part = std::span<const VertexId>;

/// A hidden hypergraph behind the BIS / BISE / GPIS / GPISE oracles.
///
/// Every call validates its input before counting: exactly d parts (two for
/// the bipartite oracles, which also require d == 2), each non-empty, all
/// vertices in range and no vertex in more than one part. Since parts are
/// disjoint, an edge qualifies iff each of its vertices lies in a different
/// part. Rejected calls throw InvalidQuery and leave counters untouched.
///
/// Sessions are single-owner and not thread-safe.
class OracleSession {
 public:
  explicit OracleSession(Hypergraph hidden,
                         EdgeSelectionPolicy policy = EdgeSelectionPolicy::Lexicographic,
                         std::uint64_t policy_seed = 0);

  OracleSession(OracleSession&&) noexcept = default;
  OracleSession& operator=(OracleSession&&) noexcept = default;
  OracleSession(const OracleSession&) = delete;
  OracleSession& operator=(const OracleSession&) = delete;

  // The vertex set is public knowledge; the edges are not.
  [[nodiscard]] std::size_t n() const noexcept { return hidden_.n(); }
  [[nodiscard]] std::size_t d() const noexcept { return hidden_.d(); }
  [[nodiscard]] EdgeSelectionPolicy policy() const noexcept { return policy_; }

  bool gpis(std::span<const Part> parts);
  std::optional<Hyperedge> gpise(std::span<const Part> parts);
  bool bis(Part a, Part b);
  std::optional<Hyperedge> bise(Part a, Part b);

  bool gpis(const std::vector<VertexSet>& parts);
  std::optional<Hyperedge> gpise(const std::vector<VertexSet>& parts);

  // Snapshot; not a query.
  [[nodiscard]] QueryStats stats() const noexcept { return stats_; }

  // One line per completed call: "kind | p1 ; p2 ; ... | answer".
  // The stream must outlive the session or be reset to nullptr.
  void set_query_log(std::ostream* log) noexcept { log_ = log; }
  // Writes "# <tag> | <payload>" to the log, if any.
  void annotate(std::string_view tag, std::string_view payload);
  [[nodiscard]] bool logging() const noexcept { return log_ != nullptr; }

 private:
  enum class Kind { Bis, Bise, Gpis, Gpise };

  void check_parts(std::span<const Part> parts, std::size_t expected);
  // Index of the edge to report, or npos; `want_any` stops at the first hit.
  std::size_t find_edge(std::span<const Part> parts, bool want_any);
  void count(Kind kind);
  void log_call(Kind kind, std::span<const Part> parts, const std::optional<Hyperedge>* edge,
                bool answer);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Hypergraph hidden_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  EdgeSelectionPolicy policy_;
  std::uint64_t policy_seed_;
  QueryStats stats_;
  std::uint64_t calls_ = 0;
  // Part membership per vertex, valid when stamp_[v] == epoch_.
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint8_t> part_of_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> scratch_;
  std::ostream* log_ = nullptr;
};

}  // namespace querylab
