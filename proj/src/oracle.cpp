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

#include "querylab/oracle.hpp"

#include <algorithm>
#include <string>

#include "querylab/errors.hpp"
#include "querylab/rng.hpp"

namespace querylab {

std::string_view to_string(EdgeSelectionPolicy p) noexcept {
  return p == EdgeSelectionPolicy::Lexicographic ? "lex" : "random";
}

OracleSession::OracleSession(Hypergraph hidden, EdgeSelectionPolicy policy, std::uint64_t policy_seed)
    : hidden_(std::move(hidden)),
      incidence_(hidden_.incidence()),
      policy_(policy),
      policy_seed_(policy_seed),
      stamp_(hidden_.n(), 0),
      part_of_(hidden_.n(), 0) {
  if (hidden_.d() > 64) throw InvalidArgument("oracle supports arity up to 64");
}

void OracleSession::check_parts(std::span<const Part> parts, std::size_t expected) {
  if (parts.size() != expected) {
    throw InvalidQuery("expected " + std::to_string(expected) + " parts, got " +
                       std::to_string(parts.size()));
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw InvalidQuery("part " + std::to_string(p) + " is empty");
    for (VertexId v : parts[p]) {
      if (v >= hidden_.n()) throw InvalidQuery("vertex " + std::to_string(v) + " out of range");
      if (stamp_[v] == epoch_) {
        throw InvalidQuery("vertex " + std::to_string(v) + " appears in more than one part");
      }
      stamp_[v] = epoch_;
      part_of_[v] = static_cast<std::uint8_t>(p);
    }
  }
}

std::size_t OracleSession::find_edge(std::span<const Part> parts, bool want_any) {
  std::size_t smallest = 0;
  for (std::size_t p = 1; p < parts.size(); ++p)
    if (parts[p].size() < parts[smallest].size()) smallest = p;

  const std::uint64_t full = parts.size() == 64 ? ~0ULL : (1ULL << parts.size()) - 1;
  std::size_t best = npos;
  scratch_.clear();
  for (VertexId v : parts[smallest]) {
    for (std::uint32_t idx : incidence_[v]) {
      std::uint64_t seen = 0;
      bool ok = true;
      for (VertexId u : hidden_.edge(idx)) {
        if (stamp_[u] != epoch_) { ok = false; break; }
        seen |= 1ULL << part_of_[u];
      }
      if (!ok || seen != full) continue;
      if (want_any) return idx;
      if (policy_ == EdgeSelectionPolicy::Lexicographic) {
        best = std::min<std::size_t>(best, idx);
      } else {
        scratch_.push_back(idx);
      }
    }
  }
  if (policy_ == EdgeSelectionPolicy::UniformRandom && !scratch_.empty()) {
    std::sort(scratch_.begin(), scratch_.end());
    Rng rng(derive_seed(policy_seed_, calls_));
    best = scratch_[rng.uniform(scratch_.size())];
  }
  return best;
}

void OracleSession::count(Kind kind) {
  switch (kind) {
    case Kind::Bis: ++stats_.bis; break;
    case Kind::Bise: ++stats_.bise; break;
    case Kind::Gpis: ++stats_.gpis; break;
    case Kind::Gpise: ++stats_.gpise; break;
  }
  ++calls_;
}

void OracleSession::log_call(Kind kind, std::span<const Part> parts,
                             const std::optional<Hyperedge>* edge, bool answer) {
  if (!log_) return;
  static constexpr std::string_view names[] = {"bis", "bise", "gpis", "gpise"};
  std::string line(names[static_cast<int>(kind)]);
  line += " |";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p) line += " ;";
    for (VertexId v : parts[p]) line += ' ' + std::to_string(v);
  }
  line += " |";
  if (edge) {
    if (*edge) {
      for (VertexId v : **edge) line += ' ' + std::to_string(v);
    } else {
      line += " NULL";
    }
  } else {
    line += answer ? " yes" : " no";
  }
  *log_ << line << '\n';
}

bool OracleSession::gpis(std::span<const Part> parts) {
  check_parts(parts, hidden_.d());
  const bool answer = find_edge(parts, true) != npos;
  log_call(Kind::Gpis, parts, nullptr, answer);
  count(Kind::Gpis);
  return answer;
}

std::optional<Hyperedge> OracleSession::gpise(std::span<const Part> parts) {
  check_parts(parts, hidden_.d());
  const auto idx = find_edge(parts, false);
  std::optional<Hyperedge> edge;
  if (idx != npos) edge = hidden_.edge(idx);
  log_call(Kind::Gpise, parts, &edge, false);
  count(Kind::Gpise);
  return edge;
}

bool OracleSession::bis(Part a, Part b) {
  if (hidden_.d() != 2) throw InvalidQuery("BIS requires a graph (d = 2)");
  const Part parts[] = {a, b};
  check_parts(parts, 2);
  const bool answer = find_edge(parts, true) != npos;
  log_call(Kind::Bis, parts, nullptr, answer);
  count(Kind::Bis);
  return answer;
}

std::optional<Hyperedge> OracleSession::bise(Part a, Part b) {
  if (hidden_.d() != 2) throw InvalidQuery("BISE requires a graph (d = 2)");
  const Part parts[] = {a, b};
  check_parts(parts, 2);
  const auto idx = find_edge(parts, false);
  std::optional<Hyperedge> edge;
  if (idx != npos) edge = hidden_.edge(idx);
  log_call(Kind::Bise, parts, &edge, false);
  count(Kind::Bise);
  return edge;
}

namespace {
std::vector<Part> as_parts(const std::vector<VertexSet>& parts) {
  return {parts.begin(), parts.end()};
}
}  // namespace

bool OracleSession::gpis(const std::vector<VertexSet>& parts) {
  const auto view = as_parts(parts);
  return gpis(std::span<const Part>(view));
}

std::optional<Hyperedge> OracleSession::gpise(const std::vector<VertexSet>& parts) {
  const auto view = as_parts(parts);
  return gpise(std::span<const Part>(view));
}

void OracleSession::annotate(std::string_view tag, std::string_view payload) {
  if (log_) *log_ << "# " << tag << " | " << payload << '\n';
}

}  // namespace querylab
