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

#include "querylab/sunflower.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "querylab/errors.hpp"

namespace querylab {
namespace {

VertexSet minus(const Hyperedge& e, const VertexSet& core) {
  VertexSet out;
  std::set_difference(e.begin(), e.end(), core.begin(), core.end(), std::back_inserter(out));
  return out;
}

struct Petals {
  std::vector<VertexSet> petals;
  std::vector<std::size_t> edge_index;
};

Petals petals_of(const Hypergraph& h, const VertexSet& core) {
  Petals p;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    if (!is_subset(core, e)) continue;
    p.petals.push_back(minus(e, core));
    p.edge_index.push_back(i);
  }
  return p;
}

// Indices into p.petals of a maximum disjoint subfamily (or one of size >= cap).
std::vector<std::size_t> pack_petals(const Hypergraph& h, const Petals& p, std::size_t petal_size,
                                     const SolverLimits& limits, std::size_t cap) {
  std::vector<std::size_t> out;
  if (petal_size == 1) {
    for (std::size_t i = 0; i < p.petals.size() && out.size() < cap; ++i) out.push_back(i);
    return out;
  }
  if (petal_size == 2) {
    const Hypergraph g(h.n(), 2, p.petals);
    for (const auto& e : max_matching(g, limits)) {
      const auto it = std::find(p.petals.begin(), p.petals.end(), e);
      out.push_back(static_cast<std::size_t>(it - p.petals.begin()));
      if (out.size() >= cap) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  return max_disjoint_sets(h.n(), p.petals, limits, cap);
}

void check_core(const Hypergraph& h, const VertexSet& core) {
  if (core.size() >= h.d()) throw InvalidArgument("a core must be smaller than the edge size");
  for (std::size_t i = 0; i < core.size(); ++i) {
    if (core[i] >= h.n()) throw InvalidArgument("core vertex out of range");
    if (i > 0 && core[i - 1] >= core[i]) throw InvalidArgument("core must be strictly increasing");
  }
}

std::size_t generic_number(const Hypergraph& h, const VertexSet& core, const SolverLimits& limits,
                           std::size_t cap) {
  const auto p = petals_of(h, core);
  if (p.petals.empty()) return 0;
  return pack_petals(h, p, h.d() - core.size(), limits, cap).size();
}

CoreReport assemble(const Hypergraph& h, std::size_t k, std::vector<CoreInfo> cores) {
  CoreReport r;
  r.k = k;
  r.d = h.d();
  r.large_threshold = 10 * h.d() * k;
  r.cores = std::move(cores);
  std::set<VertexSet> significant;
  for (auto& c : r.cores) {
    c.large = c.number > r.large_threshold;
    c.significant = c.number > k;
    if (c.large) r.large_cores.push_back(c.core);
    if (c.significant) significant.insert(c.core);
  }
  for (const auto& e : h.edges()) {
    const bool has_large = std::any_of(r.large_cores.begin(), r.large_cores.end(),
                                       [&](const VertexSet& c) { return is_subset(c, e); });
    if (!has_large) r.small_edges.push_back(e);
  }
  for (const auto& c : r.large_cores) {
    const bool below = std::any_of(significant.begin(), significant.end(), [&](const VertexSet& s) {
      return s.size() < c.size() && is_subset(s, c);
    });
    if (!below) r.c_prime.push_back(c);
  }
  return r;
}

}  // namespace

bool is_sunflower(const Sunflower& s) {
  for (const auto& e : s.edges) {
    if (!is_subset(s.core, e) || e.size() <= s.core.size()) return false;
  }
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < s.edges.size(); ++j) {
      VertexSet common;
      std::set_intersection(s.edges[i].begin(), s.edges[i].end(), s.edges[j].begin(), s.edges[j].end(),
                            std::back_inserter(common));
      if (common != s.core) return false;
    }
  }
  return true;
}

std::size_t sunflower_number(const Hypergraph& h, const VertexSet& core, const SolverLimits& limits,
                             std::size_t cap) {
  check_core(h, core);
  return generic_number(h, core, limits, cap);
}

std::vector<VertexSet> candidate_cores(const Hypergraph& h) {
  std::set<VertexSet> seen{VertexSet{}};
  const std::size_t d = h.d();
  for (const auto& e : h.edges()) {
    for (std::uint32_t mask = 1; mask + 1 < (1u << d); ++mask) {
      VertexSet c;
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> i & 1u) c.push_back(e[i]);
      seen.insert(std::move(c));
    }
  }
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  return out;
}

std::optional<Sunflower> find_sunflower(const Hypergraph& h, std::size_t t, const SolverLimits& limits) {
  if (t == 0) throw InvalidArgument("find_sunflower needs t >= 1");
  for (const auto& core : candidate_cores(h)) {
    const auto p = petals_of(h, core);
    if (p.petals.size() < t) continue;
    const auto pick = pack_petals(h, p, h.d() - core.size(), limits, t);
    if (pick.size() < t) continue;
    Sunflower s{core, {}};
    for (std::size_t i = 0; i < t; ++i) s.edges.push_back(h.edge(p.edge_index[pick[i]]));
    return s;
  }
  return std::nullopt;
}

CoreReport classify_cores_serial(const Hypergraph& h, std::size_t k, const SolverLimits& limits) {
  const std::size_t cap = 10 * h.d() * k + 1;
  std::vector<CoreInfo> cores;
  for (auto& c : candidate_cores(h)) {
    CoreInfo info;
    info.number = generic_number(h, c, limits, cap);
    info.core = std::move(c);
    cores.push_back(std::move(info));
  }
  return assemble(h, k, std::move(cores));
}

CoreReport classify_cores(const Hypergraph& h, std::size_t k, const SolverLimits& limits) {
  const std::size_t cap = 10 * h.d() * k + 1;
  const auto candidates = candidate_cores(h);
  std::vector<CoreInfo> cores(candidates.size());
  const auto deg = h.degrees();
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& c = candidates[static_cast<std::size_t>(i)];
    auto& info = cores[static_cast<std::size_t>(i)];
    info.core = c;
    try {
      if (h.d() == 2 && c.size() == 1) {
        info.number = std::min(deg[c.front()], cap);
      } else {
        info.number = generic_number(h, c, limits, cap);
      }
    } catch (...) {
#pragma omp critical(querylab_core_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(h, k, std::move(cores));
}

nlohmann::json to_json(const CoreReport& r) {
  nlohmann::json cores = nlohmann::json::array();
  for (const auto& c : r.cores) {
    cores.push_back({{"core", c.core}, {"sunflower_number", c.number}, {"large", c.large},
                     {"significant", c.significant}});
  }
  return {{"k", r.k},
          {"d", r.d},
          {"large_threshold", r.large_threshold},
          {"cores", cores},
          {"large_cores", r.large_cores},
          {"small_edges", r.small_edges},
          {"c_prime", r.c_prime}};
}

}  // namespace querylab
