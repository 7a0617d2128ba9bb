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

#include "querylab/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "querylab/errors.hpp"
#include "querylab/rng.hpp"

namespace querylab {

__extension__ typedef unsigned __int128 u128;

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    const std::uint64_t num = n - r + i;
    // result * num / i stays exact because result * num is divisible by i.
    const u128 wide = static_cast<u128>(result) * num / i;
    if (wide > UINT64_MAX) return UINT64_MAX;
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

Hypergraph::Hypergraph(std::size_t n, std::size_t d, std::vector<Hyperedge> edges)
    : n_(n), d_(d), edges_(std::move(edges)) {
  if (d_ < 2) throw InvalidArgument("hypergraph arity must be at least 2");
  if (n_ < 1) throw InvalidArgument("hypergraph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.size() != d_) {
      throw InvalidArgument("edge has " + std::to_string(e.size()) + " vertices, expected " +
                            std::to_string(d_));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidArgument("edge repeats a vertex");
    }
    if (e.back() >= n_) {
      throw InvalidArgument("vertex " + std::to_string(e.back()) + " out of range for n=" +
                            std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Hypergraph::contains(const Hyperedge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Hypergraph::index_of(const Hyperedge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<std::size_t> Hypergraph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& e : edges_)
    for (VertexId v : e) ++deg[v];
  return deg;
}

std::vector<std::vector<std::uint32_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::uint32_t>> inc(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (VertexId v : edges_[i]) inc[v].push_back(static_cast<std::uint32_t>(i));
  return inc;
}

Hypergraph unite(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.d() != b.d()) {
    throw InvalidArgument("union of hypergraphs with different n or d");
  }
  std::vector<Hyperedge> merged;
  merged.reserve(a.num_edges() + b.num_edges());
  std::set_union(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end(),
                 std::back_inserter(merged));
  return Hypergraph(a.n(), a.d(), std::move(merged));
}

void validate(const Hypergraph& h) {
  if (h.d() < 2 || h.n() < 1) throw std::logic_error("bad hypergraph dimensions");
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const auto& e = h.edge(i);
    if (e.size() != h.d()) throw std::logic_error("edge arity mismatch");
    for (std::size_t j = 0; j + 1 < e.size(); ++j)
      if (e[j] >= e[j + 1]) throw std::logic_error("edge not strictly increasing");
    if (e.back() >= h.n()) throw std::logic_error("edge vertex out of range");
    if (i > 0 && !(h.edge(i - 1) < e)) throw std::logic_error("edges not strictly sorted");
  }
}

std::string_view to_string(PlantedTruth::Kind kind) noexcept {
  switch (kind) {
    case PlantedTruth::Kind::HittingSet: return "hitting-set";
    case PlantedTruth::Kind::Packing: return "packing";
    case PlantedTruth::Kind::Cut: return "cut";
  }
  return "unknown";
}

namespace {

// Advances `comb` to the next r-combination of [0, n) in lex order.
bool next_combination(std::vector<VertexId>& comb, std::size_t n) {
  const std::size_t r = comb.size();
  for (std::size_t i = r; i-- > 0;) {
    if (comb[i] < n - r + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<VertexId> first_combination(std::size_t r) {
  std::vector<VertexId> comb(r);
  std::iota(comb.begin(), comb.end(), VertexId{0});
  return comb;
}

std::vector<VertexId> random_permutation(std::size_t n, Rng& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(i)]);
  return perm;
}

Hyperedge random_edge(std::size_t n, std::size_t d, Rng& rng) {
  Hyperedge e;
  e.reserve(d);
  while (e.size() < d) {
    const auto v = static_cast<VertexId>(rng.uniform(n));
    if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
  }
  std::sort(e.begin(), e.end());
  return e;
}

constexpr std::uint64_t kEnumerateLimit = 1u << 20;

// Draws `count` distinct edges satisfying `accept` and not in `exclude`.
// Small universes are enumerated and partially shuffled; large ones use
// rejection sampling.
template <class Accept>
std::vector<Hyperedge> draw_edges(std::size_t n, std::size_t d, std::size_t count, Rng& rng,
                                  Accept accept, const std::set<Hyperedge>& exclude) {
  if (count == 0) return {};
  if (d > n) throw InvalidArgument("edge arity exceeds vertex count");
  const std::uint64_t universe = binomial(n, d);
  if (universe <= kEnumerateLimit) {
    std::vector<Hyperedge> pool;
    auto comb = first_combination(d);
    do {
      if (accept(comb) && !exclude.contains(comb)) pool.push_back(comb);
    } while (next_combination(comb, n));
    if (pool.size() < count) {
      throw InvalidArgument("requested " + std::to_string(count) + " edges but only " +
                            std::to_string(pool.size()) + " qualify");
    }
    for (std::size_t i = 0; i < count; ++i) std::swap(pool[i], pool[i + rng.uniform(pool.size() - i)]);
    pool.resize(count);
    return pool;
  }
  std::set<Hyperedge> chosen;
  const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(count) + 100000;
  for (std::uint64_t attempt = 0; chosen.size() < count; ++attempt) {
    if (attempt >= max_attempts) throw InvalidArgument("could not draw enough qualifying edges");
    auto e = random_edge(n, d, rng);
    if (accept(e) && !exclude.contains(e)) chosen.insert(std::move(e));
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

Hypergraph gen_gnp(std::size_t n, std::size_t d, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("edge probability must lie in [0, 1]");
  std::vector<Hyperedge> edges;
  Rng rng(seed, "gnp");
  if (d <= n && p > 0.0) {
    auto comb = first_combination(d);
    do {
      if (rng.bernoulli(p)) edges.push_back(comb);
    } while (next_combination(comb, n));
  }
  return Hypergraph(n, d, std::move(edges));
}

PlantedInstance gen_planted_hitting_set(std::size_t n, std::size_t d, std::size_t k, std::size_t m,
                                        std::uint64_t seed) {
  if (k < 1 || k > n) throw InvalidArgument("planted hitting set needs 1 <= k <= n");
  if (d > n) throw InvalidArgument("edge arity exceeds vertex count");
  const std::uint64_t feasible = binomial(n, d) - binomial(n - k, d);
  if (m > feasible) {
    throw InvalidArgument("m=" + std::to_string(m) + " exceeds the " + std::to_string(feasible) +
                          " edges that meet a " + std::to_string(k) + "-set");
  }
  Rng rng(seed, "planted-hs");
  auto perm = random_permutation(n, rng);
  VertexSet planted(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(planted.begin(), planted.end());
  auto meets = [&](const Hyperedge& e) { return intersects(e, planted); };
  auto edges = draw_edges(n, d, m, rng, meets, {});
  return {Hypergraph(n, d, std::move(edges)),
          PlantedTruth{PlantedTruth::Kind::HittingSet, k,
                       decltype(PlantedTruth::witness)(std::in_place_index<0>, std::move(planted))}};
}

PlantedInstance gen_planted_packing(std::size_t n, std::size_t d, std::size_t k, std::size_t extra,
                                    std::uint64_t seed) {
  if (d < 2) throw InvalidArgument("hypergraph arity must be at least 2");
  if (d * k > n) throw InvalidArgument("d*k exceeds n: cannot plant a packing");
  Rng rng(seed, "planted-packing");
  auto perm = random_permutation(n, rng);
  std::vector<Hyperedge> planted;
  for (std::size_t i = 0; i < k; ++i) {
    Hyperedge e(perm.begin() + static_cast<std::ptrdiff_t>(i * d),
                perm.begin() + static_cast<std::ptrdiff_t>((i + 1) * d));
    std::sort(e.begin(), e.end());
    planted.push_back(std::move(e));
  }
  std::sort(planted.begin(), planted.end());
  std::set<Hyperedge> exclude(planted.begin(), planted.end());
  auto extras = draw_edges(n, d, extra, rng, [](const Hyperedge&) { return true; }, exclude);
  std::vector<Hyperedge> all = planted;
  all.insert(all.end(), extras.begin(), extras.end());
  return {Hypergraph(n, d, std::move(all)),
          PlantedTruth{PlantedTruth::Kind::Packing, k, std::move(planted)}};
}

PlantedInstance gen_planted_cut(std::size_t n, std::size_t t, std::size_t k, std::uint64_t seed,
                                std::size_t extra) {
  if (t < 2) throw InvalidArgument("cut needs t >= 2 parts");
  if (k < 1) throw InvalidArgument("cut needs k >= 1");
  if (n < t) throw InvalidArgument("cut needs n >= t");
  Rng rng(seed, "planted-cut");
  auto perm = random_permutation(n, rng);
  Partition part(n);
  std::vector<std::uint64_t> sizes(t, 0);
  for (std::size_t i = 0; i < n; ++i) {
    part[perm[i]] = static_cast<std::uint32_t>(i % t);
    ++sizes[i % t];
  }
  std::uint64_t same = 0;
  for (auto s : sizes) same += binomial(s, 2);
  const std::uint64_t cross = binomial(n, 2) - same;
  if (k > cross) {
    throw InvalidArgument("k=" + std::to_string(k) + " exceeds the " + std::to_string(cross) +
                          " possible cross pairs");
  }
  auto is_cross = [&](const Hyperedge& e) { return part[e[0]] != part[e[1]]; };
  auto edges = draw_edges(n, 2, k, rng, is_cross, {});
  const auto intra = static_cast<std::size_t>(std::min<std::uint64_t>(extra, same));
  auto more = draw_edges(n, 2, intra, rng, [&](const Hyperedge& e) { return !is_cross(e); }, {});
  edges.insert(edges.end(), more.begin(), more.end());
  return {Hypergraph(n, 2, std::move(edges)),
          PlantedTruth{PlantedTruth::Kind::Cut, k,
                       decltype(PlantedTruth::witness)(std::in_place_index<2>, canonical_partition(part))}};
}

Partition canonical_partition(const Partition& part) {
  std::vector<std::uint32_t> relabel;
  std::vector<std::uint32_t> seen;
  Partition out(part.size());
  for (std::size_t v = 0; v < part.size(); ++v) {
    const auto p = part[v];
    if (p >= seen.size()) seen.resize(p + 1, UINT32_MAX);
    if (seen[p] == UINT32_MAX) seen[p] = static_cast<std::uint32_t>(relabel.size()), relabel.push_back(p);
    out[v] = seen[p];
  }
  return out;
}

namespace {

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected unsigned integers");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, d = 0, m = 0;
  std::vector<Hyperedge> edges;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto nums = parse_numbers(line, line_no);
    if (nums.empty()) continue;
    if (!have_header) {
      if (nums.size() != 3) throw InvalidArgument("malformed header: expected \"n d m\"");
      n = nums[0], d = nums[1], m = nums[2];
      if (d < 2) throw InvalidArgument("header arity must be at least 2");
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw InvalidArgument("more edge lines than the header's m");
    if (nums.size() != d) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": edge has wrong arity");
    }
    Hyperedge e;
    for (auto v : nums) {
      if (v >= n) throw InvalidArgument("line " + std::to_string(line_no) + ": vertex out of range");
      e.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(e));
  }
  if (!have_header) throw InvalidArgument("missing header line");
  if (edges.size() != m) {
    throw InvalidArgument("header claims " + std::to_string(m) + " edges but " +
                          std::to_string(edges.size()) + " were given");
  }
  return Hypergraph(n, d, std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.d() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hypergraph(buffer.str());
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize_hypergraph(h);
  if (!out) throw std::runtime_error("write failed for " + path);
}

bool is_subset(std::span<const VertexId> a, std::span<const VertexId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(std::span<const VertexId> a, std::span<const VertexId> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace querylab
