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

#include "querylab/solvers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "querylab/errors.hpp"

namespace querylab {

SearchBudget::SearchBudget(const SolverLimits& limits)
    : limits_(limits), start_(std::chrono::steady_clock::now()) {}

void SearchBudget::tick() {
  ++nodes_;
  if (nodes_ > limits_.max_branch_nodes) {
    throw BudgetExceeded("solver exceeded " + std::to_string(limits_.max_branch_nodes) + " branch nodes");
  }
  if (limits_.time_budget.count() > 0 && (nodes_ & 0x3ff) == 0 &&
      std::chrono::steady_clock::now() - start_ > limits_.time_budget) {
    throw BudgetExceeded("solver exceeded " + std::to_string(limits_.time_budget.count()) + " ms");
  }
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

void require_graph(const Hypergraph& g, const char* what) {
  if (g.d() != 2) throw InvalidArgument(std::string(what) + " needs a graph (d = 2)");
}

// ---------------------------------------------------------------------------
// Hitting set: bounded search tree on the uncovered edge with the fewest
// usable vertices; earlier siblings are banned in later branches.

class HittingSearch {
 public:
  HittingSearch(const Hypergraph& h, SearchBudget& budget, const std::vector<bool>& forbidden)
      : h_(h), budget_(budget), inc_(h.incidence()), hits_(h.num_edges(), 0),
        allowed_(h.n(), 1), mark_(h.n(), 0) {
    for (std::size_t v = 0; v < forbidden.size() && v < h.n(); ++v)
      if (forbidden[v]) allowed_[v] = 0;
  }

  void choose(VertexId v) {
    stack_.push_back(v);
    allowed_[v] = 0;
    for (auto e : inc_[v]) ++hits_[e];
  }
  void unchoose(VertexId v) {
    stack_.pop_back();
    allowed_[v] = 1;
    for (auto e : inc_[v]) --hits_[e];
  }

  bool search(std::size_t k) {
    budget_.tick();
    std::size_t pick = npos;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t e = 0; e < h_.num_edges() && fewest > 1; ++e) {
      if (hits_[e] != 0) continue;
      std::size_t usable = 0;
      for (VertexId v : h_.edge(e)) usable += allowed_[v];
      if (usable < fewest) {
        fewest = usable;
        pick = e;
      }
    }
    if (pick == npos) {
      found_ = stack_;
      return true;
    }
    if (fewest == 0 || k == 0) return false;
    if (fewest > 1 && lower_bound() > k) return false;

    const Hyperedge options = h_.edge(pick);
    std::vector<VertexId> banned;
    bool ok = false;
    for (VertexId v : options) {
      if (!allowed_[v]) continue;
      choose(v);
      ok = search(k - 1);
      unchoose(v);
      if (ok) break;
      allowed_[v] = 0;
      banned.push_back(v);
    }
    for (VertexId v : banned) allowed_[v] = 1;
    return ok;
  }

  // Uncovered edges with pairwise-disjoint usable vertices need distinct picks.
  std::size_t lower_bound() {
    ++epoch_;
    std::size_t count = 0;
    for (std::size_t e = 0; e < h_.num_edges(); ++e) {
      if (hits_[e] != 0) continue;
      bool fresh = true;
      for (VertexId v : h_.edge(e))
        if (allowed_[v] && mark_[v] == epoch_) fresh = false;
      if (!fresh) continue;
      ++count;
      for (VertexId v : h_.edge(e))
        if (allowed_[v]) mark_[v] = epoch_;
    }
    return count;
  }

  bool in_uncovered_edge(VertexId v) const {
    for (auto e : inc_[v])
      if (hits_[e] == 0) return true;
    return false;
  }

  bool allowed(VertexId v) const { return allowed_[v] != 0; }
  void forbid(VertexId v) { allowed_[v] = 0; }
  const std::vector<VertexId>& found() const { return found_; }
  const std::vector<VertexId>& stack() const { return stack_; }

 private:
  const Hypergraph& h_;
  SearchBudget& budget_;
  std::vector<std::vector<std::uint32_t>> inc_;
  std::vector<std::uint32_t> hits_;
  std::vector<std::uint8_t> allowed_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> stack_;
  std::vector<VertexId> found_;
};

VertexSet lex_min_hitting_set(const Hypergraph& h, const SolverLimits& limits) {
  if (h.empty()) return {};
  SearchBudget budget(limits);
  HittingSearch search(h, budget, {});
  std::size_t opt = search.lower_bound();
  while (!search.search(opt)) ++opt;

  // Fix vertices one at a time, smallest first, keeping an optimum reachable
  // with the remaining picks drawn from larger vertices only.
  for (std::size_t i = 0; i < opt; ++i) {
    bool placed = false;
    for (VertexId v = 0; v < h.n() && !placed; ++v) {
      if (!search.allowed(v)) continue;
      if (!search.in_uncovered_edge(v)) {
        search.forbid(v);
        continue;
      }
      search.choose(v);
      if (search.search(opt - i - 1)) {
        placed = true;
      } else {
        search.unchoose(v);
        search.forbid(v);
      }
    }
    if (!placed) throw std::logic_error("hitting set reconstruction lost the optimum");
  }
  VertexSet out = search.stack();
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Set packing: branch on the smallest live vertex (take one of its sets, or
// drop the vertex); bound by the min of candidate count, free vertices / r
// and the size of a greedy hitting set of the candidates.

class PackingSearch {
 public:
  PackingSearch(std::size_t n, const std::vector<VertexSet>& sets, SearchBudget& budget)
      : sets_(sets), budget_(budget), mark_(n, 0), freq_(n, 0) {
    min_size_ = SIZE_MAX;
    for (const auto& s : sets_) min_size_ = std::min(min_size_, std::max<std::size_t>(s.size(), 1));
  }

  std::vector<std::size_t> run(std::vector<std::uint32_t> cands, std::size_t cap) {
    cap_ = cap;
    best_.clear();
    cur_.clear();
    done_ = cap_ == 0;
    greedy_seed(cands);
    if (!done_) recurse(cands);
    std::vector<std::size_t> out(best_.begin(), best_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool disjoint(std::uint32_t a, std::uint32_t b) const {
    return !intersects(sets_[a], sets_[b]);
  }

 private:
  void greedy_seed(const std::vector<std::uint32_t>& cands) {
    ++epoch_;
    std::vector<std::uint32_t> pick;
    for (auto c : cands) {
      bool free = true;
      for (VertexId v : sets_[c]) free = free && mark_[v] != epoch_;
      if (!free) continue;
      pick.push_back(c);
      for (VertexId v : sets_[c]) mark_[v] = epoch_;
    }
    best_ = pick;
    if (best_.size() >= cap_) done_ = true;
  }

  std::size_t greedy_hitting_bound(const std::vector<std::uint32_t>& cands) {
    std::vector<std::uint8_t> hit(cands.size(), 0);
    std::size_t remaining = cands.size();
    std::size_t picks = 0;
    std::vector<VertexId> touched;
    while (remaining > 0) {
      touched.clear();
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (hit[i]) continue;
        for (VertexId v : sets_[cands[i]]) {
          if (freq_[v]++ == 0) touched.push_back(v);
        }
      }
      VertexId bestv = touched.front();
      for (VertexId v : touched)
        if (freq_[v] > freq_[bestv]) bestv = v;
      for (VertexId v : touched) freq_[v] = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (hit[i]) continue;
        const auto& s = sets_[cands[i]];
        if (std::binary_search(s.begin(), s.end(), bestv)) {
          hit[i] = 1;
          --remaining;
        }
      }
      ++picks;
    }
    return picks;
  }

  void recurse(const std::vector<std::uint32_t>& cands) {
    budget_.tick();
    if (cur_.size() > best_.size()) {
      best_ = cur_;
      if (best_.size() >= cap_) {
        done_ = true;
        return;
      }
    }
    if (cands.empty()) return;

    ++epoch_;
    std::size_t live = 0;
    VertexId low = UINT32_MAX;
    for (auto c : cands) {
      low = std::min(low, sets_[c].front());
      for (VertexId v : sets_[c])
        if (mark_[v] != epoch_) {
          mark_[v] = epoch_;
          ++live;
        }
    }
    const std::size_t target = best_.size();
    std::size_t bound = std::min(cands.size(), live / min_size_);
    if (cur_.size() + bound <= target) return;
    bound = std::min(bound, greedy_hitting_bound(cands));
    if (cur_.size() + bound <= target) return;

    std::vector<std::uint32_t> next;
    for (auto c : cands) {
      if (sets_[c].front() != low) continue;
      next.clear();
      for (auto o : cands)
        if (o != c && disjoint(c, o)) next.push_back(o);
      cur_.push_back(c);
      recurse(next);
      cur_.pop_back();
      if (done_) return;
    }
    next.clear();
    for (auto o : cands)
      if (sets_[o].front() != low) next.push_back(o);
    recurse(next);
  }

  const std::vector<VertexSet>& sets_;
  SearchBudget& budget_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> freq_;
  std::uint32_t epoch_ = 0;
  std::size_t min_size_ = 1;
  std::size_t cap_ = SIZE_MAX;
  bool done_ = false;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> cur_;
};

std::vector<std::uint32_t> all_indices(std::size_t m) {
  std::vector<std::uint32_t> out(m);
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

// ---------------------------------------------------------------------------
// Edmonds' blossom algorithm.

class Blossom {
 public:
  Blossom(std::size_t n, const std::vector<Hyperedge>& edges)
      : n_(static_cast<int>(n)), adj_(n), match_(n, -1), p_(n), base_(n), used_(n), blossom_(n) {
    for (const auto& e : edges) {
      adj_[e[0]].push_back(static_cast<int>(e[1]));
      adj_[e[1]].push_back(static_cast<int>(e[0]));
    }
  }

  std::size_t solve() {
    std::size_t size = 0;
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int u : adj_[v])
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          ++size;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      if (end == -1) continue;
      ++size;
      while (end != -1) {
        const int pv = p_[end];
        const int ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return size;
  }

  const std::vector<int>& mate() const { return match_; }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          const int cur_base = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur_base;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, blossom_;
};

// ---------------------------------------------------------------------------
// Max t-cut on one connected component, vertices in ascending order.
// Target-mode search: the first assignment (parts tried in ascending order,
// new parts opened in order) reaching the target is lexicographically least.

class CutSearch {
 public:
  CutSearch(std::size_t s, std::size_t t, std::vector<std::vector<std::uint32_t>> adj, std::size_t m,
            SearchBudget& budget)
      : s_(s), t_(t), adj_(std::move(adj)), m_(m), budget_(budget), assign_(s, -1),
        cnt_(s * t, 0) {}

  std::size_t heuristic(std::vector<std::uint32_t>& out) const {
    out.assign(s_, 0);
    std::vector<std::size_t> score(t_);
    for (std::size_t v = 0; v < s_; ++v) {
      std::fill(score.begin(), score.end(), 0);
      for (auto u : adj_[v])
        if (u < v)
          for (std::size_t p = 0; p < t_; ++p) score[p] += out[u] != p;
      out[v] = static_cast<std::uint32_t>(std::max_element(score.begin(), score.end()) - score.begin());
    }
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t v = 0; v < s_; ++v) {
        std::fill(score.begin(), score.end(), 0);
        for (auto u : adj_[v])
          for (std::size_t p = 0; p < t_; ++p) score[p] += out[u] != p;
        const auto bestp = static_cast<std::uint32_t>(std::max_element(score.begin(), score.end()) - score.begin());
        if (score[bestp] > score[out[v]]) {
          out[v] = bestp;
          improved = true;
        }
      }
    }
    return value(out);
  }

  std::size_t value(const std::vector<std::uint32_t>& a) const {
    std::size_t c = 0;
    for (std::size_t v = 0; v < s_; ++v)
      for (auto u : adj_[v])
        if (u > v && a[u] != a[v]) ++c;
    return c;
  }

  bool reach(std::size_t target, std::vector<std::uint32_t>& out) {
    target_ = target;
    cur_ = 0;
    open_edges_ = m_;
    std::fill(assign_.begin(), assign_.end(), -1);
    std::fill(cnt_.begin(), cnt_.end(), 0);
    if (!recurse(0, 0)) return false;
    out = result_;
    return true;
  }

 private:
  bool recurse(std::size_t v, std::size_t used_parts) {
    budget_.tick();
    if (v == s_) {
      if (cur_ < target_) return false;
      result_.assign(s_, 0);
      for (std::size_t i = 0; i < s_; ++i) result_[i] = static_cast<std::uint32_t>(assign_[i]);
      return true;
    }
    std::size_t loss = 0;
    for (std::size_t u = v; u < s_; ++u) {
      std::uint32_t low = UINT32_MAX;
      for (std::size_t p = 0; p < t_; ++p) low = std::min(low, cnt_[u * t_ + p]);
      loss += low;
    }
    if (cur_ + open_edges_ - loss < target_) return false;

    const std::size_t limit = std::min(t_, used_parts + 1);
    for (std::size_t p = 0; p < limit; ++p) {
      assign_[v] = static_cast<int>(p);
      std::size_t gained = 0, closed = 0;
      for (auto u : adj_[v]) {
        if (u < v) {
          ++closed;
          if (static_cast<std::size_t>(assign_[u]) != p) ++gained;
        } else {
          ++cnt_[u * t_ + p];
        }
      }
      cur_ += gained;
      open_edges_ -= closed;
      const bool ok = recurse(v + 1, std::max(used_parts, p + 1));
      cur_ -= gained;
      open_edges_ += closed;
      for (auto u : adj_[v])
        if (u > v) --cnt_[u * t_ + p];
      if (ok) return true;
    }
    assign_[v] = -1;
    return false;
  }

  std::size_t s_, t_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::size_t m_;
  SearchBudget& budget_;
  std::vector<int> assign_;
  std::vector<std::uint32_t> cnt_;
  std::size_t target_ = 0, cur_ = 0, open_edges_ = 0;
  std::vector<std::uint32_t> result_;
};

std::vector<VertexSet> edge_sets(const Hypergraph& h) {
  return {h.edges().begin(), h.edges().end()};
}

}  // namespace

// ---------------------------------------------------------------------------

VertexSet min_hitting_set(const Hypergraph& h, const SolverLimits& limits) {
  return lex_min_hitting_set(h, limits);
}

VertexSet min_vertex_cover(const Hypergraph& g, const SolverLimits& limits) {
  require_graph(g, "min_vertex_cover");
  return lex_min_hitting_set(g, limits);
}

std::optional<VertexSet> hitting_set_at_most(const Hypergraph& h, std::size_t k, const SolverLimits& limits,
                                             const std::vector<bool>& forbidden) {
  SearchBudget budget(limits);
  HittingSearch search(h, budget, forbidden);
  if (!search.search(k)) return std::nullopt;
  VertexSet out = search.found();
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t matching_number(std::size_t n, const std::vector<Hyperedge>& edges) {
  return Blossom(n, edges).solve();
}

std::vector<Hyperedge> max_matching(const Hypergraph& g, const SolverLimits& limits) {
  require_graph(g, "max_matching");
  SearchBudget budget(limits);
  const std::size_t opt = matching_number(g.n(), g.edges());
  std::vector<Hyperedge> chosen;
  std::vector<char> used(g.n(), 0);
  std::size_t next = 0;
  std::vector<Hyperedge> rest;
  while (chosen.size() < opt) {
    bool placed = false;
    for (std::size_t i = next; i < g.num_edges() && !placed; ++i) {
      const auto& e = g.edge(i);
      if (used[e[0]] || used[e[1]]) continue;
      budget.tick();
      rest.clear();
      for (std::size_t j = i + 1; j < g.num_edges(); ++j) {
        const auto& f = g.edge(j);
        if (!used[f[0]] && !used[f[1]] && !intersects(e, f)) rest.push_back(f);
      }
      if (matching_number(g.n(), rest) + chosen.size() + 1 >= opt) {
        chosen.push_back(e);
        used[e[0]] = used[e[1]] = 1;
        next = i + 1;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("matching reconstruction lost the optimum");
  }
  return chosen;
}

std::vector<std::size_t> max_disjoint_sets(std::size_t n, const std::vector<VertexSet>& sets,
                                           const SolverLimits& limits, std::size_t cap) {
  for (const auto& s : sets) {
    if (s.empty()) throw InvalidArgument("packing sets must be non-empty");
    for (VertexId v : s)
      if (v >= n) throw InvalidArgument("packing set vertex out of range");
  }
  SearchBudget budget(limits);
  PackingSearch search(n, sets, budget);
  return search.run(all_indices(sets.size()), cap);
}

std::vector<Hyperedge> max_set_packing(const Hypergraph& h, const SolverLimits& limits) {
  if (h.d() == 2) return max_matching(h, limits);
  SearchBudget budget(limits);
  const auto sets = edge_sets(h);
  PackingSearch search(h.n(), sets, budget);
  const std::size_t opt = search.run(all_indices(sets.size()), SIZE_MAX).size();

  std::vector<Hyperedge> chosen;
  std::vector<std::uint32_t> pool = all_indices(sets.size());
  while (chosen.size() < opt) {
    const std::size_t need = opt - chosen.size() - 1;
    bool placed = false;
    for (std::size_t pos = 0; pos < pool.size() && !placed; ++pos) {
      const auto e = pool[pos];
      std::vector<std::uint32_t> rest;
      for (std::size_t q = pos + 1; q < pool.size(); ++q)
        if (search.disjoint(e, pool[q])) rest.push_back(pool[q]);
      if (rest.size() < need) continue;
      if (need == 0 || search.run(rest, need).size() >= need) {
        chosen.push_back(sets[e]);
        pool = std::move(rest);
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("packing reconstruction lost the optimum");
  }
  return chosen;
}

CutResult max_t_cut(const Hypergraph& g, std::size_t t, const SolverLimits& limits) {
  require_graph(g, "max_t_cut");
  if (t < 2) throw InvalidArgument("max_t_cut needs t >= 2");
  SearchBudget budget(limits);
  const std::size_t n = g.n();

  std::vector<std::uint32_t> root(n);
  std::iota(root.begin(), root.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& e : g.edges()) root[find(e[0])] = find(e[1]);

  const auto deg = g.degrees();
  std::vector<std::vector<VertexId>> comps;
  std::vector<std::int64_t> comp_of(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (deg[v] == 0) continue;
    const auto r = find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<std::int64_t>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(comp_of[r])].push_back(v);
  }

  CutResult out{Partition(n, 0), 0};
  std::vector<std::uint32_t> local(n, 0);
  for (const auto& comp : comps) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::vector<std::uint32_t>> adj(comp.size());
    std::size_t m = 0;
    for (VertexId v : comp) {
      for (const auto& e : g.edges()) {
        if (e[0] == v) {
          adj[local[v]].push_back(local[e[1]]);
          adj[local[e[1]]].push_back(local[v]);
          ++m;
        }
      }
    }
    CutSearch search(comp.size(), t, std::move(adj), m, budget);
    std::vector<std::uint32_t> best;
    std::size_t value = search.heuristic(best);
    std::vector<std::uint32_t> trial;
    if (!search.reach(value, trial)) throw std::logic_error("cut search missed the heuristic value");
    best = trial;
    value = search.value(best);
    while (value < m && search.reach(value + 1, trial)) {
      best = trial;
      value = search.value(best);
    }
    for (std::size_t i = 0; i < comp.size(); ++i) out.part[comp[i]] = best[i];
    out.size += value;
  }
  return out;
}

DegreeProfile degree_profile(const Hypergraph& g, std::size_t k) {
  require_graph(g, "degree_profile");
  DegreeProfile p;
  p.k = k;
  p.threshold = 20 * k;
  const auto deg = g.degrees();
  std::vector<char> high(g.n(), 0);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (deg[v] >= p.threshold) {
      p.high.push_back(v);
      high[v] = 1;
    } else {
      p.low.push_back(v);
    }
  }
  for (const auto& e : g.edges())
    if (!high[e[0]] && !high[e[1]]) p.low_edges.push_back(e);
  return p;
}

std::vector<Hyperedge> representative_family(const Hypergraph& h, std::size_t k, const SolverLimits& limits) {
  std::vector<char> kept(h.num_edges(), 1);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    std::vector<Hyperedge> others;
    for (std::size_t j = 0; j < h.num_edges(); ++j)
      if (j != i && kept[j]) others.push_back(h.edge(j));
    std::vector<bool> forbidden(h.n(), false);
    for (VertexId v : h.edge(i)) forbidden[v] = true;
    // e is redundant unless some X of size <= k avoids e and hits every other kept edge.
    if (!hitting_set_at_most(Hypergraph(h.n(), h.d(), std::move(others)), k, limits, forbidden)) kept[i] = 0;
  }
  std::vector<Hyperedge> out;
  for (std::size_t i = 0; i < h.num_edges(); ++i)
    if (kept[i]) out.push_back(h.edge(i));
  if (!is_representative(h, out, k)) throw std::logic_error("representative family failed verification");
  return out;
}

bool is_representative(const Hypergraph& h, const std::vector<Hyperedge>& sub, std::size_t k) {
  std::vector<VertexId> universe;
  for (const auto& e : h.edges()) universe.insert(universe.end(), e.begin(), e.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  const std::size_t u = universe.size();
  const std::size_t top = std::min(k, u);
  std::uint64_t total = 0;
  for (std::size_t r = 0; r <= top; ++r) {
    total += binomial(u, r);
    if (total > kRepresentativeGuard) {
      throw GuardExceeded("representative check would enumerate more than " +
                          std::to_string(kRepresentativeGuard) + " sets");
    }
  }
  std::vector<char> in_x(h.n(), 0);
  auto avoided = [&](const std::vector<Hyperedge>& family) {
    for (const auto& e : family) {
      bool clear = true;
      for (VertexId v : e) clear = clear && !in_x[v];
      if (clear) return true;
    }
    return false;
  };
  std::vector<std::size_t> idx;
  for (std::size_t r = 0; r <= top; ++r) {
    idx.resize(r);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      for (auto i : idx) in_x[universe[i]] = 1;
      const bool bad = avoided(h.edges()) && !avoided(sub);
      for (auto i : idx) in_x[universe[i]] = 0;
      if (bad) return false;
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == u - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return true;
}

bool is_hitting_set(const Hypergraph& h, std::span<const VertexId> s) {
  std::vector<char> in(h.n(), 0);
  for (VertexId v : s)
    if (v < h.n()) in[v] = 1;
  for (const auto& e : h.edges()) {
    bool hit = false;
    for (VertexId v : e) hit = hit || in[v];
    if (!hit) return false;
  }
  return true;
}

bool is_packing(const Hypergraph& h, const std::vector<Hyperedge>& edges) {
  std::vector<char> used(h.n(), 0);
  for (const auto& e : edges) {
    if (!h.contains(e)) return false;
    for (VertexId v : e) {
      if (used[v]) return false;
      used[v] = 1;
    }
  }
  return true;
}

std::size_t cut_size(const Hypergraph& g, const Partition& part) {
  require_graph(g, "cut_size");
  if (part.size() != g.n()) throw InvalidArgument("partition does not cover the vertex set");
  std::size_t c = 0;
  for (const auto& e : g.edges()) c += part[e[0]] != part[e[1]];
  return c;
}

}  // namespace querylab
