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

#include "querylab/coloring.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <sstream>

#include "querylab/errors.hpp"

namespace querylab {

HashColoring::HashColoring(std::uint64_t b, std::vector<std::uint64_t> colors)
    : b_(b), colors_(std::move(colors)) {
  if (b_ == 0) throw InvalidArgument("coloring needs at least one color");
  for (auto c : colors_)
    if (c >= b_) throw InvalidArgument("color value out of range");
}

std::size_t HashColoring::num_classes() const {
  auto sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool HashColoring::injective_on(std::span<const VertexId> vertices) const {
  std::vector<std::uint64_t> seen;
  seen.reserve(vertices.size());
  for (VertexId v : vertices) seen.push_back(colors_.at(v));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

std::string HashColoring::to_string() const {
  std::string out = std::to_string(b_);
  for (auto c : colors_) out += ' ' + std::to_string(c);
  return out;
}

HashColoring HashColoring::parse(std::string_view text) {
  std::vector<std::uint64_t> nums;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw InvalidArgument("malformed coloring");
    nums.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  if (nums.empty()) throw InvalidArgument("empty coloring");
  const auto b = nums.front();
  nums.erase(nums.begin());
  return HashColoring(b, std::move(nums));
}

HashColoring random_coloring(std::size_t n, std::uint64_t b, Rng& rng) {
  if (b == 0) throw InvalidArgument("coloring needs at least one color");
  std::vector<std::uint64_t> colors(n);
  for (auto& c : colors) c = rng.uniform(b);
  return HashColoring(b, std::move(colors));
}

ColorClasses classes(const HashColoring& c) {
  std::vector<std::pair<std::uint64_t, VertexId>> order;
  order.reserve(c.n());
  for (std::size_t v = 0; v < c.n(); ++v) order.emplace_back(c.colors()[v], static_cast<VertexId>(v));
  std::sort(order.begin(), order.end());
  ColorClasses out;
  for (const auto& [color, v] : order) {
    if (out.empty() || out.back().color != color) out.push_back({color, {}});
    out.back().vertices.push_back(v);
  }
  return out;
}

std::uint64_t smallest_prime_above(std::uint64_t x) {
  auto is_prime = [](std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
      if (p % q == 0) return false;
    return true;
  };
  std::uint64_t p = x + 1;
  while (!is_prime(p)) ++p;
  return p;
}

PerfectFamily perfect_family(std::size_t n, std::size_t s, std::uint64_t range) {
  if (n == 0) throw InvalidArgument("perfect family needs n >= 1");
  if (s == 0) throw InvalidArgument("perfect family needs s >= 1");
  const std::uint64_t need = 4 * static_cast<std::uint64_t>(s) * s;
  if (range < need) {
    throw InvalidArgument("range " + std::to_string(range) + " is below 4*s^2 = " + std::to_string(need));
  }
  return PerfectFamily{n, s, range, smallest_prime_above(std::max<std::uint64_t>(n, range))};
}

HashColoring PerfectFamily::member(std::size_t i) const {
  const std::uint64_t a = i + 1;
  std::vector<std::uint64_t> colors(n);
  for (std::size_t x = 0; x < n; ++x) colors[x] = (a * x % prime) % range;
  return HashColoring(range, std::move(colors));
}

std::vector<HashColoring> PerfectFamily::members() const {
  std::vector<HashColoring> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(member(i));
  return out;
}

namespace {

// r-subset of [0, n) with the given lexicographic rank.
void unrank_combination(std::uint64_t rank, std::size_t n, std::size_t r, std::vector<VertexId>& out) {
  out.clear();
  std::size_t next = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t v = next;; ++v) {
      const std::uint64_t block = binomial(n - v - 1, r - i - 1);
      if (rank < block) {
        out.push_back(static_cast<VertexId>(v));
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
}

bool some_member_injective(const std::vector<HashColoring>& members, std::span<const VertexId> subset) {
  for (const auto& h : members)
    if (h.injective_on(subset)) return true;
  return false;
}

std::uint64_t guarded_subset_count(std::size_t n, std::size_t r) {
  const auto count = binomial(n, r);
  if (count > kPerfectVerifyGuard) {
    throw GuardExceeded("perfect-family verification would enumerate " + std::to_string(count) +
                        " subsets");
  }
  return count;
}

// Advance to the next r-subset in lexicographic order; false after the last.
bool next_combination(std::vector<VertexId>& subset, std::size_t n) {
  const std::size_t r = subset.size();
  std::size_t i = r;
  while (i > 0 && subset[i - 1] == n - r + i - 1) --i;
  if (i == 0) return false;
  ++subset[i - 1];
  for (std::size_t j = i; j < r; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

bool verify_members_parallel(const std::vector<HashColoring>& members, std::size_t n, std::size_t s) {
  const std::size_t r = std::min(s, n);
  const auto count = guarded_subset_count(n, r);
  bool ok = true;
#pragma omp parallel reduction(&& : ok)
  {
    // One contiguous rank block per thread, walked by successor.
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto id = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t begin = count * id / threads, end = count * (id + 1) / threads;
    if (begin < end) {
      std::vector<VertexId> subset;
      unrank_combination(begin, n, r, subset);
      for (std::uint64_t rank = begin; rank < end && ok; ++rank) {
        ok = some_member_injective(members, subset);
        next_combination(subset, n);
      }
    }
  }
  return ok;
}

}  // namespace

bool verify_perfect(const std::vector<HashColoring>& members, std::size_t s) {
  if (members.empty()) return false;
  return verify_members_parallel(members, members.front().n(), s);
}

bool verify_perfect(const PerfectFamily& f) {
  return verify_members_parallel(f.members(), f.n, f.s);
}

bool verify_perfect_serial(const PerfectFamily& f) {
  const auto members = f.members();
  const std::size_t r = std::min(f.s, f.n);
  guarded_subset_count(f.n, r);
  std::vector<VertexId> subset(r);
  for (std::size_t i = 0; i < r; ++i) subset[i] = static_cast<VertexId>(i);
  do {
    if (!some_member_injective(members, subset)) return false;
  } while (next_combination(subset, f.n));
  return true;
}

}  // namespace querylab
