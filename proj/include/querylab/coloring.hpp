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
#include <span>
#include <string_view>
#include <string>
#include <vector>

#include "querylab/hypergraph.hpp"
#include "querylab/rng.hpp"

namespace querylab {

// A vertex coloring h : [0, n) -> [0, b).
class HashColoring {
 public:
  HashColoring(std::uint64_t b, std::vector<std::uint64_t> colors);

  [[nodiscard]] std::size_t n() const noexcept { return colors_.size(); }
  [[nodiscard]] std::uint64_t b() const noexcept { return b_; }
  [[nodiscard]] std::uint64_t operator[](VertexId v) const { return colors_[v]; }
  [[nodiscard]] const std::vector<std::uint64_t>& colors() const noexcept { return colors_; }

  // Number of distinct colors in use (non-empty classes).
  [[nodiscard]] std::size_t num_classes() const;
  [[nodiscard]] bool injective_on(std::span<const VertexId> vertices) const;

  // "b c0 c1 ... c_{n-1}"; the inverse of parse.
  [[nodiscard]] std::string to_string() const;
  static HashColoring parse(std::string_view text);

  friend bool operator==(const HashColoring&, const HashColoring&) = default;

 private:
  std::uint64_t b_;
  std::vector<std::uint64_t> colors_;
};

struct ColorClass {
  std::uint64_t color;
  VertexSet vertices;
};

// Non-empty classes only, ascending by color.
using ColorClasses = std::vector<ColorClass>;

// Each vertex independently uniform on [0, b). Throws on b == 0.
HashColoring random_coloring(std::size_t n, std::uint64_t b, Rng& rng);

ColorClasses classes(const HashColoring& c);

/// Colorings x -> ((a x) mod p) mod range for a = 1 .. p-1, p the smallest
/// prime above max(n, range). With range >= 4 s^2 every vertex set of size
/// at most s is colored injectively by more than half of the members.
struct PerfectFamily {
  std::size_t n;
  std::size_t s;
  std::uint64_t range;
  std::uint64_t prime;

  [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(prime - 1); }
  [[nodiscard]] HashColoring member(std::size_t i) const;
  [[nodiscard]] std::vector<HashColoring> members() const;
};

// Throws InvalidArgument when range < 4 s^2, n == 0 or s == 0.
PerfectFamily perfect_family(std::size_t n, std::size_t s, std::uint64_t range);

std::uint64_t smallest_prime_above(std::uint64_t x);

inline constexpr std::uint64_t kPerfectVerifyGuard = 1'000'000;

// True iff every min(s, n)-subset is injectively colored by some member.
// Parallel over subsets; throws GuardExceeded above kPerfectVerifyGuard.
bool verify_perfect(const PerfectFamily& f);
bool verify_perfect_serial(const PerfectFamily& f);

// Same check over an explicit list of colorings (all with the same n).
bool verify_perfect(const std::vector<HashColoring>& members, std::size_t s);

}  // namespace querylab
