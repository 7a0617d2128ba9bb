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
#include <string_view>

namespace querylab {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over the tag bytes.
constexpr std::uint64_t hash_tag(std::string_view tag) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) noexcept {
  return derive_seed(seed, hash_tag(tag));
}

/// Counter-based generator: the i-th output is a pure function of (key, i).
///
/// All randomness in the library flows through this type, so results are
/// bitwise reproducible across platforms and standard library versions
/// (std distributions are implementation-defined and are never used).
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t key) noexcept : key_(mix64(key)) {}
  constexpr Rng(std::uint64_t seed, std::string_view tag) noexcept : Rng(derive_seed(seed, tag)) {}

  constexpr std::uint64_t next() noexcept { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Unbiased integer in [0, bound); bound must be > 0.
  constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Double in [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr bool bernoulli(double p) noexcept { return uniform01() < p; }

  // Independent stream indexed by `index`; does not advance this stream.
  [[nodiscard]] constexpr Rng child(std::uint64_t index) const noexcept {
    return Rng(derive_seed(key_, index));
  }
  [[nodiscard]] constexpr Rng child(std::string_view tag) const noexcept {
    return Rng(derive_seed(key_, tag));
  }

  [[nodiscard]] constexpr std::uint64_t key() const noexcept { return key_; }
  [[nodiscard]] constexpr std::uint64_t position() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace querylab
