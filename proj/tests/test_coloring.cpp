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

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "querylab/coloring.hpp"
#include "querylab/errors.hpp"

using namespace querylab;

TEST_SUITE("coloring") {

TEST_CASE("random coloring") {
  Rng rng(1);
  const auto mono = random_coloring(20, 1, rng);
  for (auto c : mono.colors()) CHECK(c == 0);
  CHECK_THROWS_AS(random_coloring(5, 0, rng), InvalidArgument);

  // Multinomial(10^4, 1/4): each count has sd sqrt(10^4 * 3/16) = 43.3.
  Rng big(2);
  const auto c = random_coloring(10000, 4, big);
  std::vector<int> count(4, 0);
  for (auto x : c.colors()) ++count[x];
  for (int x : count) CHECK(std::abs(x - 2500) < 5 * 43.3);

  int same = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng r1(1000 + s), r2(2000 + s);
    same += random_coloring(100, 100, r1) == random_coloring(100, 100, r2);
  }
  CHECK(same == 0);
}

TEST_CASE("classes partition the vertices") {
  const auto zero = classes(HashColoring(3, std::vector<std::uint64_t>(7, 0)));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].vertices.size() == 7);

  std::vector<std::uint64_t> id(6);
  std::iota(id.begin(), id.end(), 0);
  CHECK(classes(HashColoring(6, id)).size() == 6);

  Rng rng(9);
  const auto h = random_coloring(50, 12, rng);
  const auto cls = classes(h);
  std::vector<int> seen(50, 0);
  std::uint64_t prev = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    CHECK_FALSE(cls[i].vertices.empty());
    if (i > 0) CHECK(cls[i].color > prev);
    prev = cls[i].color;
    for (auto v : cls[i].vertices) {
      ++seen[v];
      CHECK(h[v] == cls[i].color);
    }
  }
  for (int s : seen) CHECK(s == 1);
  CHECK(cls.size() == h.num_classes());
}

TEST_CASE("text form round trip") {
  Rng rng(4);
  const auto h = random_coloring(9, 5, rng);
  CHECK(HashColoring::parse(h.to_string()) == h);
  CHECK_THROWS_AS(HashColoring(2, {0, 2}), InvalidArgument);
}

TEST_CASE("injectivity frequency with many colors") {
  const VertexSet s{3, 7, 11, 19, 23};
  Rng rng(17);
  int ok = 0;
  for (int trial = 0; trial < 400; ++trial) ok += random_coloring(30, 100 * 25, rng).injective_on(s);
  CHECK(ok >= 240);
}

TEST_CASE("perfect family") {
  const auto f = perfect_family(20, 4, 64);
  CHECK(f.prime == 67);
  CHECK(f.size() == 66);
  CHECK(f.members().size() == 66);
  CHECK(verify_perfect(f));
  CHECK(verify_perfect_serial(f));
  CHECK(verify_perfect(perfect_family(20, 3, 36)));
  CHECK(verify_perfect(perfect_family(5, 1, 4)));
  CHECK_THROWS_AS(perfect_family(20, 4, 63), InvalidArgument);

  const std::vector<HashColoring> constant{HashColoring(1, std::vector<std::uint64_t>(5, 0))};
  CHECK_FALSE(verify_perfect(constant, 2));
  CHECK(verify_perfect(constant, 1));

  for (std::size_t n = 4; n <= 24; n += 4)
    for (std::size_t s = 1; s <= 4; ++s) {
      const auto fam = perfect_family(n, s, 4 * s * s);
      CHECK(verify_perfect(fam) == verify_perfect_serial(fam));
      CHECK(verify_perfect(fam));
    }
  CHECK_THROWS_AS(verify_perfect(perfect_family(200, 6, 144)), GuardExceeded);
}

TEST_CASE("perfect family majority") {
  // More than half of the members are injective on each s-subset.
  const auto f = perfect_family(16, 3, 36);
  const auto members = f.members();
  for (VertexId a = 0; a < 16; a += 3)
    for (VertexId b = a + 1; b < 16; b += 4)
      for (VertexId c = b + 1; c < 16; c += 5) {
        const VertexSet s{a, b, c};
        std::size_t ok = 0;
        for (const auto& m : members) ok += m.injective_on(s);
        CHECK(2 * ok > members.size());
      }
}

}  // TEST_SUITE
