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

// Serial reference vs OpenMP kernels: core classification, perfect-family
// verification and trial sweeps. Prints one line per kernel and checks that
// both paths agree.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "querylab/coloring.hpp"
#include "querylab/harness.hpp"
#include "querylab/sunflower.hpp"

using namespace querylab;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / reps;
}

bool same(const CoreReport& a, const CoreReport& b) {
  if (a.cores.size() != b.cores.size()) return false;
  for (std::size_t i = 0; i < a.cores.size(); ++i)
    if (a.cores[i].number != b.cores[i].number) return false;
  return a.c_prime == b.c_prime && a.small_edges == b.small_edges;
}

void line(const char* name, double serial, double parallel, bool agree) {
  std::printf("%-22s serial %9.2f ms  parallel %9.2f ms  speedup %5.2fx  %s\n", name, serial, parallel,
              serial / parallel, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d\n", omp_get_max_threads());
  bool ok = true;

  {
    const auto h = gen_planted_hitting_set(40, 3, 3, 400, 1).graph;
    CoreReport s, p;
    const double ts = time_ms([&] { s = classify_cores_serial(h, 2); }, reps);
    const double tp = time_ms([&] { p = classify_cores(h, 2); }, reps);
    line("classify_cores", ts, tp, same(s, p));
    ok = ok && same(s, p);
  }
  {
    const auto f = perfect_family(40, 4, 64);
    bool s = false, p = false;
    const double ts = time_ms([&] { s = verify_perfect_serial(f); }, reps);
    const double tp = time_ms([&] { p = verify_perfect(f); }, reps);
    line("verify_perfect", ts, tp, s == p);
    ok = ok && s == p;
  }
  {
    const auto cfg = parse_sweep_config(nlohmann::json::parse(R"({
      "algorithms": ["packing", "vc-promised", "hs-decision", "cut"],
      "n": [30], "d": [2, 3], "k": [2], "m": [40], "trials": 8, "master_seed": 3
    })"));
    std::vector<TrialReport> s, p;
    const double ts = time_ms([&] { s = run_sweep_serial(cfg); }, reps);
    const double tp = time_ms([&] { p = run_sweep(cfg); }, reps);
    for (auto* rows : {&s, &p})
      for (auto& r : *rows) r.elapsed_ms = 0;
    line("run_sweep", ts, tp, s == p);
    ok = ok && s == p;
  }
  return ok ? 0 : 1;
}
