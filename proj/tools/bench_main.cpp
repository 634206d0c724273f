// Copyright 2026 The qsieve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compares the serial reference kernels against the OpenMP kernels on the
// configuration family: enumeration (partitioned on the first point's
// choice) and fixed-point counting over the shared enumeration.  Both
// variants must produce identical results; the tool reports wall times and,
// where meaningful, the speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "qsieve/configuration.hpp"
#include "qsieve/fixed_points.hpp"
#include "qsieve/rotation.hpp"

namespace {

template <typename Fn>
double best_seconds(int repeat, Fn&& fn) {
  double best = 0.0;
  for (int r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (r == 0 || elapsed < best) best = elapsed;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int m = 12;
  int k = 1;
  int repeat = 3;
  CLI::App app{"qsieve_bench: serial vs parallel kernel comparison"};
  app.add_option("--m", m, "Ground set size for the configuration family")
      ->check(CLI::Range(0, qsieve::kConfigurationGroundCap))
      ->capture_default_str();
  app.add_option("--k", k, "Rotation power for fixed-point counting")
      ->capture_default_str();
  app.add_option("--repeat", repeat, "Repetitions; the best time is reported")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::vector<qsieve::Configuration> serial_objects;
  std::vector<qsieve::Configuration> parallel_objects;
  const double enum_serial = best_seconds(repeat, [&] {
    serial_objects = qsieve::enumerate_configurations_serial(m);
  });
  const double enum_parallel = best_seconds(
      repeat, [&] { parallel_objects = qsieve::enumerate_configurations(m); });
  if (serial_objects != parallel_objects) {
    std::fprintf(stderr, "FATAL: enumeration kernels disagree at m=%d\n", m);
    return 1;
  }

  std::size_t fixed_serial = 0;
  std::size_t fixed_parallel = 0;
  const auto act = [&](const qsieve::Configuration& c) {
    return qsieve::rotate_configuration(c, k);
  };
  const double count_serial = best_seconds(repeat, [&] {
    fixed_serial = qsieve::count_fixed_serial(parallel_objects, act);
  });
  const double count_parallel = best_seconds(repeat, [&] {
    fixed_parallel = qsieve::count_fixed(parallel_objects, act);
  });
  if (fixed_serial != fixed_parallel) {
    std::fprintf(stderr, "FATAL: counting kernels disagree at m=%d k=%d\n", m,
                 k);
    return 1;
  }

  std::printf("threads=%d repeat=%d\n", threads, repeat);
  std::printf("enumerate m=%d: objects=%zu serial=%.4fs parallel=%.4fs speedup=%.2fx\n",
              m, parallel_objects.size(), enum_serial, enum_parallel,
              enum_parallel > 0 ? enum_serial / enum_parallel : 0.0);
  std::printf("count_fixed k=%d: fixed=%zu serial=%.4fs parallel=%.4fs speedup=%.2fx\n",
              k, fixed_parallel, count_serial, count_parallel,
              count_parallel > 0 ? count_serial / count_parallel : 0.0);
  return 0;
}
