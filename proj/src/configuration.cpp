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

#include "qsieve/configuration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qsieve/detail/text.hpp"
#include "qsieve/errors.hpp"

namespace qsieve {

namespace {

void validate_ground(const char* where, int m, int cap) {
  if (m < 0) {
    throw std::invalid_argument(std::string(where) +
                                ": ground size must be >= 0");
  }
  if (cap < 0) {
    throw std::invalid_argument(std::string(where) + ": cap must be >= 0");
  }
  if (m > cap) {
    std::ostringstream msg;
    msg << where << ": ground size " << m << " exceeds cap " << cap;
    throw size_limit_error(msg.str());
  }
}

// Depth-first search over the smallest not-yet-assigned point i: leave it
// uncovered, mark it as a ball, or open an arc (i, j) to a free j.  Every
// arc is opened at its left endpoint, so a previously placed arc (a, b) has
// a < i and the new arc (i, j) crosses it exactly when i < b < j.
struct SearchState {
  int m = 0;
  std::vector<char> used;  // 1-indexed occupancy
  std::vector<int> balls;
  std::vector<std::pair<int, int>> arcs;
};

void extend(SearchState& st, int from, std::vector<Configuration>& out) {
  int i = from;
  while (i <= st.m && st.used[i]) ++i;
  if (i > st.m) {
    out.push_back(Configuration{st.m, st.balls, st.arcs});
    return;
  }
  st.used[i] = 1;
  extend(st, i + 1, out);  // i stays uncovered
  st.balls.push_back(i);   // ball at i
  extend(st, i + 1, out);
  st.balls.pop_back();
  for (int j = i + 1; j <= st.m; ++j) {  // arc (i, j)
    if (st.used[j]) continue;
    bool crosses = false;
    for (const auto& arc : st.arcs) {
      if (arc.second > i && arc.second < j) {
        crosses = true;
        break;
      }
    }
    if (crosses) continue;
    st.used[j] = 1;
    st.arcs.emplace_back(i, j);
    extend(st, i + 1, out);
    st.arcs.pop_back();
    st.used[j] = 0;
  }
  st.used[i] = 0;
}

SearchState fresh_state(int m) {
  SearchState st;
  st.m = m;
  st.used.assign(static_cast<std::size_t>(m) + 1, 0);
  return st;
}

}  // namespace

std::string Configuration::to_text() const {
  std::ostringstream out;
  out << "m=" << ground_size << "; balls=" << detail::int_list(balls)
      << "; arcs=" << detail::pair_list(arcs);
  return out.str();
}

bool is_disjoint(const Configuration& c) {
  std::vector<int> points;
  for (int b : c.balls) points.push_back(b);
  for (const auto& [a, b] : c.arcs) {
    if (a >= b) return false;
    points.push_back(a);
    points.push_back(b);
  }
  for (int p : points) {
    if (p < 1 || p > c.ground_size) return false;
  }
  if (!std::is_sorted(c.balls.begin(), c.balls.end()) ||
      std::adjacent_find(c.balls.begin(), c.balls.end()) != c.balls.end()) {
    return false;
  }
  if (!std::is_sorted(c.arcs.begin(), c.arcs.end())) return false;
  std::sort(points.begin(), points.end());
  return std::adjacent_find(points.begin(), points.end()) == points.end();
}

bool is_noncrossing(const Configuration& c) {
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < c.arcs.size(); ++j) {
      const auto& [a, b] = c.arcs[i];
      const auto& [x, y] = c.arcs[j];
      if ((a < x && x < b && b < y) || (x < a && a < y && y < b)) return false;
    }
  }
  return true;
}

std::vector<Configuration> enumerate_configurations_serial(int m, int cap) {
  validate_ground("enumerate_configurations", m, cap);
  std::vector<Configuration> out;
  SearchState st = fresh_state(m);
  extend(st, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Configuration> enumerate_configurations(int m, int cap) {
  validate_ground("enumerate_configurations", m, cap);
  if (m == 0) return enumerate_configurations_serial(m, cap);
  // Partition the search on point 1's choice: uncovered (branch 0), ball
  // (branch 1), or arc (1, b) for b in 2..m (branch b).  Each branch explores
  // a disjoint subtree into its own bucket; the final sort makes the output
  // independent of scheduling.
  const int branches = m + 1;
  std::vector<std::vector<Configuration>> buckets(branches);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int b = 0; b < branches; ++b) {
    SearchState st = fresh_state(m);
    st.used[1] = 1;
    if (b == 1) st.balls.push_back(1);
    if (b >= 2) {
      st.used[b] = 1;
      st.arcs.emplace_back(1, b);
    }
    extend(st, 2, buckets[b]);
  }
  std::size_t total = 0;
  for (const auto& bucket : buckets) total += bucket.size();
  std::vector<Configuration> out;
  out.reserve(total);
  for (auto& bucket : buckets) {
    std::move(bucket.begin(), bucket.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qsieve
