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

#include "qsieve/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qsieve/detail/text.hpp"
#include "qsieve/errors.hpp"

namespace qsieve {

namespace {

// Same left-endpoint search as the configuration enumerator, restricted to
// arcs: match the smallest free point i to every free j that keeps the
// diagram noncrossing (no placed arc (a, b) with i < b < j).
struct SearchState {
  int points = 0;
  std::vector<char> used;
  std::vector<std::pair<int, int>> arcs;
};

void extend(SearchState& st, int from, std::vector<Matching>& out) {
  int i = from;
  while (i <= st.points && st.used[i]) ++i;
  if (i > st.points) {
    out.push_back(Matching{st.points / 2, st.arcs});
    return;
  }
  st.used[i] = 1;
  for (int j = i + 1; j <= st.points; ++j) {
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

}  // namespace

std::string Matching::to_text() const {
  std::ostringstream out;
  out << "n=" << n << "; arcs=" << detail::pair_list(arcs);
  return out.str();
}

bool is_perfect(const Matching& m) {
  if (static_cast<int>(m.arcs.size()) != m.n) return false;
  if (!std::is_sorted(m.arcs.begin(), m.arcs.end())) return false;
  std::vector<char> seen(static_cast<std::size_t>(2 * m.n) + 1, 0);
  for (const auto& [a, b] : m.arcs) {
    if (a >= b || a < 1 || b > 2 * m.n) return false;
    if (seen[a] || seen[b]) return false;
    seen[a] = seen[b] = 1;
  }
  return true;
}

bool is_noncrossing(const Matching& m) {
  for (std::size_t i = 0; i < m.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < m.arcs.size(); ++j) {
      const auto& [a, b] = m.arcs[i];
      const auto& [x, y] = m.arcs[j];
      if ((a < x && x < b && b < y) || (x < a && a < y && y < b)) return false;
    }
  }
  return true;
}

std::vector<Matching> enumerate_matchings(int n, int cap) {
  if (n < 0) throw std::invalid_argument("enumerate_matchings: n must be >= 0");
  if (cap < 0) throw std::invalid_argument("enumerate_matchings: cap must be >= 0");
  if (n > cap) {
    std::ostringstream msg;
    msg << "enumerate_matchings: n " << n << " exceeds cap " << cap;
    throw size_limit_error(msg.str());
  }
  std::vector<Matching> out;
  SearchState st;
  st.points = 2 * n;
  st.used.assign(static_cast<std::size_t>(st.points) + 1, 0);
  extend(st, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qsieve
