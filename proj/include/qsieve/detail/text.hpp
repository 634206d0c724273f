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

#ifndef QSIEVE_DETAIL_TEXT_HPP_
#define QSIEVE_DETAIL_TEXT_HPP_

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qsieve::detail {

// "[1,4,6]" / "[]"
inline std::string int_list(const std::vector<int>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out << ',';
    out << xs[i];
  }
  out << ']';
  return out.str();
}

// "[(1,3),(4,5)]" / "[]"
inline std::string pair_list(const std::vector<std::pair<int, int>>& xs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out << ',';
    out << '(' << xs[i].first << ',' << xs[i].second << ')';
  }
  out << ']';
  return out.str();
}

}  // namespace qsieve::detail

#endif  // QSIEVE_DETAIL_TEXT_HPP_
