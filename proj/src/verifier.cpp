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

#include "qsieve/verifier.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qsieve {

bool burnside_check(const CspReport& report) {
  if (report.group_order < 1) return false;
  BigInt sum = 0;
  for (const CspRow& row : report.rows) sum += BigInt(row.fixed);
  if (sum % report.group_order != 0) return false;
  return sum / report.group_order == BigInt(report.orbits);
}

nlohmann::ordered_json report_to_json(const CspReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CspRow& row : report.rows) {
    nlohmann::ordered_json jrow;
    jrow["k"] = row.k;
    jrow["d"] = row.d;
    jrow["fixed"] = std::to_string(row.fixed);
    if (row.eval) {
      jrow["eval"] = row.eval->str();
    } else {
      jrow["eval"] = nullptr;
    }
    if (row.closed_form) {
      jrow["closed_form"] = row.closed_form->str();
    } else {
      jrow["closed_form"] = nullptr;
    }
    jrow["match"] = row.match;
    rows.push_back(std::move(jrow));
  }
  nlohmann::ordered_json j;
  j["family"] = report.family;
  j["n"] = report.n;
  j["group_order"] = report.group_order;
  j["rows"] = std::move(rows);
  j["orbits"] = report.orbits;
  j["csp_holds"] = report.csp_holds;
  return j;
}

std::string report_to_text(const CspReport& report) {
  const std::array<std::string, 6> headers = {"k",    "d",           "fixed",
                                              "eval", "closed_form", "match"};
  std::vector<std::array<std::string, 6>> cells;
  cells.reserve(report.rows.size());
  for (const CspRow& row : report.rows) {
    cells.push_back({std::to_string(row.k), std::to_string(row.d),
                     std::to_string(row.fixed),
                     row.eval ? row.eval->str() : std::string("non-integer"),
                     row.closed_form ? row.closed_form->str()
                                     : std::string("-"),
                     row.match ? std::string("ok") : std::string("FAIL")});
  }
  std::array<std::size_t, 6> width{};
  for (std::size_t c = 0; c < 6; ++c) {
    width[c] = headers[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "family=" << report.family << " n=" << report.n
      << " group_order=" << report.group_order << " orbits=" << report.orbits
      << " csp_holds=" << (report.csp_holds ? "true" : "false") << "\n";
  auto emit = [&](const std::array<std::string, 6>& row) {
    for (std::size_t c = 0; c < 6; ++c) {
      out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& row : cells) emit(row);
  return out.str();
}

}  // namespace qsieve
