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

#include <numeric>
#include <string>

#include <doctest.h>

#include "qsieve/families.hpp"
#include "test_util.hpp"

using qsieve::burnside_check;
using qsieve::ConfigurationFamily;
using qsieve::CspReport;
using qsieve::MatchingFamily;
using qsieve::Polynomial;
using qsieve::report_to_json;
using qsieve::report_to_text;
using qsieve::TriangulationFamily;
using qsieve::verify_csp;

namespace {

// A descriptor with a deliberately wrong sieving polynomial: everything else
// is the genuine matching family, so only the evaluation column can fail.
struct WrongPolynomialFamily : qsieve::MatchingFamily {
  using qsieve::MatchingFamily::MatchingFamily;
  Polynomial sieving_polynomial() const { return Polynomial::monomial(1); }
};

}  // namespace

TEST_CASE("configuration family, five points of structure") {
  const CspReport report = verify_csp(ConfigurationFamily(5));
  CHECK(report.family == "config");
  CHECK(report.n == 5);
  CHECK(report.group_order == 4);
  REQUIRE(report.rows.size() == 4);
  const unsigned long long expected_fixed[] = {42, 2, 10, 2};
  const int expected_d[] = {1, 4, 2, 4};
  for (int k = 0; k < 4; ++k) {
    const auto& row = report.rows[k];
    CAPTURE(k);
    CHECK(row.k == k);
    CHECK(row.d == expected_d[k]);
    CHECK(row.fixed == expected_fixed[k]);
    REQUIRE(row.eval.has_value());
    CHECK(*row.eval == qsieve::BigInt(expected_fixed[k]));
    REQUIRE(row.closed_form.has_value());
    CHECK(*row.closed_form == qsieve::BigInt(expected_fixed[k]));
    CHECK(row.match);
  }
  CHECK(report.orbits == 14);
  CHECK(report.csp_holds);
  CHECK(burnside_check(report));
  CHECK(report.seconds >= 0.0);
}

TEST_CASE("matching family leaves the closed-form column empty") {
  const CspReport report = verify_csp(MatchingFamily(2));
  CHECK(report.group_order == 4);
  REQUIRE(report.rows.size() == 4);
  const unsigned long long expected_fixed[] = {2, 0, 2, 0};
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(report.rows[k].fixed == expected_fixed[k]);
    REQUIRE(report.rows[k].eval.has_value());
    CHECK(*report.rows[k].eval == qsieve::BigInt(expected_fixed[k]));
    CHECK_FALSE(report.rows[k].closed_form.has_value());
    CHECK(report.rows[k].match);
  }
  CHECK(report.csp_holds);
  CHECK(report.orbits == 1);
  CHECK(burnside_check(report));
}

TEST_CASE("triangulation family") {
  const CspReport report = verify_csp(TriangulationFamily(4));  // hexagon
  CHECK(report.group_order == 6);
  CHECK(report.rows[0].fixed == 14);
  CHECK(report.csp_holds);
  CHECK(burnside_check(report));

  // The triangle is fixed by all three rotations of itself.
  const CspReport triangle = verify_csp(TriangulationFamily(1));
  CHECK(triangle.group_order == 3);
  REQUIRE(triangle.rows.size() == 3);
  for (const auto& row : triangle.rows) CHECK(row.fixed == 1);
  CHECK(triangle.orbits == 1);
  CHECK(triangle.csp_holds);
}

TEST_CASE("trivial groups get a single identity row") {
  for (const CspReport& report :
       {verify_csp(ConfigurationFamily(1)), verify_csp(MatchingFamily(0))}) {
    CAPTURE(report.family);
    CHECK(report.group_order == 1);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].k == 0);
    CHECK(report.rows[0].d == 1);
    CHECK(report.rows[0].fixed == 1);
    REQUIRE(report.rows[0].eval.has_value());
    CHECK(*report.rows[0].eval == 1);
    CHECK(report.csp_holds);
    CHECK(report.orbits == 1);
    CHECK(burnside_check(report));
  }
}

TEST_CASE("rows depend only on the gcd of k with the group order") {
  const CspReport report = verify_csp(ConfigurationFamily(9));
  const int order = report.group_order;
  REQUIRE(order == 8);
  for (const auto& row : report.rows) {
    const int reduced = static_cast<int>(std::gcd(row.k, order));
    const auto& other = report.rows[reduced % order];
    CAPTURE(row.k);
    CHECK(row.fixed == other.fixed);
    CHECK(row.eval == other.eval);
  }
}

TEST_CASE("a wrong polynomial produces violation rows, not a crash") {
  const CspReport report = verify_csp(WrongPolynomialFamily(2));
  CHECK_FALSE(report.csp_holds);
  REQUIRE(report.rows.size() == 4);
  // q reduces to itself at order 4: a non-integer residue, reported as null.
  CHECK(report.rows[0].eval.has_value());   // q at 1 -> 1, but fixed is 2
  CHECK_FALSE(report.rows[0].match);
  CHECK_FALSE(report.rows[1].eval.has_value());
  CHECK_FALSE(report.rows[1].match);
  // Burnside only involves the brute-force column, so it still holds.
  CHECK(burnside_check(report));
  // JSON renders the non-integer evaluation as null.
  const auto j = report_to_json(report);
  CHECK(j["rows"][1]["eval"].is_null());
  CHECK(j["csp_holds"] == false);
}

TEST_CASE("burnside check rejects corrupted fixed counts") {
  CspReport report = verify_csp(ConfigurationFamily(5));
  REQUIRE(burnside_check(report));
  report.rows[1].fixed += 1;  // break divisibility
  CHECK_FALSE(burnside_check(report));
  report.rows[1].fixed += 3;  // divisible again, but the quotient is off
  CHECK_FALSE(burnside_check(report));
}

TEST_CASE("JSON serialization is exact and deterministic") {
  const CspReport report = verify_csp(ConfigurationFamily(5));
  const std::string expected =
      R"({"family":"config","n":5,"group_order":4,"rows":)"
      R"([{"k":0,"d":1,"fixed":"42","eval":"42","closed_form":"42","match":true},)"
      R"({"k":1,"d":4,"fixed":"2","eval":"2","closed_form":"2","match":true},)"
      R"({"k":2,"d":2,"fixed":"10","eval":"10","closed_form":"10","match":true},)"
      R"({"k":3,"d":4,"fixed":"2","eval":"2","closed_form":"2","match":true}],)"
      R"("orbits":14,"csp_holds":true})";
  CHECK(report_to_json(report).dump() == expected);
  CHECK(report_to_json(report).dump() == report_to_json(report).dump());
  // Null closed form for companion families.
  const auto matching_json = report_to_json(verify_csp(MatchingFamily(2)));
  CHECK(matching_json["rows"][0]["closed_form"].is_null());
  CHECK(matching_json["rows"][0]["fixed"] == "2");
}

TEST_CASE("text rendering is aligned and complete") {
  const CspReport report = verify_csp(ConfigurationFamily(5));
  const std::string text = report_to_text(report);
  CHECK(text ==
        "family=config n=5 group_order=4 orbits=14 csp_holds=true\n"
        "  k  d  fixed  eval  closed_form  match\n"
        "  0  1     42    42           42     ok\n"
        "  1  4      2     2            2     ok\n"
        "  2  2     10    10           10     ok\n"
        "  3  4      2     2            2     ok\n");
  const std::string matching_text = report_to_text(verify_csp(MatchingFamily(2)));
  CHECK(matching_text.find("closed_form") != std::string::npos);
  CHECK(matching_text.find("  -") != std::string::npos);
}
