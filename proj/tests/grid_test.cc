// Copyright 2026 The ewcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ewcert/grid.h"

#include <gtest/gtest.h>

#include <random>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

std::string error_of(std::string_view text, GridFormat f) {
  try {
    parse_grid(text, f);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Grid, JsonRoundTripIsCanonical) {
  const std::string text =
      R"({ "correlators": {"ZX": -0.96, "XX": -0.95, "XY": 0.03}, "dims": [2, 2] })";
  const auto g = parse_grid(text, GridFormat::kJson);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.at(Pauli::Z, Pauli::X), -0.96);
  const std::string canon = emit_grid(g, GridFormat::kJson);
  EXPECT_EQ(canon, "{\"dims\":[2,2],\"correlators\":{\"XX\":-0.94999999999999996,"
                   "\"XY\":0.029999999999999999,\"ZX\":-0.95999999999999996}}\n");
  EXPECT_EQ(parse_grid(canon, GridFormat::kJson), g);
  EXPECT_EQ(emit_grid(parse_grid(canon, GridFormat::kJson), GridFormat::kJson), canon);
}

TEST(Grid, CsvRoundTrip) {
  const auto g = parse_grid("a,b,value\r\nX,X,0.5\r\nZ,Y,-1\r\n", GridFormat::kCsv);
  EXPECT_EQ(g.at(Pauli::Z, Pauli::Y), -1.0);
  EXPECT_EQ(parse_grid(emit_grid(g, GridFormat::kCsv), GridFormat::kCsv), g);
  EXPECT_EQ(parse_grid(emit_grid(g, GridFormat::kJson), GridFormat::kJson), g);
}

TEST(Grid, QuditDocuments) {
  const auto g = parse_grid(R"({"dims":[3,3],"correlators":{"1,1":0.5,"8,8":-1.2}})",
                            GridFormat::kJson);
  EXPECT_EQ(g.rows(), 8);
  EXPECT_EQ(g.at({7, 7}), -1.2);
  EXPECT_EQ(g.label({7, 7}), "8,8");
  const std::string csv = emit_grid(g, GridFormat::kCsv);
  EXPECT_EQ(csv.rfind("# dims=3,3\n", 0), 0u);
  EXPECT_EQ(parse_grid(csv, GridFormat::kCsv), g);
  EXPECT_NE(error_of(R"({"dims":[3,3],"correlators":{"9,1":0.1}})", GridFormat::kJson), "");
}

TEST(Grid, ErrorsNameTheProblem) {
  EXPECT_EQ(error_of(R"({"dims":[2,2],"correlators":{"XX":0.1,"XX":0.2}})", GridFormat::kJson),
            "duplicate key 'XX'");
  EXPECT_EQ(error_of(R"({"dims":[2,2],"correlators":{}})", GridFormat::kJson),
            "no measured entries");
  EXPECT_NE(error_of(R"({"dims":[2,2],"correlators":{"XQ":0.1}})", GridFormat::kJson)
                .find("Pauli"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"dims":[2,2],"correlators":{"XX":1.5}})", GridFormat::kJson).find("XX"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"correlators":{"XX":0.1}})", GridFormat::kJson).find("dims"),
            std::string::npos);
  EXPECT_NE(error_of("{not json", GridFormat::kJson), "");
  EXPECT_NE(error_of("x,y,z\nX,X,1\n", GridFormat::kCsv).find("header"), std::string::npos);
  EXPECT_NE(error_of("a,b,value\nX,X,0.1\nX,X,0.2\n", GridFormat::kCsv).find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of("a,b,value\nX,X,abc\n", GridFormat::kCsv), "");
  EXPECT_THROW(parse_grid_format("xml"), InputError);
}

TEST(Grid, MissingCorrelatorMessage) {
  const auto g = parse_grid(R"({"dims":[2,2],"correlators":{"XX":0.1}})", GridFormat::kJson);
  try {
    g.at(Pauli::Y, Pauli::Z);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "missing correlator YZ");
  }
}

TEST(Grid, ValueLimitsAndNonFinite) {
  auto g = CorrelatorGrid::qubits();
  EXPECT_NO_THROW(g.set(Pauli::X, Pauli::X, 1.04));
  EXPECT_THROW(g.set(Pauli::X, Pauli::X, 1.06), InputError);
  EXPECT_THROW(g.set(Pauli::X, Pauli::X, std::nan("")), InputError);
  EXPECT_THROW(CorrelatorGrid(1, 2), InputError);
  EXPECT_THROW(CorrelatorGrid(2, 9), InputError);
  // With Tr(G^2) = 3, lambda_1 has eigenvalues +-sqrt(3/2) and lambda_8
  // reaches sqrt(2).
  const CorrelatorGrid q(3, 3);
  EXPECT_NEAR(q.value_limit({0, 0}), 1.05 * 1.5, 1e-12);
  EXPECT_NEAR(q.value_limit({7, 7}), 1.05 * 2.0, 1e-12);
}

TEST(Grid, IdealGridMatchesCorrelators) {
  std::mt19937_64 rng(4);
  const auto rho = random_density(9, 2, rng);
  const auto g = ideal_grid(rho, 3, 3);
  const auto basis = gell_mann_basis(3);
  EXPECT_EQ(g.size(), 64u);
  EXPECT_NEAR(g.at({2, 5}), correlator(rho, basis.operators[3], basis.operators[6]), 1e-15);
}

TEST(MeasurementSet, ParseAndValidate) {
  const auto s = MeasurementSet::parse("ZZ, XX");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.to_string(), "ZZ,XX");
  EXPECT_EQ(s.sorted().to_string(), "XX,ZZ");
  EXPECT_TRUE(s.contains({2, 2}));
  EXPECT_THROW(MeasurementSet::parse("XX,XX"), InputError);
  EXPECT_THROW(MeasurementSet::parse(""), InputError);
  EXPECT_THROW(MeasurementSet::parse("XI"), InputError);
  EXPECT_THROW(MeasurementSet(std::vector<GridIndex>{}), InputError);
}

TEST(Grid, Restriction) {
  const auto g = ideal_grid(make_state({StateFamily::kBell, 0.0}), 2, 2);
  const auto r = restrict_to(g, MeasurementSet::parse("XX,YY"));
  EXPECT_EQ(r.size(), 2u);
  EXPECT_EQ(r.at(Pauli::Y, Pauli::Y), -1.0);
  EXPECT_THROW(restrict_to(r, MeasurementSet::parse("ZZ")), InputError);
}

}  // namespace
}  // namespace ewcert
