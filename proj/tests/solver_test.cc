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

#include "ewcert/solver.h"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

CorrelatorGrid grid_from(const std::string& json) { return parse_grid(json, GridFormat::kJson); }

std::vector<GridIndex> random_support(int rows, int cols, std::mt19937_64& rng) {
  std::vector<GridIndex> s;
  while (s.empty()) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (rng() % 3 == 0) s.push_back({i, j});
  }
  return s;
}

TEST(Solver, BellFullSupport) {
  const auto g = ideal_grid(make_state({StateFamily::kBell, 0.0}), 2, 2);
  const auto r = ne_solve(g);
  EXPECT_NEAR(r.value, 3.0, 1e-8);
  EXPECT_NEAR(r.coefficients.at({0, 0}), 1.0, 1e-4);
  EXPECT_NEAR(r.coefficients.at({1, 1}), -1.0, 1e-4);
  EXPECT_NEAR(r.coefficients.at({2, 2}), 1.0, 1e-4);
  EXPECT_EQ(r.verdict, Verdict::kEntangled);
  const auto ev = evaluate_witness(r.witness(), g);
  EXPECT_NEAR(std::min(ev.tr_plus, ev.tr_minus), -2.0, 1e-8);
}

TEST(Solver, ZeroGridShortCircuits) {
  const auto g = grid_from(R"({"dims":[2,2],"correlators":{"XX":0,"YZ":0}})");
  const auto r = ne_solve(g);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.verdict, Verdict::kUndetected);
  EXPECT_NEAR(separable_bound(r.coefficients), 1.0, 1e-15);
}

TEST(Solver, WorkedExampleAndTiming) {
  const auto g = grid_from(R"({"dims":[2,2],"correlators":{"XX":-0.95,"XY":0.03,"ZX":-0.96}})");
  const auto start = std::chrono::steady_clock::now();
  const auto r = ne_solve(g);
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  EXPECT_NEAR(r.value, 1.35, 0.01);
  const double s = r.sign == SignBranch::kPlus ? 1.0 : -1.0;
  EXPECT_NEAR(s * r.coefficients.at({0, 0}), -0.70, 0.02);
  EXPECT_NEAR(s * r.coefficients.at({0, 1}), 0.04, 0.02);
  EXPECT_NEAR(s * r.coefficients.at({2, 0}), -0.71, 0.02);
  EXPECT_LT(ms, 10.0);
}

TEST(Solver, CertificateHolds) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const int d = t % 3 == 0 ? 3 : 2;
    const auto rho = random_density(static_cast<std::size_t>(d * d), 1 + t % 3, rng);
    const auto g = ideal_grid(rho, d, d);
    const auto support = random_support(g.rows(), g.cols(), rng);
    const auto r = ne_solve(g, support);
    const double s = r.sign == SignBranch::kPlus ? 1.0 : -1.0;
    EXPECT_NEAR(s * expansion_value(r.coefficients, g), r.value, 1e-12);
    EXPECT_NEAR(separable_bound(r.coefficients), 1.0, 1e-6);
    EXPECT_GE(r.value, 0.0);
    for (const auto& [idx, v] : r.coefficients.coefficients()) {
      EXPECT_NE(std::find(support.begin(), support.end(), idx), support.end());
    }
  }
}

// With every entry measured, NE is the dual norm of the operator norm.
TEST(Solver, FullSupportEqualsScaledNuclearNorm) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    const int da = 2 + t % 2;
    const int db = 2 + (t / 2) % 2;
    const auto rho = random_density(static_cast<std::size_t>(da * db), 1 + t % 4, rng);
    const auto g = ideal_grid(rho, da, db);
    EXPECT_NEAR(ne_solve(g).value, nuclear_norm(g.dense()) / separable_scale(da, db), 1e-8);
  }
}

TEST(Solver, SeparableStatesNeverDetected) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = t % 4 == 0 ? 3 : 2;
    const auto sigma = sample_separable(d, d, 1 + t % 5, rng);
    const auto g = ideal_grid(sigma, static_cast<int>(d), static_cast<int>(d));
    const auto r = ne_solve(g, random_support(g.rows(), g.cols(), rng));
    EXPECT_LE(r.value, 1 + 1e-6);
  }
}

TEST(Solver, MonotoneReport) {
  const auto g = ideal_grid(make_state({StateFamily::kChi3, 7 * std::numbers::pi / 9}), 2, 2);
  const std::vector<MeasurementSet> chain = {MeasurementSet::parse("XX,ZZ"),
                                             MeasurementSet::parse("XX,ZY,ZZ"),
                                             MeasurementSet::parse("XX,YX,ZY,ZZ"),
                                             MeasurementSet::parse("XX,YX,ZY,ZZ")};
  const auto rs = ne_monotone_report(g, chain);
  ASSERT_EQ(rs.size(), 4u);
  for (std::size_t i = 1; i < rs.size(); ++i) EXPECT_GE(rs[i].value, rs[i - 1].value - 1e-9);
  EXPECT_NEAR(rs[2].value, rs[3].value, 1e-12);
  EXPECT_THROW(ne_monotone_report(g, {MeasurementSet::parse("XX,ZZ"), MeasurementSet::parse("XX,YY")}),
               InputError);

  std::mt19937_64 rng(34);
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_density(4, 2, rng);
    const auto full = ideal_grid(rho, 2, 2);
    std::vector<GridIndex> cells = full.support();
    std::shuffle(cells.begin(), cells.end(), rng);
    std::vector<MeasurementSet> nested;
    for (std::size_t k = 1; k <= cells.size(); ++k) {
      nested.emplace_back(std::vector<GridIndex>(cells.begin(), cells.begin() + k));
    }
    const auto vals = ne_monotone_report(full, nested);
    for (std::size_t i = 1; i < vals.size(); ++i) EXPECT_GE(vals[i].value, vals[i - 1].value - 1e-9);
  }
}

TEST(Solver, Errors) {
  const auto g = grid_from(R"({"dims":[2,2],"correlators":{"XX":0.5}})");
  EXPECT_THROW(ne_solve(g, std::vector<GridIndex>{}), InputError);
  EXPECT_THROW(ne_solve(g, MeasurementSet::parse("XX,ZZ")), InputError);
  SolverOptions bad;
  bad.mu_factor = 1.5;
  EXPECT_THROW(ne_solve(g, bad), InputError);

  const auto bell = ideal_grid(make_state({StateFamily::kBell, 0.0}), 2, 2);
  SolverOptions tight;
  tight.max_iter = 3;
  try {
    ne_solve(bell, tight);
    FAIL() << "expected non-convergence";
  } catch (const SolverError& e) {
    EXPECT_GT(e.last_gap(), 0.0);
    EXPECT_EQ(e.iterations(), 3);
  }
}

TEST(Solver, SignBranchTieReturnsPlus) {
  const auto g = grid_from(R"({"dims":[2,2],"correlators":{"XX":0.5,"ZZ":-0.5}})");
  const auto r = ne_solve(g);
  EXPECT_NEAR(r.value, 1.0, 1e-8);
  EXPECT_EQ(r.sign, SignBranch::kPlus);
}

TEST(Solver, UnequalDimensions) {
  std::mt19937_64 rng(35);
  const auto rho = random_density(6, 6, rng);
  const auto g = ideal_grid(rho, 2, 3);
  const auto r = ne_solve(g);
  EXPECT_NEAR(r.value, nuclear_norm(g.dense()) / std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(separable_bound(r.coefficients), 1.0, 1e-6);
}

}  // namespace
}  // namespace ewcert
