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

#include "ewcert/witness.h"

#include <gtest/gtest.h>

#include <random>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

CoefficientMatrix random_coefficients(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CoefficientMatrix c(d, d);
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j)
      if (rng() % 2) c.set({i, j}, g(rng));
  if (c.is_zero()) c.set({0, 0}, 1.0);
  return c;
}

TEST(Coefficients, ParseAndNorm) {
  const auto c = parse_qubit_coefficients("XX=1, YY=-1,ZZ=1");
  EXPECT_EQ(c.support().size(), 3u);
  EXPECT_EQ(c.at({1, 1}), -1.0);
  EXPECT_EQ(c.at({0, 1}), 0.0);
  EXPECT_NEAR(c.operator_norm(), 1.0, 1e-14);
  EXPECT_NEAR(separable_bound(c), 1.0, 1e-14);
  EXPECT_THROW(parse_qubit_coefficients("XX"), InputError);
  EXPECT_THROW(parse_qubit_coefficients("XX=1,XX=2"), InputError);
  EXPECT_THROW(parse_qubit_coefficients("QX=1"), InputError);
}

TEST(Coefficients, SeparableScale) {
  EXPECT_DOUBLE_EQ(separable_scale(2, 2), 1.0);
  EXPECT_DOUBLE_EQ(separable_scale(3, 3), 2.0);
  EXPECT_DOUBLE_EQ(separable_scale(2, 5), 2.0);
}

TEST(Witness, MirroredPairSumsToIdentity) {
  std::mt19937_64 rng(1);
  for (int d : {2, 3}) {
    const auto w = make_witness_pair(random_coefficients(d, rng));
    const auto sum = w.plus_operator() + w.minus_operator();
    const auto n = static_cast<std::size_t>(d * d);
    EXPECT_LT(max_abs_diff(sum, Complex(2.0 * w.bound()) * ComplexMatrix::identity(n)), 1e-12);
    EXPECT_TRUE(is_hermitian(w.observable()));
  }
  EXPECT_THROW(make_witness_pair(CoefficientMatrix::qubits()), InputError);
}

TEST(Witness, GridAndDenseEvaluationsAgree) {
  std::mt19937_64 rng(2);
  for (int d : {2, 3}) {
    const auto rho = random_density(static_cast<std::size_t>(d * d), 3, rng);
    const auto grid = ideal_grid(rho, d, d);
    const auto w = make_witness_pair(random_coefficients(d, rng));
    const auto a = evaluate_witness(w, grid);
    const auto b = evaluate_witness(w, rho);
    EXPECT_NEAR(a.tr_plus, b.tr_plus, 1e-12);
    EXPECT_NEAR(a.tr_minus, b.tr_minus, 1e-12);
    EXPECT_EQ(a.verdict, b.verdict);
  }
}

// Soundness of the bound against sampled product states.
TEST(Witness, ProductStatesRespectTheBound) {
  std::mt19937_64 rng(3);
  for (int d : {2, 3, 4}) {
    const auto n = static_cast<std::size_t>(d);
    for (int t = 0; t < 40; ++t) {
      const auto c = random_coefficients(d, rng);
      const auto w = make_witness_pair(c);
      const auto s = w.observable();
      double worst = 0.0;
      for (int k = 0; k < 300; ++k) {
        const auto a = haar_pure_state(n, rng);
        const auto b = haar_pure_state(n, rng);
        std::vector<Complex> ab;
        for (const auto& x : a)
          for (const auto& y : b) ab.push_back(x * y);
        worst = std::max(worst, std::abs(inner(ab, matvec(s, ab)).real()));
      }
      EXPECT_LE(worst, w.bound() + 1e-9);
    }
  }
}

TEST(Witness, BellStateViolatesDiagonalWitness) {
  const auto w = make_witness_pair(parse_qubit_coefficients("XX=1,YY=-1,ZZ=1"));
  const auto ev = evaluate_witness(w, make_state({StateFamily::kBell, 0.0}));
  EXPECT_NEAR(ev.tr_minus, -2.0, 1e-12);
  EXPECT_NEAR(ev.tr_plus, 4.0, 1e-12);
  EXPECT_EQ(ev.verdict, Verdict::kEntangled);
  const auto mixed = evaluate_witness(w, DensityMatrix::maximally_mixed(4));
  EXPECT_EQ(mixed.verdict, Verdict::kUndetected);
}

TEST(Witness, MissingCorrelatorIsReported) {
  const auto w = make_witness_pair(parse_qubit_coefficients("XX=1,ZZ=1"));
  auto g = CorrelatorGrid::qubits();
  g.set(Pauli::X, Pauli::X, 0.5);
  try {
    evaluate_witness(w, g);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "missing correlator ZZ");
  }
}

}  // namespace
}  // namespace ewcert
