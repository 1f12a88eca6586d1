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

#include "ewcert/quantum.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Pauli, Algebra) {
  const Complex i(0, 1);
  const auto x = pauli_matrix(Pauli::X), y = pauli_matrix(Pauli::Y), z = pauli_matrix(Pauli::Z);
  EXPECT_LT(max_abs_diff(x * y, i * z), 1e-15);
  EXPECT_LT(max_abs_diff(y * z, i * x), 1e-15);
  EXPECT_LT(max_abs_diff(z * x, i * y), 1e-15);
  for (Pauli p : kPaulis) EXPECT_LT(max_abs_diff(pauli_matrix(p) * pauli_matrix(p), ComplexMatrix::identity(2)), 1e-15);
  EXPECT_EQ(pauli_from_char('y'), Pauli::Y);
  EXPECT_THROW(pauli_from_char('Q'), InputError);
}

TEST(GellMann, OrthogonalityAndTracelessness) {
  for (int d = 2; d <= 5; ++d) {
    const auto basis = gell_mann_basis(d);
    ASSERT_EQ(basis.operators.size(), static_cast<std::size_t>(d * d));
    for (std::size_t k = 0; k < basis.operators.size(); ++k) {
      EXPECT_TRUE(is_hermitian(basis.operators[k]));
      if (k > 0) EXPECT_NEAR(std::abs(trace(basis.operators[k])), 0.0, 1e-14);
      for (std::size_t l = 0; l < basis.operators.size(); ++l) {
        const Complex t = trace(basis.operators[k] * basis.operators[l]);
        EXPECT_NEAR(t.real(), k == l ? d : 0.0, 1e-12);
        EXPECT_NEAR(t.imag(), 0.0, 1e-12);
      }
    }
  }
  const auto q = gell_mann_basis(2);
  EXPECT_LT(max_abs_diff(q.operators[1], pauli_matrix(Pauli::X)), 1e-15);
  EXPECT_LT(max_abs_diff(q.operators[2], pauli_matrix(Pauli::Y)), 1e-15);
  EXPECT_LT(max_abs_diff(q.operators[3], pauli_matrix(Pauli::Z)), 1e-15);
}

TEST(States, BellCorrelators) {
  const auto rho = make_state({StateFamily::kBell, 0.0});
  EXPECT_NEAR(ideal_correlator(rho, Pauli::X, Pauli::X), 1.0, 1e-15);
  EXPECT_NEAR(ideal_correlator(rho, Pauli::Y, Pauli::Y), -1.0, 1e-15);
  EXPECT_NEAR(ideal_correlator(rho, Pauli::Z, Pauli::Z), 1.0, 1e-15);
  EXPECT_NEAR(ideal_correlator(rho, Pauli::X, Pauli::Z), 0.0, 1e-15);
  EXPECT_NEAR(rho.purity(), 1.0, 1e-14);
}

TEST(States, PsiThetaCorrelators) {
  for (int k = -9; k <= 9; ++k) {
    const double th = k * kPi / 9;
    const auto rho = make_state({StateFamily::kPsiTheta, th});
    EXPECT_NEAR(ideal_correlator(rho, Pauli::X, Pauli::X), std::sin(2 * th), 1e-14);
    EXPECT_NEAR(ideal_correlator(rho, Pauli::Z, Pauli::Z), 1.0, 1e-14);
    EXPECT_NEAR(ideal_correlator(rho, Pauli::Y, Pauli::Y), -std::sin(2 * th), 1e-14);
  }
}

TEST(States, FamiliesAtZeroAngleAndMaximalEntanglement) {
  const auto phi = make_state({StateFamily::kBell, 0.0});
  EXPECT_LT(max_abs_diff(make_state({StateFamily::kChi1, 0.0}).matrix(), phi.matrix()), 1e-14);
  // chi3 is maximally entangled for every angle: reduced state I/2.
  for (double th : {0.0, 7 * kPi / 9, -2 * kPi / 9}) {
    const auto rho = make_state({StateFamily::kChi3, th});
    const auto& m = rho.matrix();
    EXPECT_NEAR((m(0, 0) + m(1, 1)).real(), 0.5, 1e-14);
    EXPECT_NEAR(std::abs(m(0, 2) + m(1, 3)), 0.0, 1e-14);
  }
  EXPECT_EQ(parse_state_family("psi_theta"), StateFamily::kPsiTheta);
  EXPECT_THROW(parse_state_family("ghz"), InputError);
}

TEST(States, DepolarizingToMaximallyMixed) {
  const auto rho = depolarize(make_state({StateFamily::kBell, 0.0}), 1.0);
  for (Pauli a : kPaulis)
    for (Pauli b : kPaulis) EXPECT_NEAR(ideal_correlator(rho, a, b), 0.0, 1e-15);
  EXPECT_THROW(depolarize(rho, 1.5), InputError);
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}), InputError);
  EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), InputError);
  EXPECT_NO_THROW(DensityMatrix::from_matrix(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}));
}

TEST(Sampler, ConvergesToIdealAndIsSeeded) {
  const auto rho = make_state({StateFamily::kChi3, 7 * kPi / 9});
  for (Pauli a : kPaulis) {
    for (Pauli b : kPaulis) {
      const double ideal = ideal_correlator(rho, a, b);
      const std::uint64_t shots = 20000;
      const double est = sample_correlator(rho, a, b, shots, 42);
      const double sigma = std::sqrt(std::max(1e-12, 1.0 - ideal * ideal) / shots);
      EXPECT_NEAR(est, ideal, 5 * sigma + 1e-12);
      EXPECT_EQ(est, sample_correlator(rho, a, b, shots, 42));
    }
  }
  // Deterministic outcome for an eigenstate.
  EXPECT_EQ(sample_correlator(make_state({StateFamily::kBell, 0.0}), Pauli::Y, Pauli::Y, 100, 1), -1.0);
}

TEST(Separable, SampledStatesArePpt) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = t % 2 ? 3 : 2;
    const auto sigma = sample_separable(d, d, 4, rng);
    EXPECT_NEAR(trace(sigma.matrix()).real(), 1.0, 1e-12);
    EXPECT_TRUE(is_psd(partial_transpose(sigma.matrix(), d, d)));
  }
  // The Bell state is NPT.
  EXPECT_FALSE(is_psd(partial_transpose(make_state({StateFamily::kBell, 0.0}).matrix(), 2, 2)));
}

TEST(Random, GinibreStatesAreValid) {
  std::mt19937_64 rng(2);
  for (std::size_t rank : {1u, 2u, 4u}) {
    const auto rho = random_density(4, rank, rng);
    EXPECT_TRUE(is_psd(rho.matrix()));
    EXPECT_NEAR(trace(rho.matrix()).real(), 1.0, 1e-12);
    if (rank == 1) EXPECT_NEAR(rho.purity(), 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace ewcert
