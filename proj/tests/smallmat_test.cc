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

#include "ewcert/smallmat.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

RealMatrix random_real(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  RealMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = g(rng);
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// Roots of the characteristic polynomial of a real symmetric 3x3 matrix
// (trigonometric form), descending.
std::vector<double> cubic_eigenvalues(const RealMatrix& a) {
  const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double p2 = std::pow(a(0, 0) - q, 2) + std::pow(a(1, 1) - q, 2) +
                    std::pow(a(2, 2) - q, 2) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  RealMatrix b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
  const double det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                     b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                     b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
  const double r = std::clamp(det / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double e1 = q + 2.0 * p * std::cos(phi);
  const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  return {e1, 3.0 * q - e1 - e3, e3};
}

TEST(Matrix, KronMatchesIndexFormula) {
  const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
  const ComplexMatrix b{{0.0, Complex(0, 1)}, {5.0, 6.0}};
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t s = 0; s < 2; ++s) EXPECT_EQ(k(2 * i + r, 2 * j + s), a(i, j) * b(r, s));
}

TEST(Matrix, ShapeMismatchThrows) {
  const RealMatrix a(2, 3);
  const RealMatrix b(2, 3);
  EXPECT_THROW(a * b, InputError);
  EXPECT_THROW(a + RealMatrix(3, 2), InputError);
}

TEST(SymmetricEig, MatchesCharacteristicPolynomial) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    RealMatrix a = random_real(3, 3, rng);
    a = a + transpose(a);
    const auto eig = symmetric_eig(a);
    const auto ref = cubic_eigenvalues(a);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(eig.values[k], ref[k], 1e-10);
  }
}

TEST(SymmetricEig, TwoByTwoClosedForm) {
  const RealMatrix a{{2.0, 1.0}, {1.0, -1.0}};
  const auto eig = symmetric_eig(a);
  const double mid = 0.5, rad = std::sqrt(1.5 * 1.5 + 1.0);
  EXPECT_NEAR(eig.values[0], mid + rad, 1e-14);
  EXPECT_NEAR(eig.values[1], mid - rad, 1e-14);
}

TEST(HermitianEig, ReconstructsAndIsUnitary) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u, 9u}) {
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto eig = hermitian_eig(h);
    ComplexMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = eig.values[i];
    EXPECT_LT(max_abs_diff(eig.vectors * d * adjoint(eig.vectors), h), 1e-11) << n;
    EXPECT_LT(max_abs_diff(adjoint(eig.vectors) * eig.vectors, ComplexMatrix::identity(n)), 1e-12);
    for (std::size_t i = 1; i < n; ++i) EXPECT_GE(eig.values[i - 1], eig.values[i]);
    double tr = 0.0;
    for (double v : eig.values) tr += v;
    EXPECT_NEAR(tr, trace(h).real(), 1e-11);
  }
}

TEST(HermitianEig, PauliY) {
  const ComplexMatrix y{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
  const auto eig = hermitian_eig(y);
  EXPECT_NEAR(eig.values[0], 1.0, 1e-15);
  EXPECT_NEAR(eig.values[1], -1.0, 1e-15);
}

TEST(HermitianEig, RejectsBadInput) {
  const ComplexMatrix m{{0.0, 1.0}, {2.0, 0.0}};
  EXPECT_THROW(hermitian_eig(m), InputError);
  EXPECT_THROW(hermitian_eig(ComplexMatrix(2, 3)), InputError);
  ComplexMatrix nan(2, 2);
  nan(0, 0) = std::nan("");
  EXPECT_THROW(hermitian_eig(nan), InputError);
}

TEST(Svd, SingularValuesAreEigenvaluesOfGram) {
  std::mt19937_64 rng(3);
  for (auto [r, c] : {std::pair{3, 3}, std::pair{2, 5}, std::pair{8, 3}}) {
    const RealMatrix m = random_real(r, c, rng);
    const auto sv = singular_values(m);
    ASSERT_EQ(sv.size(), static_cast<std::size_t>(std::min(r, c)));
    const RealMatrix gram = r <= c ? m * transpose(m) : transpose(m) * m;
    const auto eig = symmetric_eig(gram);
    for (std::size_t k = 0; k < sv.size(); ++k) EXPECT_NEAR(sv[k] * sv[k], eig.values[k], 1e-10);
    const auto d = svd(m);
    RealMatrix s(d.sigma.size(), d.sigma.size());
    for (std::size_t k = 0; k < d.sigma.size(); ++k) s(k, k) = d.sigma[k];
    EXPECT_LT(max_abs_diff(d.u * s * transpose(d.v), m), 1e-10);
  }
}

TEST(Svd, NormsOfKnownMatrices) {
  const RealMatrix diag{{3.0, 0.0, 0.0}, {0.0, -2.0, 0.0}, {0.0, 0.0, 0.5}};
  EXPECT_NEAR(operator_norm(diag), 3.0, 1e-14);
  EXPECT_NEAR(nuclear_norm(diag), 5.5, 1e-14);
  const RealMatrix rank1{{1.0, 2.0}, {2.0, 4.0}};
  EXPECT_NEAR(operator_norm(rank1), 5.0, 1e-13);
  EXPECT_NEAR(nuclear_norm(rank1), 5.0, 1e-7);
  EXPECT_EQ(operator_norm(RealMatrix(3, 3)), 0.0);
}

TEST(Psd, Classification) {
  EXPECT_TRUE(is_psd(RealMatrix{{1.0, 1.0}, {1.0, 1.0}}));
  EXPECT_FALSE(is_psd(RealMatrix{{1.0, 2.0}, {2.0, 1.0}}));
  EXPECT_TRUE(is_psd(ComplexMatrix{{1.0, Complex(0, 1)}, {Complex(0, -1), 1.0}}));
}

TEST(SpdFactor, SolveInverseAndLogDet) {
  std::mt19937_64 rng(5);
  const RealMatrix b = random_real(5, 5, rng);
  const RealMatrix a = b * transpose(b) + RealMatrix::identity(5);
  const auto f = SpdFactor::compute(a);
  ASSERT_TRUE(f.has_value());
  EXPECT_LT(max_abs_diff(a * f->inverse(), RealMatrix::identity(5)), 1e-11);
  const auto eig = symmetric_eig(a);
  double ld = 0.0;
  for (double v : eig.values) ld += std::log(v);
  EXPECT_NEAR(f->log_det(), ld, 1e-10);
  const std::vector<double> rhs{1, 2, 3, 4, 5};
  const auto x = f->solve(rhs);
  for (std::size_t i = 0; i < 5; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 5; ++j) s += a(i, j) * x[j];
    EXPECT_NEAR(s, rhs[i], 1e-10);
  }
  EXPECT_FALSE(SpdFactor::compute(RealMatrix{{1.0, 2.0}, {2.0, 1.0}}).has_value());
}

}  // namespace
}  // namespace ewcert
