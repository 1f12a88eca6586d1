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

// Operator algebra and state models: Pauli and Gell-Mann operators, density
// matrices, the rotated Bell-state families used in the experiments, exact
// correlators, and seeded finite-shot sampling.

#ifndef EWCERT_QUANTUM_H_
#define EWCERT_QUANTUM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "ewcert/smallmat.h"

namespace ewcert {

enum class Pauli { X = 0, Y = 1, Z = 2 };

inline constexpr Pauli kPaulis[] = {Pauli::X, Pauli::Y, Pauli::Z};

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
int pauli_index(Pauli p);
// Y = [[0, -i], [i, 0]].
ComplexMatrix pauli_matrix(Pauli p);

class DensityMatrix {
 public:
  // Validates Hermiticity and unit trace (within tol) and a minimum
  // eigenvalue of at least -1e-9.
  static DensityMatrix from_matrix(const ComplexMatrix& m, double tol = 1e-10);
  // Normalizes psi; throws on the zero vector.
  static DensityMatrix from_pure(std::span<const Complex> psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  double purity() const;
  // Tr(op * rho).
  Complex expectation(const ComplexMatrix& op) const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

// Index 0 is the identity; the remaining d^2 - 1 operators are traceless
// Gell-Mann matrices scaled so that Tr(G_k G_l) = d delta_kl. For d = 2 the
// basis is {I, X, Y, Z}.
struct OperatorBasis {
  std::size_t dim = 0;
  std::vector<ComplexMatrix> operators;
};

OperatorBasis gell_mann_basis(int d);

enum class StateFamily { kChi1, kChi3, kPsiTheta, kBell };

StateFamily parse_state_family(std::string_view name);
std::string_view state_family_name(StateFamily f);

struct StateFamilyParams {
  StateFamily family = StateFamily::kBell;
  double theta = 0.0;
};

// chi1:      (I (x) R_Y(theta)) |Phi+>,  R_Y(theta) = exp(-i theta Y / 2)
// chi3:      (I (x) V) |Phi+>,  V = (I + i (cos(theta) X + sin(theta) Z)) / sqrt(2)
// psi_theta: cos(theta) |00> + sin(theta) |11>
// bell:      |Phi+> = (|00> + |11>) / sqrt(2)
std::vector<Complex> make_state_vector(const StateFamilyParams& params);
DensityMatrix make_state(const StateFamilyParams& params);

// Tr[(A (x) B) rho] for a two-qubit state.
double ideal_correlator(const DensityMatrix& rho, Pauli a, Pauli b);
// Tr[(A (x) B) rho] for local operators of any dimension.
double correlator(const DensityMatrix& rho, const ComplexMatrix& a,
                  const ComplexMatrix& b);

// (1 - p) rho + p I / dim.
DensityMatrix depolarize(const DensityMatrix& rho, double p);

// Draws shots from the four-outcome joint eigenbasis distribution of A (x) B
// and returns the mean product of the +-1 outcomes. One sampler per thread.
class CorrelatorSampler {
 public:
  explicit CorrelatorSampler(std::uint64_t seed) : rng_(seed) {}
  double sample(const DensityMatrix& rho, Pauli a, Pauli b, std::uint64_t shots);

 private:
  std::mt19937_64 rng_;
};

double sample_correlator(const DensityMatrix& rho, Pauli a, Pauli b,
                         std::uint64_t shots, std::uint64_t seed);

std::vector<Complex> haar_pure_state(std::size_t dim, std::mt19937_64& rng);

// Mixture of `terms` Haar-random pure product states with uniform Dirichlet
// weights.
DensityMatrix sample_separable(std::size_t dim_a, std::size_t dim_b, int terms,
                               std::mt19937_64& rng);
DensityMatrix sample_separable(int d, int terms, std::uint64_t seed);

// Random state of the given rank from a complex Ginibre matrix.
DensityMatrix random_density(std::size_t dim, std::size_t rank, std::mt19937_64& rng);

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a,
                                std::size_t dim_b);

}  // namespace ewcert

#endif  // EWCERT_QUANTUM_H_
