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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<Complex> phi_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return {h, 0.0, 0.0, h};
}

// (I (x) u) |v> for a 2x2 u and a two-qubit |v>.
std::vector<Complex> apply_second(const ComplexMatrix& u, const std::vector<Complex>& v) {
  return matvec(kron(ComplexMatrix::identity(2), u), v);
}

}  // namespace

char pauli_char(Pauli p) { return "XYZ"[pauli_index(p)]; }

int pauli_index(Pauli p) { return static_cast<int>(p); }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'X': case 'x': return Pauli::X;
    case 'Y': case 'y': return Pauli::Y;
    case 'Z': case 'z': return Pauli::Z;
    default: throw InputError(std::string("unknown Pauli label '") + c + "'");
  }
}

ComplexMatrix pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::X: return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case Pauli::Y: return ComplexMatrix{{0.0, -kI}, {kI, 0.0}};
    case Pauli::Z: return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
  }
  throw InputError("invalid Pauli");
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, double tol) {
  if (!m.square() || m.rows() == 0) throw InputError("density matrix must be square");
  if (!is_hermitian(m, tol)) throw InputError("density matrix is not Hermitian");
  if (std::abs(trace(m) - 1.0) > tol) throw InputError("density matrix trace is not 1");
  const auto eig = hermitian_eig(m);
  if (eig.values.back() < -1e-9) throw InputError("density matrix is not positive");
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> psi) {
  const double n = norm2(psi);
  if (!(n > 0.0)) throw InputError("zero state vector");
  ComplexMatrix m(psi.size(), psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = 0; j < psi.size(); ++j) {
      m(i, j) = psi[i] * std::conj(psi[j]) / (n * n);
    }
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw InputError("dimension must be positive");
  return DensityMatrix(Complex(1.0 / static_cast<double>(dim)) *
                       ComplexMatrix::identity(dim));
}

double DensityMatrix::purity() const { return trace(m_ * m_).real(); }

Complex DensityMatrix::expectation(const ComplexMatrix& op) const {
  if (op.rows() != dim() || op.cols() != dim()) {
    throw InputError("operator dimension does not match the state");
  }
  Complex s{};
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) s += op(i, j) * m_(j, i);
  }
  return s;
}

OperatorBasis gell_mann_basis(int d) {
  if (d < 2) throw InputError("operator basis needs d >= 2");
  const auto n = static_cast<std::size_t>(d);
  const Complex scale = std::sqrt(static_cast<double>(d) / 2.0);
  OperatorBasis basis;
  basis.dim = n;
  basis.operators.push_back(ComplexMatrix::identity(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      ComplexMatrix sym(n, n);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.operators.push_back(scale * sym);
      ComplexMatrix anti(n, n);
      anti(j, k) = -kI;
      anti(k, j) = kI;
      basis.operators.push_back(scale * anti);
    }
  }
  for (std::size_t l = 1; l < n; ++l) {
    const double ld = static_cast<double>(l);
    const double norm = std::sqrt(2.0 / (ld * (ld + 1.0)));
    ComplexMatrix diag(n, n);
    for (std::size_t m = 0; m < l; ++m) diag(m, m) = norm;
    diag(l, l) = -ld * norm;
    basis.operators.push_back(scale * diag);
  }
  return basis;
}

StateFamily parse_state_family(std::string_view name) {
  if (name == "chi1") return StateFamily::kChi1;
  if (name == "chi3") return StateFamily::kChi3;
  if (name == "psi_theta") return StateFamily::kPsiTheta;
  if (name == "bell") return StateFamily::kBell;
  throw InputError("unknown state family '" + std::string(name) + "'");
}

std::string_view state_family_name(StateFamily f) {
  switch (f) {
    case StateFamily::kChi1: return "chi1";
    case StateFamily::kChi3: return "chi3";
    case StateFamily::kPsiTheta: return "psi_theta";
    case StateFamily::kBell: return "bell";
  }
  return "unknown";
}

std::vector<Complex> make_state_vector(const StateFamilyParams& params) {
  const double theta = params.theta;
  if (!std::isfinite(theta)) throw InputError("theta must be finite");
  switch (params.family) {
    case StateFamily::kBell:
      return phi_plus();
    case StateFamily::kPsiTheta:
      return {std::cos(theta), 0.0, 0.0, std::sin(theta)};
    case StateFamily::kChi1: {
      const double c = std::cos(theta / 2.0);
      const double s = std::sin(theta / 2.0);
      return apply_second(ComplexMatrix{{c, -s}, {s, c}}, phi_plus());
    }
    case StateFamily::kChi3: {
      const ComplexMatrix axis = Complex(std::cos(theta)) * pauli_matrix(Pauli::X) +
                                 Complex(std::sin(theta)) * pauli_matrix(Pauli::Z);
      const ComplexMatrix v = Complex(1.0 / std::sqrt(2.0)) *
                              (ComplexMatrix::identity(2) + kI * axis);
      return apply_second(v, phi_plus());
    }
  }
  throw InputError("unknown state family");
}

DensityMatrix make_state(const StateFamilyParams& params) {
  return DensityMatrix::from_pure(make_state_vector(params));
}

double correlator(const DensityMatrix& rho, const ComplexMatrix& a,
                  const ComplexMatrix& b) {
  if (a.rows() * b.rows() != rho.dim()) {
    throw InputError("local operator dimensions do not match the state");
  }
  return rho.expectation(kron(a, b)).real();
}

double ideal_correlator(const DensityMatrix& rho, Pauli a, Pauli b) {
  if (rho.dim() != 4) throw InputError("ideal_correlator expects a two-qubit state");
  return correlator(rho, pauli_matrix(a), pauli_matrix(b));
}

DensityMatrix depolarize(const DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("noise must lie in [0, 1]");
  const ComplexMatrix mixed =
      Complex(1.0 / static_cast<double>(rho.dim())) * ComplexMatrix::identity(rho.dim());
  return DensityMatrix::from_matrix(Complex(1.0 - p) * rho.matrix() + Complex(p) * mixed);
}

double CorrelatorSampler::sample(const DensityMatrix& rho, Pauli a, Pauli b,
                                 std::uint64_t shots) {
  if (shots == 0) throw InputError("shots must be at least 1");
  if (rho.dim() != 4) throw InputError("shot simulation expects a two-qubit state");
  const auto ea = hermitian_eig(pauli_matrix(a));
  const auto eb = hermitian_eig(pauli_matrix(b));

  std::vector<double> probs;
  std::vector<double> outcome;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      std::vector<Complex> va = {ea.vectors(0, i), ea.vectors(1, i)};
      std::vector<Complex> vb = {eb.vectors(0, j), eb.vectors(1, j)};
      std::vector<Complex> joint(4);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t s = 0; s < 2; ++s) joint[2 * r + s] = va[r] * vb[s];
      }
      const double p = inner(joint, matvec(rho.matrix(), joint)).real();
      probs.push_back(std::max(p, 0.0));
      outcome.push_back(std::round(ea.values[i]) * std::round(eb.values[j]));
    }
  }
  std::discrete_distribution<int> dist(probs.begin(), probs.end());
  double sum = 0.0;
  for (std::uint64_t k = 0; k < shots; ++k) sum += outcome[dist(rng_)];
  return sum / static_cast<double>(shots);
}

double sample_correlator(const DensityMatrix& rho, Pauli a, Pauli b,
                         std::uint64_t shots, std::uint64_t seed) {
  CorrelatorSampler sampler(seed);
  return sampler.sample(rho, a, b, shots);
}

std::vector<Complex> haar_pure_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> v(dim);
  double n = 0.0;
  while (!(n > 1e-12)) {
    for (auto& x : v) x = Complex(gauss(rng), gauss(rng));
    n = norm2(v);
  }
  for (auto& x : v) x /= n;
  return v;
}

DensityMatrix sample_separable(std::size_t dim_a, std::size_t dim_b, int terms,
                               std::mt19937_64& rng) {
  if (terms < 1) throw InputError("separable mixture needs at least one term");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<std::size_t>(terms));
  double total = 0.0;
  for (auto& w : weights) total += (w = expo(rng));

  const std::size_t dim = dim_a * dim_b;
  ComplexMatrix m(dim, dim);
  for (double w : weights) {
    const auto a = haar_pure_state(dim_a, rng);
    const auto b = haar_pure_state(dim_b, rng);
    std::vector<Complex> ab(dim);
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t j = 0; j < dim_b; ++j) ab[i * dim_b + j] = a[i] * b[j];
    }
    const double p = w / total;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) m(i, j) += p * ab[i] * std::conj(ab[j]);
    }
  }
  return DensityMatrix::from_matrix(m);
}

DensityMatrix sample_separable(int d, int terms, std::uint64_t seed) {
  if (d < 2) throw InputError("local dimension must be at least 2");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(d);
  return sample_separable(n, n, terms, rng);
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, std::mt19937_64& rng) {
  if (dim == 0 || rank == 0) throw InputError("dimension and rank must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, rank);
  for (auto& x : g.data()) x = Complex(gauss(rng), gauss(rng));
  ComplexMatrix m = g * adjoint(g);
  const Complex tr = trace(m);
  m = Complex(1.0 / tr.real()) * m;
  // Symmetrize away roundoff so the Hermiticity check is exact.
  ComplexMatrix h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  }
  return DensityMatrix::from_matrix(h);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a,
                                std::size_t dim_b) {
  if (m.rows() != dim_a * dim_b || !m.square()) {
    throw InputError("partial_transpose: dimension mismatch");
  }
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_b; ++j) {
      for (std::size_t k = 0; k < dim_a; ++k) {
        for (std::size_t l = 0; l < dim_b; ++l) {
          out(i * dim_b + l, k * dim_b + j) = m(i * dim_b + j, k * dim_b + l);
        }
      }
    }
  }
  return out;
}

}  // namespace ewcert
