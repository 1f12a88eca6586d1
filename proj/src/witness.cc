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

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

WitnessEvaluation classify_traces(double tr_plus, double tr_minus) {
  WitnessEvaluation e{tr_plus, tr_minus, Verdict::kUndetected};
  if (std::min(tr_plus, tr_minus) < -kVerdictThreshold) e.verdict = Verdict::kEntangled;
  return e;
}

}  // namespace

CoefficientMatrix::CoefficientMatrix(int dim_a, int dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 2 || dim_b < 2) throw InputError("local dimensions must be at least 2");
}

void CoefficientMatrix::set(GridIndex idx, double value) {
  if (idx.row < 0 || idx.row >= rows() || idx.col < 0 || idx.col >= cols()) {
    throw InputError("coefficient index outside the operator basis");
  }
  if (!std::isfinite(value)) throw InputError("coefficient is not finite");
  coeffs_[idx] = value;
}

double CoefficientMatrix::at(GridIndex idx) const {
  const auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? 0.0 : it->second;
}

std::vector<GridIndex> CoefficientMatrix::support() const {
  std::vector<GridIndex> out;
  for (const auto& [idx, v] : coeffs_) out.push_back(idx);
  return out;
}

RealMatrix CoefficientMatrix::dense() const {
  RealMatrix m(static_cast<std::size_t>(rows()), static_cast<std::size_t>(cols()));
  for (const auto& [idx, v] : coeffs_) {
    m(static_cast<std::size_t>(idx.row), static_cast<std::size_t>(idx.col)) = v;
  }
  return m;
}

double CoefficientMatrix::operator_norm() const { return ewcert::operator_norm(dense()); }

bool CoefficientMatrix::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return kv.second == 0.0; });
}

CoefficientMatrix CoefficientMatrix::scaled(double t) const {
  CoefficientMatrix out = *this;
  for (auto& [idx, v] : out.coeffs_) v *= t;
  return out;
}

std::string CoefficientMatrix::label(GridIndex idx) const {
  if (dim_a_ == 2 && dim_b_ == 2) return pauli_pair_label(idx);
  return std::to_string(idx.row + 1) + "," + std::to_string(idx.col + 1);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

}  // namespace

CoefficientMatrix parse_qubit_coefficients(std::string_view text) {
  CoefficientMatrix c = CoefficientMatrix::qubits();
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("coefficient entries look like XX=0.5");
    }
    const auto idx = parse_pauli_pair(trim(item.substr(0, eq)));
    const auto num = trim(item.substr(eq + 1));
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (ec != std::errc() || ptr != num.data() + num.size() || num.empty()) {
      throw InputError("malformed coefficient '" + std::string(num) + "'");
    }
    if (c.coefficients().contains(idx)) {
      throw InputError("duplicate coefficient " + pauli_pair_label(idx));
    }
    c.set(idx, v);
    start = end + 1;
  }
  return c;
}

double separable_scale(int dim_a, int dim_b) {
  return std::sqrt(static_cast<double>(dim_a - 1) * static_cast<double>(dim_b - 1));
}

double separable_bound(const CoefficientMatrix& c) {
  return separable_scale(c.dim_a(), c.dim_b()) * c.operator_norm();
}

std::string_view verdict_name(Verdict v) {
  return v == Verdict::kEntangled ? "entangled" : "undetected";
}

ComplexMatrix MirroredWitnessPair::observable() const {
  const auto basis_a = gell_mann_basis(expansion_.dim_a());
  const auto basis_b = gell_mann_basis(expansion_.dim_b());
  const auto dim = static_cast<std::size_t>(expansion_.dim_a() * expansion_.dim_b());
  ComplexMatrix s(dim, dim);
  for (const auto& [idx, c] : expansion_.coefficients()) {
    s = s + Complex(c) * kron(basis_a.operators[static_cast<std::size_t>(idx.row) + 1],
                              basis_b.operators[static_cast<std::size_t>(idx.col) + 1]);
  }
  return s;
}

ComplexMatrix MirroredWitnessPair::plus_operator() const {
  const ComplexMatrix s = observable();
  return Complex(bound_) * ComplexMatrix::identity(s.rows()) + s;
}

ComplexMatrix MirroredWitnessPair::minus_operator() const {
  const ComplexMatrix s = observable();
  return Complex(bound_) * ComplexMatrix::identity(s.rows()) - s;
}

MirroredWitnessPair make_witness_pair(const CoefficientMatrix& c) {
  if (c.is_zero()) throw InputError("a zero coefficient matrix defines no witness");
  return MirroredWitnessPair(separable_bound(c), c);
}

double expansion_value(const CoefficientMatrix& c, const CorrelatorGrid& grid) {
  if (c.dim_a() != grid.dim_a() || c.dim_b() != grid.dim_b()) {
    throw InputError("coefficient and grid dimensions differ");
  }
  double s = 0.0;
  for (const auto& [idx, v] : c.coefficients()) s += v * grid.at(idx);
  return s;
}

WitnessEvaluation evaluate_witness(const MirroredWitnessPair& w, const CorrelatorGrid& grid) {
  const double s = expansion_value(w.expansion(), grid);
  return classify_traces(w.bound() + s, w.bound() - s);
}

WitnessEvaluation evaluate_witness(const MirroredWitnessPair& w, const DensityMatrix& rho) {
  return classify_traces(rho.expectation(w.plus_operator()).real(),
                         rho.expectation(w.minus_operator()).real());
}

}  // namespace ewcert
