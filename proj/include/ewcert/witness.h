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

// Separable bounds of correlator observables S = sum_ij c_ij G_i (x) G_j and
// the mirrored witness pairs W+- = bound * I +- S built from them.

#ifndef EWCERT_WITNESS_H_
#define EWCERT_WITNESS_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ewcert/grid.h"
#include "ewcert/quantum.h"
#include "ewcert/smallmat.h"

namespace ewcert {

// Real coefficients c_ij on an explicit support; the dense embedding is zero
// off the support.
class CoefficientMatrix {
 public:
  CoefficientMatrix(int dim_a, int dim_b);
  static CoefficientMatrix qubits() { return CoefficientMatrix(2, 2); }

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int rows() const { return dim_a_ * dim_a_ - 1; }
  int cols() const { return dim_b_ * dim_b_ - 1; }

  void set(GridIndex idx, double value);
  // Zero off the support.
  double at(GridIndex idx) const;
  const std::map<GridIndex, double>& coefficients() const { return coeffs_; }
  std::vector<GridIndex> support() const;

  RealMatrix dense() const;
  double operator_norm() const;
  bool is_zero() const;
  CoefficientMatrix scaled(double t) const;
  std::string label(GridIndex idx) const;

  friend bool operator==(const CoefficientMatrix&, const CoefficientMatrix&) = default;

 private:
  int dim_a_;
  int dim_b_;
  std::map<GridIndex, double> coeffs_;
};

// Parses "XX=1,ZZ=-0.5" (qubits) into a coefficient matrix.
CoefficientMatrix parse_qubit_coefficients(std::string_view text);

// sqrt((dA - 1)(dB - 1)): the separable bound of an observable whose
// coefficient matrix has unit operator norm.
double separable_scale(int dim_a, int dim_b);

// |Tr[S sigma]| <= separable_bound(C) for every separable sigma.
double separable_bound(const CoefficientMatrix& c);

enum class Verdict { kEntangled, kUndetected };

std::string_view verdict_name(Verdict v);

// A witness value counts as violated only below -kVerdictThreshold.
inline constexpr double kVerdictThreshold = 1e-9;

class MirroredWitnessPair {
 public:
  double bound() const { return bound_; }
  const CoefficientMatrix& expansion() const { return expansion_; }

  // Dense operators in the Gell-Mann product basis, built on demand.
  ComplexMatrix observable() const;
  ComplexMatrix plus_operator() const;
  ComplexMatrix minus_operator() const;

 private:
  friend MirroredWitnessPair make_witness_pair(const CoefficientMatrix& c);
  MirroredWitnessPair(double bound, CoefficientMatrix expansion)
      : bound_(bound), expansion_(std::move(expansion)) {}

  double bound_;
  CoefficientMatrix expansion_;
};

// Throws InputError for the zero matrix, which defines no witness.
MirroredWitnessPair make_witness_pair(const CoefficientMatrix& c);

struct WitnessEvaluation {
  double tr_plus = 0.0;
  double tr_minus = 0.0;
  Verdict verdict = Verdict::kUndetected;
};

// sum_ij c_ij g_ij over the support of c; throws on missing correlators.
double expansion_value(const CoefficientMatrix& c, const CorrelatorGrid& grid);

// tr_+- = bound +- sum c_ij g_ij; entangled iff min(tr_+, tr_-) < -kVerdictThreshold.
WitnessEvaluation evaluate_witness(const MirroredWitnessPair& w, const CorrelatorGrid& grid);
// Same, from Tr[W+- rho] with the dense operators.
WitnessEvaluation evaluate_witness(const MirroredWitnessPair& w, const DensityMatrix& rho);

}  // namespace ewcert

#endif  // EWCERT_WITNESS_H_
