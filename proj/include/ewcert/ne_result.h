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

#ifndef EWCERT_NE_RESULT_H_
#define EWCERT_NE_RESULT_H_

#include <string>

#include "ewcert/witness.h"

namespace ewcert {

enum class SignBranch { kPlus, kMinus };

inline char sign_char(SignBranch s) { return s == SignBranch::kPlus ? '+' : '-'; }

struct SolverDiagnostics {
  std::string method;
  int iterations = 0;
  double gap = 0.0;
};

// Normalized estimation: the largest |sum c_ij g_ij| over coefficient
// matrices with separable_bound(C) = 1. Values above 1 certify entanglement.
struct NEResult {
  double value = 0.0;
  // Optimizer on the measured support, scaled so separable_bound = 1. For
  // the '+' branch sum c_ij g_ij = value, for '-' it equals -value.
  CoefficientMatrix coefficients = CoefficientMatrix::qubits();
  SignBranch sign = SignBranch::kPlus;
  Verdict verdict = Verdict::kUndetected;
  SolverDiagnostics diagnostics;

  MirroredWitnessPair witness() const { return make_witness_pair(coefficients); }
};

inline Verdict ne_verdict(double value) {
  return value > 1.0 + kVerdictThreshold ? Verdict::kEntangled : Verdict::kUndetected;
}

}  // namespace ewcert

#endif  // EWCERT_NE_RESULT_H_
