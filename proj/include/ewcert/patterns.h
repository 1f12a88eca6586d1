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


#ifndef EWCERT_PATTERNS_H_
#define EWCERT_PATTERNS_H_

#include <array>
#include <string_view>
#include <vector>

#include "ewcert/grid.h"
#include "ewcert/ne_result.h"

namespace ewcert {

enum class PatternTag {
  kSingle,
  kLineRow,
  kLineCol,
  kTwoGeneric,
  kThreeLine,
  kThreeDiagonal,
  kLShape,
  kTwoPlusIsolated,
  kGeneral,
};

std::string_view pattern_tag_name(PatternTag tag);

// Relabeling of {X, Y, Z} -> {X, Y, Z}; label i maps to perm[i].
using LabelPermutation = std::array<int, 3>;

inline constexpr LabelPermutation kIdentityPermutation = {0, 1, 2};

struct PatternClass {
  PatternTag tag = PatternTag::kGeneral;
  // Sorted canonical set; for General this is the input itself.
  MeasurementSet representative;
  LabelPermutation perm_a = kIdentityPermutation;
  LabelPermutation perm_b = kIdentityPermutation;

  // Line patterns (and single correlators) never exceed the separable bound.
  bool can_detect() const;
};

// (i, j) -> (perm_a[i], perm_b[j]); the result is sorted.
MeasurementSet permute(const MeasurementSet& set, const LabelPermutation& perm_a,
                       const LabelPermutation& perm_b);
CorrelatorGrid permute(const CorrelatorGrid& grid, const LabelPermutation& perm_a,
                       const LabelPermutation& perm_b);

PatternClass classify(const MeasurementSet& set);

// Exact NE for every class except General (InputError). The returned
// coefficients live on the input support and always use the '+' branch.
NEResult ne_closed_form(const MeasurementSet& set, const CorrelatorGrid& grid);

// Spectral quantities of [[alpha, beta], [gamma, 0]].
struct LShapeNorm {
  double T = 0.0;
  double lambda_plus = 0.0;
};

LShapeNorm lshape_norm(double alpha, double beta, double gamma);

struct PatternOrbit {
  PatternClass pattern;  // classification of the first member
  std::vector<MeasurementSet> members;  // sorted sets in lexicographic order
};

// Partition of all k-element qubit measurement sets into orbits under
// independent relabeling of each party's Pauli axes. k in {1, 2, 3}.
const std::vector<PatternOrbit>& enumerate_orbits(int k);

}  // namespace ewcert

#endif  // EWCERT_PATTERNS_H_
