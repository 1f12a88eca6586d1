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

#include "ewcert/patterns.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

struct Canonical {
  PatternTag tag;
  std::vector<GridIndex> cells;
};

// Order matters only for readability; the orbits are disjoint.
const std::vector<Canonical>& canonical_sets() {
  static const std::vector<Canonical> sets = {
      {PatternTag::kSingle, {{0, 0}}},
      {PatternTag::kLineRow, {{0, 0}, {0, 1}}},
      {PatternTag::kLineCol, {{0, 0}, {1, 0}}},
      {PatternTag::kTwoGeneric, {{0, 0}, {2, 2}}},
      {PatternTag::kThreeLine, {{0, 0}, {0, 1}, {0, 2}}},
      {PatternTag::kThreeLine, {{0, 0}, {1, 0}, {2, 0}}},
      {PatternTag::kThreeDiagonal, {{0, 0}, {1, 1}, {2, 2}}},
      {PatternTag::kLShape, {{0, 0}, {0, 2}, {2, 0}}},
      {PatternTag::kTwoPlusIsolated, {{0, 0}, {0, 1}, {2, 2}}},
      {PatternTag::kTwoPlusIsolated, {{0, 0}, {1, 0}, {2, 2}}},
  };
  return sets;
}

const std::vector<LabelPermutation>& all_permutations() {
  static const std::vector<LabelPermutation> perms = [] {
    std::vector<LabelPermutation> out;
    LabelPermutation p = kIdentityPermutation;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

std::vector<GridIndex> image(const std::vector<GridIndex>& cells, const LabelPermutation& pa,
                             const LabelPermutation& pb) {
  std::vector<GridIndex> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back({pa[c.row], pb[c.col]});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GridIndex> sorted_cells(const MeasurementSet& set) {
  auto cells = set.entries();
  std::sort(cells.begin(), cells.end());
  return cells;
}

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

// Maximizes b*beta + sqrt(a^2 (1 - beta^2) + c^2), a concave function on
// [-1, 1]. Returns beta.
double lshape_beta(double a, double b, double c, int& iterations) {
  auto f = [&](double beta) { return b * beta + std::sqrt(a * a * (1.0 - beta * beta) + c * c); };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = -1.0;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  iterations = 0;
  while (hi - lo > 1e-10) {
    ++iterations;
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  double best = 0.5 * (lo + hi);
  for (double edge : {-1.0, 1.0}) {
    if (f(edge) > f(best)) best = edge;
  }
  return best;
}

}  // namespace

std::string_view pattern_tag_name(PatternTag tag) {
  switch (tag) {
    case PatternTag::kSingle: return "Single";
    case PatternTag::kLineRow: return "LineRow";
    case PatternTag::kLineCol: return "LineCol";
    case PatternTag::kTwoGeneric: return "TwoGeneric";
    case PatternTag::kThreeLine: return "ThreeLine";
    case PatternTag::kThreeDiagonal: return "ThreeDiagonal";
    case PatternTag::kLShape: return "LShape";
    case PatternTag::kTwoPlusIsolated: return "TwoPlusIsolated";
    case PatternTag::kGeneral: return "General";
  }
  return "General";
}

bool PatternClass::can_detect() const {
  switch (tag) {
    case PatternTag::kSingle:
    case PatternTag::kLineRow:
    case PatternTag::kLineCol:
    case PatternTag::kThreeLine:
      return false;
    default:
      return true;
  }
}

MeasurementSet permute(const MeasurementSet& set, const LabelPermutation& perm_a,
                       const LabelPermutation& perm_b) {
  return MeasurementSet(image(set.entries(), perm_a, perm_b));
}

CorrelatorGrid permute(const CorrelatorGrid& grid, const LabelPermutation& perm_a,
                       const LabelPermutation& perm_b) {
  if (!grid.is_qubit()) throw InputError("label permutations act on qubit grids only");
  CorrelatorGrid out = CorrelatorGrid::qubits();
  for (const auto& [idx, v] : grid.values()) out.set({perm_a[idx.row], perm_b[idx.col]}, v);
  return out;
}

PatternClass classify(const MeasurementSet& set) {
  const auto target = sorted_cells(set);
  if (target.size() <= 3) {
    for (const auto& canon : canonical_sets()) {
      if (canon.cells.size() != target.size()) continue;
      for (const auto& pa : all_permutations()) {
        for (const auto& pb : all_permutations()) {
          if (image(canon.cells, pa, pb) == target) {
            return PatternClass{canon.tag, MeasurementSet(canon.cells), pa, pb};
          }
        }
      }
    }
  }
  return PatternClass{PatternTag::kGeneral, MeasurementSet(target), kIdentityPermutation,
                      kIdentityPermutation};
}

LShapeNorm lshape_norm(double alpha, double beta, double gamma) {
  LShapeNorm out;
  out.T = alpha * alpha + beta * beta + gamma * gamma;
  const double disc = std::max(0.0, out.T * out.T - 4.0 * beta * beta * gamma * gamma);
  out.lambda_plus = 0.5 * (out.T + std::sqrt(disc));
  return out;
}

NEResult ne_closed_form(const MeasurementSet& set, const CorrelatorGrid& grid) {
  if (!grid.is_qubit()) throw InputError("closed forms cover qubit grids only");
  const PatternClass pc = classify(set);
  if (pc.tag == PatternTag::kGeneral) {
    throw InputError("no closed form for " + set.to_string() + "; use the general solver");
  }
  // Canonical cell -> input cell, and the measured value there.
  const auto& canon = pc.representative.entries();
  auto cell = [&](std::size_t k) {
    return GridIndex{pc.perm_a[canon[k].row], pc.perm_b[canon[k].col]};
  };
  std::map<GridIndex, double> v;
  for (std::size_t k = 0; k < canon.size(); ++k) v[canon[k]] = grid.at(cell(k));

  // Coefficients in the canonical frame.
  std::map<GridIndex, double> c;
  double value = 0.0;
  int iterations = 0;
  auto line = [&](const std::vector<GridIndex>& cells) {
    double norm = 0.0;
    for (const auto& g : cells) norm += v[g] * v[g];
    norm = std::sqrt(norm);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      c[cells[k]] = norm > 0.0 ? v[cells[k]] / norm : (k == 0 ? 1.0 : 0.0);
    }
    return norm;
  };
  auto diagonal = [&](const std::vector<GridIndex>& cells) {
    double sum = 0.0;
    for (const auto& g : cells) {
      c[g] = sign_of(v[g]);
      sum += std::abs(v[g]);
    }
    return sum;
  };

  switch (pc.tag) {
    case PatternTag::kSingle:
    case PatternTag::kLineRow:
    case PatternTag::kLineCol:
    case PatternTag::kThreeLine:
      value = line(canon);
      break;
    case PatternTag::kTwoGeneric:
    case PatternTag::kThreeDiagonal:
      value = diagonal(canon);
      break;
    case PatternTag::kTwoPlusIsolated: {
      // Canonical sets are sorted, so the line pair comes first.
      value = line({canon[0], canon[1]}) + diagonal({canon[2]});
      break;
    }
    case PatternTag::kLShape: {
      const double a = v[{0, 0}];
      const double b = v[{0, 2}];
      const double g = v[{2, 0}];
      const double beta = lshape_beta(a, b, g, iterations);
      const double rest = std::sqrt(a * a * (1.0 - beta * beta) + g * g);
      c[{0, 0}] = rest > 0.0 ? a * (1.0 - beta * beta) / rest : 0.0;
      c[{0, 2}] = beta;
      c[{2, 0}] = rest > 0.0 ? g / rest : 0.0;
      value = a * c[{0, 0}] + b * beta + g * c[{2, 0}];
      break;
    }
    case PatternTag::kGeneral:
      break;
  }

  NEResult r;
  r.coefficients = CoefficientMatrix::qubits();
  for (std::size_t k = 0; k < canon.size(); ++k) r.coefficients.set(cell(k), c[canon[k]]);
  r.value = value;
  r.sign = SignBranch::kPlus;
  r.verdict = ne_verdict(value);
  r.diagnostics = {"closed_form", iterations, 0.0};
  return r;
}

const std::vector<PatternOrbit>& enumerate_orbits(int k) {
  if (k < 1 || k > 3) throw InputError("orbit enumeration supports k = 1, 2 or 3");
  static std::once_flag once;
  static std::array<std::vector<PatternOrbit>, 4> tables;
  std::call_once(once, [] {
    std::vector<GridIndex> cells;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) cells.push_back({i, j});
    }
    for (int size = 1; size <= 3; ++size) {
      std::set<std::vector<GridIndex>> seen;
      // Subsets in lexicographic order via a selection mask.
      std::vector<bool> mask(9, false);
      std::fill(mask.begin(), mask.begin() + size, true);
      std::vector<std::vector<GridIndex>> subsets;
      do {
        std::vector<GridIndex> s;
        for (int i = 0; i < 9; ++i) {
          if (mask[i]) s.push_back(cells[i]);
        }
        subsets.push_back(std::move(s));
      } while (std::prev_permutation(mask.begin(), mask.end()));
      std::sort(subsets.begin(), subsets.end());
      for (const auto& s : subsets) {
        if (seen.contains(s)) continue;
        std::set<std::vector<GridIndex>> orbit;
        for (const auto& pa : all_permutations()) {
          for (const auto& pb : all_permutations()) orbit.insert(image(s, pa, pb));
        }
        PatternOrbit o;
        o.pattern = classify(MeasurementSet(s));
        for (const auto& m : orbit) {
          seen.insert(m);
          o.members.emplace_back(m);
        }
        tables[size].push_back(std::move(o));
      }
    }
  });
  return tables[k];
}

}  // namespace ewcert
