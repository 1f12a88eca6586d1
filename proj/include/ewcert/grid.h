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

// Correlator data with an explicit measured-support mask, plus the
// canonical JSON/CSV encodings.
//
// Grid indices are zero-based positions in the traceless part of the local
// operator basis: for qubits row/col 0, 1, 2 are X, Y, Z; for qudits index k
// is the Gell-Mann operator G_{k+1}. Qudit documents use the one-based
// operator number, so "1,1" is index (0, 0).

#ifndef EWCERT_GRID_H_
#define EWCERT_GRID_H_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ewcert/quantum.h"
#include "ewcert/smallmat.h"

namespace ewcert {

struct GridIndex {
  int row = 0;
  int col = 0;
  auto operator<=>(const GridIndex&) const = default;
};

// Experimental estimates may overshoot the physical range slightly. The
// limit for entry (i, j) is kValueHeadroom * |G_i| * |G_j| (operator norms),
// which is 1.05 for qubits.
inline constexpr double kValueHeadroom = 1.05;

class CorrelatorGrid {
 public:
  CorrelatorGrid(int dim_a, int dim_b);
  static CorrelatorGrid qubits() { return CorrelatorGrid(2, 2); }

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int rows() const { return dim_a_ * dim_a_ - 1; }
  int cols() const { return dim_b_ * dim_b_ - 1; }
  bool is_qubit() const { return dim_a_ == 2 && dim_b_ == 2; }

  // Throws InputError for out-of-range indices, non-finite values, and
  // values beyond the headroom limit (the message names the entry).
  void set(GridIndex idx, double value);
  void set(Pauli a, Pauli b, double value);

  bool measured(GridIndex idx) const { return values_.contains(idx); }
  // Throws InputError("missing correlator <label>") when unmeasured.
  double at(GridIndex idx) const;
  double at(Pauli a, Pauli b) const;

  const std::map<GridIndex, double>& values() const { return values_; }
  std::vector<GridIndex> support() const;
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // rows() x cols() matrix with zeros on unmeasured entries.
  RealMatrix dense() const;

  std::string label(GridIndex idx) const;
  double value_limit(GridIndex idx) const;

  friend bool operator==(const CorrelatorGrid&, const CorrelatorGrid&) = default;

 private:
  int dim_a_;
  int dim_b_;
  std::vector<double> norms_a_;
  std::vector<double> norms_b_;
  std::map<GridIndex, double> values_;
};

// An ordered list of distinct two-qubit Pauli correlators such as XX,ZZ.
class MeasurementSet {
 public:
  MeasurementSet() = default;
  explicit MeasurementSet(std::vector<GridIndex> entries);
  static MeasurementSet parse(std::string_view text);

  const std::vector<GridIndex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(GridIndex idx) const;
  // Entries sorted by (row, col).
  MeasurementSet sorted() const;
  std::string to_string() const;

  friend bool operator==(const MeasurementSet&, const MeasurementSet&) = default;

 private:
  std::vector<GridIndex> entries_;
};

std::string pauli_pair_label(GridIndex idx);
GridIndex parse_pauli_pair(std::string_view label);

enum class GridFormat { kJson, kCsv };

GridFormat parse_grid_format(std::string_view name);

// JSON: {"dims":[dA,dB],"correlators":{"XY":v,...}} with Pauli-pair keys for
// qubits and "i,j" keys otherwise. CSV: header `a,b,value`, one correlator
// per row; non-qubit grids carry a leading `# dims=dA,dB` line.
CorrelatorGrid parse_grid(std::string_view text, GridFormat format);

// Canonical form: entries in (row, col) order, reals printed with 17
// significant digits, LF line endings.
std::string emit_grid(const CorrelatorGrid& grid, GridFormat format);

// Keeps exactly the entries of `set`; throws "missing correlator XY" for any
// unmeasured pair.
CorrelatorGrid restrict_to(const CorrelatorGrid& grid, const MeasurementSet& set);
CorrelatorGrid restrict_to(const CorrelatorGrid& grid, const std::vector<GridIndex>& support);

// Every correlator Tr[(G_i (x) G_j) rho] of a dim_a x dim_b state.
CorrelatorGrid ideal_grid(const DensityMatrix& rho, int dim_a, int dim_b);

std::string format_real(double v);

}  // namespace ewcert

#endif  // EWCERT_GRID_H_
