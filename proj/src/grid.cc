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

#include "ewcert/grid.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "ewcert/errors.h"
#include "json.hpp"

namespace ewcert {
namespace {

using nlohmann::json;

std::vector<double> local_norms(int d) {
  if (d == 2) return {1.0, 1.0, 1.0};
  const auto basis = gell_mann_basis(d);
  std::vector<double> norms;
  for (std::size_t k = 1; k < basis.operators.size(); ++k) {
    const auto eig = hermitian_eig(basis.operators[k]);
    norms.push_back(std::max(std::abs(eig.values.front()), std::abs(eig.values.back())));
  }
  return norms;
}

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw InputError("malformed " + what + " '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s, const std::string& what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw InputError("malformed " + what + " '" + std::string(s) + "'");
  }
  return v;
}

// "i,j" with one-based operator numbers.
GridIndex parse_index_key(std::string_view key) {
  const auto comma = key.find(',');
  if (comma == std::string_view::npos) {
    throw InputError("malformed correlator key '" + std::string(key) + "'");
  }
  const int i = parse_int(key.substr(0, comma), "correlator key");
  const int j = parse_int(key.substr(comma + 1), "correlator key");
  return {i - 1, j - 1};
}

GridIndex parse_key(const CorrelatorGrid& grid, std::string_view key) {
  return grid.is_qubit() ? parse_pauli_pair(key) : parse_index_key(key);
}

void insert_unique(CorrelatorGrid& grid, GridIndex idx, double value) {
  if (grid.measured(idx)) {
    throw InputError("duplicate correlator " + grid.label(idx));
  }
  grid.set(idx, value);
}

std::string_view trim_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::pair<int, int> parse_dims_pair(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw InputError("dims must have two entries");
  return {parse_int(parts[0], "dimension"), parse_int(parts[1], "dimension")};
}

CorrelatorGrid parse_json(std::string_view text) {
  // nlohmann keeps the last of duplicated keys, so track keys per object.
  std::vector<std::set<std::string>> open_objects;
  std::string duplicate;
  json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        open_objects.emplace_back();
        break;
      case json::parse_event_t::object_end:
        if (!open_objects.empty()) open_objects.pop_back();
        break;
      case json::parse_event_t::key:
        if (!open_objects.empty() &&
            !open_objects.back().insert(parsed.get<std::string>()).second &&
            duplicate.empty()) {
          duplicate = parsed.get<std::string>();
        }
        break;
      default:
        break;
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), cb);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON grid: ") + e.what());
  }
  if (!duplicate.empty()) throw InputError("duplicate key '" + duplicate + "'");
  if (!doc.is_object()) throw InputError("grid document must be a JSON object");

  const auto dims = doc.find("dims");
  if (dims == doc.end() || !dims->is_array() || dims->size() != 2 ||
      !(*dims)[0].is_number_integer() || !(*dims)[1].is_number_integer()) {
    throw InputError("grid document needs \"dims\": [dA, dB]");
  }
  CorrelatorGrid grid((*dims)[0].get<int>(), (*dims)[1].get<int>());

  const auto corr = doc.find("correlators");
  if (corr == doc.end() || !corr->is_object()) {
    throw InputError("grid document needs a \"correlators\" object");
  }
  for (const auto& [key, value] : corr->items()) {
    if (!value.is_number()) throw InputError("correlator " + key + " is not a number");
    insert_unique(grid, parse_key(grid, key), value.get<double>());
  }
  if (grid.empty()) throw InputError("no measured entries");
  return grid;
}

CorrelatorGrid parse_csv(std::string_view text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && trim_cr(lines.back()).empty()) lines.pop_back();
  std::size_t pos = 0;
  int dim_a = 2;
  int dim_b = 2;
  if (pos < lines.size() && trim_cr(lines[pos]).starts_with("# dims=")) {
    std::tie(dim_a, dim_b) = parse_dims_pair(trim_cr(lines[pos]).substr(7));
    ++pos;
  }
  if (pos >= lines.size() || trim_cr(lines[pos]) != "a,b,value") {
    throw InputError("CSV grid must start with the header a,b,value");
  }
  ++pos;
  CorrelatorGrid grid(dim_a, dim_b);
  for (; pos < lines.size(); ++pos) {
    const auto line = trim_cr(lines[pos]);
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw InputError("CSV line " + std::to_string(pos + 1) + " needs three fields");
    }
    GridIndex idx;
    if (grid.is_qubit()) {
      if (fields[0].size() != 1 || fields[1].size() != 1) {
        throw InputError("unknown Pauli label in CSV line " + std::to_string(pos + 1));
      }
      idx = {pauli_index(pauli_from_char(fields[0][0])),
             pauli_index(pauli_from_char(fields[1][0]))};
    } else {
      idx = {parse_int(fields[0], "operator index") - 1,
             parse_int(fields[1], "operator index") - 1};
    }
    insert_unique(grid, idx, parse_double(fields[2], "correlator value"));
  }
  if (grid.empty()) throw InputError("no measured entries");
  return grid;
}

}  // namespace

CorrelatorGrid::CorrelatorGrid(int dim_a, int dim_b) : dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 2 || dim_b < 2) throw InputError("local dimensions must be at least 2");
  if (dim_a > 8 || dim_b > 8) throw InputError("local dimensions above 8 are not supported");
  norms_a_ = local_norms(dim_a);
  norms_b_ = local_norms(dim_b);
}

double CorrelatorGrid::value_limit(GridIndex idx) const {
  return kValueHeadroom * norms_a_.at(static_cast<std::size_t>(idx.row)) *
         norms_b_.at(static_cast<std::size_t>(idx.col));
}

void CorrelatorGrid::set(GridIndex idx, double value) {
  if (idx.row < 0 || idx.row >= rows() || idx.col < 0 || idx.col >= cols()) {
    throw InputError("correlator index (" + std::to_string(idx.row + 1) + "," +
                     std::to_string(idx.col + 1) + ") is outside the operator basis");
  }
  if (!std::isfinite(value)) throw InputError("correlator " + label(idx) + " is not finite");
  if (std::abs(value) > value_limit(idx)) {
    throw InputError("correlator " + label(idx) + " value " + format_real(value) +
                     " exceeds " + format_real(value_limit(idx)) + " in magnitude");
  }
  values_[idx] = value;
}

void CorrelatorGrid::set(Pauli a, Pauli b, double value) {
  if (!is_qubit()) throw InputError("Pauli labels require a qubit grid");
  set(GridIndex{pauli_index(a), pauli_index(b)}, value);
}

double CorrelatorGrid::at(GridIndex idx) const {
  const auto it = values_.find(idx);
  if (it == values_.end()) throw InputError("missing correlator " + label(idx));
  return it->second;
}

double CorrelatorGrid::at(Pauli a, Pauli b) const {
  return at(GridIndex{pauli_index(a), pauli_index(b)});
}

std::vector<GridIndex> CorrelatorGrid::support() const {
  std::vector<GridIndex> out;
  out.reserve(values_.size());
  for (const auto& [idx, v] : values_) out.push_back(idx);
  return out;
}

RealMatrix CorrelatorGrid::dense() const {
  RealMatrix m(static_cast<std::size_t>(rows()), static_cast<std::size_t>(cols()));
  for (const auto& [idx, v] : values_) {
    m(static_cast<std::size_t>(idx.row), static_cast<std::size_t>(idx.col)) = v;
  }
  return m;
}

std::string CorrelatorGrid::label(GridIndex idx) const {
  if (is_qubit() && idx.row >= 0 && idx.row < 3 && idx.col >= 0 && idx.col < 3) {
    return pauli_pair_label(idx);
  }
  return std::to_string(idx.row + 1) + "," + std::to_string(idx.col + 1);
}

std::string pauli_pair_label(GridIndex idx) {
  if (idx.row < 0 || idx.row > 2 || idx.col < 0 || idx.col > 2) {
    throw InputError("not a Pauli pair index");
  }
  return {pauli_char(kPaulis[idx.row]), pauli_char(kPaulis[idx.col])};
}

GridIndex parse_pauli_pair(std::string_view label) {
  if (label.size() != 2) {
    throw InputError("unknown Pauli label '" + std::string(label) + "'");
  }
  return {pauli_index(pauli_from_char(label[0])), pauli_index(pauli_from_char(label[1]))};
}

MeasurementSet::MeasurementSet(std::vector<GridIndex> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() > 9) {
    throw InputError("a measurement set holds 1 to 9 Pauli pairs");
  }
  std::set<GridIndex> seen;
  for (const auto& e : entries_) {
    if (e.row < 0 || e.row > 2 || e.col < 0 || e.col > 2) {
      throw InputError("measurement set entry outside the Pauli grid");
    }
    if (!seen.insert(e).second) {
      throw InputError("duplicate measurement " + pauli_pair_label(e));
    }
  }
}

MeasurementSet MeasurementSet::parse(std::string_view text) {
  std::vector<GridIndex> entries;
  for (auto part : split(text, ',')) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    entries.push_back(parse_pauli_pair(part));
  }
  return MeasurementSet(std::move(entries));
}

bool MeasurementSet::contains(GridIndex idx) const {
  return std::find(entries_.begin(), entries_.end(), idx) != entries_.end();
}

MeasurementSet MeasurementSet::sorted() const {
  auto e = entries_;
  std::sort(e.begin(), e.end());
  return MeasurementSet(std::move(e));
}

std::string MeasurementSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += pauli_pair_label(entries_[i]);
  }
  return out;
}

GridFormat parse_grid_format(std::string_view name) {
  if (name == "json") return GridFormat::kJson;
  if (name == "csv") return GridFormat::kCsv;
  throw InputError("unknown grid format '" + std::string(name) + "'");
}

CorrelatorGrid parse_grid(std::string_view text, GridFormat format) {
  return format == GridFormat::kJson ? parse_json(text) : parse_csv(text);
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_grid(const CorrelatorGrid& grid, GridFormat format) {
  std::ostringstream out;
  if (format == GridFormat::kJson) {
    out << "{\"dims\":[" << grid.dim_a() << "," << grid.dim_b() << "],\"correlators\":{";
    bool first = true;
    for (const auto& [idx, v] : grid.values()) {
      if (!first) out << ",";
      first = false;
      out << "\"" << grid.label(idx) << "\":" << format_real(v);
    }
    out << "}}\n";
  } else {
    if (!grid.is_qubit()) out << "# dims=" << grid.dim_a() << "," << grid.dim_b() << "\n";
    out << "a,b,value\n";
    for (const auto& [idx, v] : grid.values()) {
      if (grid.is_qubit()) {
        const auto l = pauli_pair_label(idx);
        out << l[0] << "," << l[1];
      } else {
        out << idx.row + 1 << "," << idx.col + 1;
      }
      out << "," << format_real(v) << "\n";
    }
  }
  return out.str();
}

CorrelatorGrid restrict_to(const CorrelatorGrid& grid, const std::vector<GridIndex>& support) {
  CorrelatorGrid out(grid.dim_a(), grid.dim_b());
  for (const auto& idx : support) out.set(idx, grid.at(idx));
  return out;
}

CorrelatorGrid restrict_to(const CorrelatorGrid& grid, const MeasurementSet& set) {
  if (!grid.is_qubit()) throw InputError("Pauli measurement sets require a qubit grid");
  return restrict_to(grid, set.entries());
}

CorrelatorGrid ideal_grid(const DensityMatrix& rho, int dim_a, int dim_b) {
  if (static_cast<std::size_t>(dim_a * dim_b) != rho.dim()) {
    throw InputError("state dimension does not match dA * dB");
  }
  CorrelatorGrid grid(dim_a, dim_b);
  const auto basis_a = gell_mann_basis(dim_a);
  const auto basis_b = gell_mann_basis(dim_b);
  for (int i = 0; i < grid.rows(); ++i) {
    for (int j = 0; j < grid.cols(); ++j) {
      const double v = correlator(rho, basis_a.operators[static_cast<std::size_t>(i) + 1],
                                  basis_b.operators[static_cast<std::size_t>(j) + 1]);
      grid.set({i, j}, v);
    }
  }
  return grid;
}

}  // namespace ewcert
