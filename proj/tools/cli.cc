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

#include "cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ewcert/errors.h"
#include "ewcert/grid.h"
#include "ewcert/patterns.h"
#include "ewcert/quantum.h"
#include "ewcert/solver.h"
#include "ewcert/spi.h"
#include "ewcert/witness.h"
#include "json.hpp"

namespace ewcert::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw InputError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string pi_label(std::int64_t num, std::int64_t den) {
  if (num == 0) return "0";
  std::string out = num < 0 ? "-" : "";
  const std::int64_t a = num < 0 ? -num : num;
  if (a != 1) out += std::to_string(a);
  out += "pi";
  if (den != 1) out += "/" + std::to_string(den);
  return out;
}

Angle make_pi_angle(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  Angle a;
  a.pi_fraction = std::make_pair(num, den);
  a.radians = static_cast<double>(num) * M_PI / static_cast<double>(den);
  a.label = pi_label(num, den);
  return a;
}

double tolerance_default() {
  if (const char* env = std::getenv("EWCERT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return SolverOptions{}.tol;
}

std::string permutation_text(const LabelPermutation& p) {
  std::string s;
  for (int i : p) s += pauli_char(kPaulis[i]);
  return s;
}

Json coefficients_json(const CoefficientMatrix& c) {
  Json j = Json::object();
  for (const auto& [idx, v] : c.coefficients()) j[c.label(idx)] = v;
  return j;
}

std::string expansion_text(const CoefficientMatrix& c) {
  std::string out;
  char buf[64];
  for (const auto& [idx, v] : c.coefficients()) {
    std::snprintf(buf, sizeof buf, "%s%.6g<%s>", out.empty() ? (v < 0 ? "-" : "") : (v < 0 ? " - " : " + "),
                  std::abs(v), c.label(idx).c_str());
    out += buf;
  }
  return out;
}

Json envelope(std::string_view command, std::string_view canonical, Json result) {
  Json j;
  j["command"] = command;
  j["input_digest"] = input_digest(canonical);
  j["result"] = std::move(result);
  return j;
}

struct GridInput {
  std::string input;
  std::string inline_grid;
  std::string format = "json";
};

void add_grid_options(CLI::App* sub, GridInput& g) {
  sub->add_option("--input", g.input, "correlator grid file");
  sub->add_option("--grid", g.inline_grid, "correlator grid given inline");
  sub->add_option("--format", g.format, "grid format: json or csv");
}

CorrelatorGrid load_grid(const GridInput& g) {
  if (g.input.empty() == g.inline_grid.empty()) {
    throw InputError("give exactly one of --input and --grid");
  }
  const std::string text = g.input.empty() ? g.inline_grid : read_file(g.input);
  return parse_grid(text, parse_grid_format(g.format));
}

struct SolveFlags {
  std::optional<double> tol;
  int max_iter = SolverOptions{}.max_iter;
};

void add_solve_options(CLI::App* sub, SolveFlags& s) {
  sub->add_option("--tol", s.tol, "solver tolerance (default from EWCERT_TOL or 1e-8)");
  sub->add_option("--max-iter", s.max_iter, "Newton steps per sign branch");
}

SolverOptions solver_options(const SolveFlags& s) {
  SolverOptions o;
  o.tol = s.tol ? *s.tol : tolerance_default();
  o.max_iter = s.max_iter;
  return o;
}

// NE on the given support, preferring the exact closed form for small
// qubit patterns.
NEResult solve_small(const CorrelatorGrid& grid, const MeasurementSet& set, const SolverOptions& o) {
  if (grid.is_qubit() && set.size() <= 3) return ne_closed_form(set, grid);
  return ne_solve(grid, set, o);
}

Json ne_json(const NEResult& r) {
  Json j;
  j["ne"] = r.value;
  j["verdict"] = verdict_name(r.verdict);
  j["sign"] = std::string(1, sign_char(r.sign));
  j["coefficients"] = coefficients_json(r.coefficients);
  return j;
}

Json witness_json(const MirroredWitnessPair& w, const WitnessEvaluation& ev) {
  Json j;
  j["bound"] = w.bound();
  j["expansion"] = expansion_text(w.expansion());
  j["tr_plus"] = ev.tr_plus;
  j["tr_minus"] = ev.tr_minus;
  j["verdict"] = verdict_name(ev.verdict);
  return j;
}

Json diagnostics_json(const SolverDiagnostics& d) {
  Json j;
  j["method"] = d.method;
  j["iterations"] = d.iterations;
  j["gap"] = d.gap;
  return j;
}

std::string grid_canonical(const CorrelatorGrid& grid, const std::string& set) {
  return emit_grid(grid, GridFormat::kJson) + "set=" + set + "\n";
}

// verify ----------------------------------------------------------------

struct VerifyArgs {
  GridInput grid;
  SolveFlags solve;
  std::string set;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const CorrelatorGrid grid = load_grid(a.grid);
  const SolverOptions opts = solver_options(a.solve);
  NEResult r;
  std::optional<MeasurementSet> set;
  if (!a.set.empty()) {
    set = MeasurementSet::parse(a.set).sorted();
    if (!grid.is_qubit()) throw InputError("--set names Pauli pairs and needs a qubit grid");
    r = ne_solve(grid, *set, opts);
  } else {
    r = ne_solve(grid, opts);
    if (grid.is_qubit()) set = MeasurementSet(grid.support());
  }

  Json res;
  res["dims"] = {grid.dim_a(), grid.dim_b()};
  res["set"] = set ? Json(set->to_string()) : Json(nullptr);
  res.update(ne_json(r));
  const auto w = r.witness();
  res["witness"] = witness_json(w, evaluate_witness(w, grid));
  res["diagnostics"] = diagnostics_json(r.diagnostics);
  if (set && set->size() <= 3) {
    const PatternClass pc = classify(*set);
    res["pattern"] = {{"tag", pattern_tag_name(pc.tag)}, {"can_detect", pc.can_detect()}};
    res["closed_form"] = ne_closed_form(*set, grid).value;
    if (!pc.can_detect()) res["note"] = "line pattern cannot detect";
  }
  out << envelope("verify", grid_canonical(grid, set ? set->to_string() : ""), res).dump(2) << "\n";
  return r.verdict == Verdict::kEntangled ? kEntangled : kUndetected;
}

// witness ---------------------------------------------------------------

struct WitnessArgs {
  GridInput grid;
  SolveFlags solve;
  std::string set;
  std::string coeffs;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const CorrelatorGrid grid = load_grid(a.grid);
  Json res;
  std::string canonical;
  if (!a.coeffs.empty()) {
    if (!a.set.empty()) throw InputError("--coeffs and --set are exclusive");
    if (!grid.is_qubit()) throw InputError("--coeffs names Pauli pairs and needs a qubit grid");
    const CoefficientMatrix c = parse_qubit_coefficients(a.coeffs);
    const auto w = make_witness_pair(c);
    res["coefficients"] = coefficients_json(c);
    res["expansion_value"] = expansion_value(c, grid);
    res["witness"] = witness_json(w, evaluate_witness(w, grid));
    std::ostringstream cs;
    for (const auto& [idx, v] : c.coefficients()) cs << c.label(idx) << '=' << format_real(v) << ';';
    canonical = grid_canonical(grid, "") + "coeffs=" + cs.str() + "\n";
  } else {
    const SolverOptions opts = solver_options(a.solve);
    NEResult r;
    std::string set_text;
    if (!a.set.empty()) {
      if (!grid.is_qubit()) throw InputError("--set names Pauli pairs and needs a qubit grid");
      const MeasurementSet set = MeasurementSet::parse(a.set).sorted();
      set_text = set.to_string();
      r = solve_small(grid, set, opts);
    } else {
      r = ne_solve(grid, opts);
    }
    res["set"] = set_text.empty() ? Json(nullptr) : Json(set_text);
    res.update(ne_json(r));
    const auto w = r.witness();
    res["witness"] = witness_json(w, evaluate_witness(w, grid));
    res["diagnostics"] = diagnostics_json(r.diagnostics);
    canonical = grid_canonical(grid, set_text);
  }
  out << envelope("witness", canonical, res).dump(2) << "\n";
  return kOk;
}

// simulate / sweep ------------------------------------------------------

struct SimulationFlags {
  std::string family = "bell";
  std::uint64_t shots = 0;
  bool ideal = false;
  double noise = 0.0;
  std::optional<std::uint64_t> seed;
};

void add_simulation_options(CLI::App* sub, SimulationFlags& s) {
  sub->add_option("--family", s.family, "chi1, chi3, psi_theta or bell");
  sub->add_option("--shots", s.shots, "shots per correlator; 0 means exact values");
  sub->add_flag("--ideal", s.ideal, "exact correlators");
  sub->add_option("--noise", s.noise, "depolarizing probability");
  sub->add_option("--seed", s.seed, "sampling seed");
}

void check_simulation(const SimulationFlags& s) {
  if (!(s.noise >= 0.0 && s.noise <= 1.0)) throw InputError("--noise must lie in [0, 1]");
  if (s.ideal && s.shots > 0) throw InputError("--ideal and --shots are exclusive");
  if (s.shots > 0 && !s.seed) throw InputError("sampling needs --seed");
}

CorrelatorGrid simulate_grid(const SimulationFlags& s, double theta, std::uint64_t stream) {
  DensityMatrix rho = make_state({parse_state_family(s.family), theta});
  if (s.noise > 0.0) rho = depolarize(rho, s.noise);
  if (s.shots == 0) return ideal_grid(rho, 2, 2);
  CorrelatorGrid g = CorrelatorGrid::qubits();
  CorrelatorSampler sampler(*s.seed + stream);
  for (Pauli a : kPaulis) {
    for (Pauli b : kPaulis) g.set(a, b, sampler.sample(rho, a, b, s.shots));
  }
  return g;
}

struct SimulateArgs {
  SimulationFlags sim;
  std::string theta = "0";
  std::string format = "json";
  std::string output;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  check_simulation(a.sim);
  const Angle theta = parse_angle(a.theta);
  const CorrelatorGrid g = simulate_grid(a.sim, theta.radians, 0);
  write_text(a.output, emit_grid(g, parse_grid_format(a.format)), out);
  return kOk;
}

struct SweepArgs {
  SimulationFlags sim;
  SolveFlags solve;
  std::string from = "-pi";
  std::string to = "pi";
  int steps = 19;
  std::string set;
  std::string format = "csv";
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  check_simulation(a.sim);
  const auto angles = angle_range(parse_angle(a.from), parse_angle(a.to), a.steps);
  const SolverOptions opts = solver_options(a.solve);
  std::optional<MeasurementSet> set;
  if (!a.set.empty()) set = MeasurementSet::parse(a.set).sorted();
  const bool csv = parse_grid_format(a.format) == GridFormat::kCsv;

  Json rows = Json::array();
  std::string text = "theta_label,theta,ne,verdict\n";
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const CorrelatorGrid g = simulate_grid(a.sim, angles[i].radians, i);
    const NEResult r = set ? solve_small(g, *set, opts) : ne_solve(g, opts);
    text += angles[i].label + "," + format_real(angles[i].radians) + "," + format_real(r.value) +
            "," + std::string(verdict_name(r.verdict)) + "\n";
    rows.push_back({{"theta_label", angles[i].label},
                    {"theta", angles[i].radians},
                    {"ne", r.value},
                    {"verdict", verdict_name(r.verdict)}});
  }
  if (csv) {
    out << text;
  } else {
    std::ostringstream canon;
    canon << a.sim.family << ';' << a.from << ';' << a.to << ';' << a.steps << ';'
          << (set ? set->to_string() : "") << ';' << a.sim.shots << ';'
          << format_real(a.sim.noise) << ';' << (a.sim.seed ? std::to_string(*a.sim.seed) : "");
    out << envelope("sweep", canon.str(), {{"rows", rows}}).dump(2) << "\n";
  }
  return kOk;
}

// classify / orbit ------------------------------------------------------

Json pattern_json(const PatternClass& pc) {
  Json j;
  j["tag"] = pattern_tag_name(pc.tag);
  j["representative"] = pc.representative.to_string();
  j["perm_a"] = permutation_text(pc.perm_a);
  j["perm_b"] = permutation_text(pc.perm_b);
  j["can_detect"] = pc.can_detect();
  return j;
}

int cmd_classify(const std::string& set_text, std::ostream& out) {
  const MeasurementSet set = MeasurementSet::parse(set_text).sorted();
  Json r{{"set", set.to_string()}};
  r.update(pattern_json(classify(set)));
  out << envelope("classify", set.to_string(), r).dump(2) << "\n";
  return kOk;
}

int cmd_orbit(int k, bool members, std::ostream& out) {
  const auto& orbits = enumerate_orbits(k);
  Json list = Json::array();
  for (const auto& o : orbits) {
    Json j = pattern_json(o.pattern);
    j["size"] = o.members.size();
    if (members) {
      Json m = Json::array();
      for (const auto& s : o.members) m.push_back(s.to_string());
      j["members"] = m;
    }
    list.push_back(j);
  }
  out << envelope("orbit", "k=" + std::to_string(k), {{"k", k}, {"orbits", list}}).dump(2) << "\n";
  return kOk;
}

// spi -------------------------------------------------------------------

struct SpiArgs {
  std::string input;
  std::string observable;
  std::string partition;
  std::uint64_t seed = SpiOptions{}.seed;
  int random_starts = SpiOptions{}.random_starts;
  bool ne = false;
};

Partition parse_partition(std::string_view text, std::size_t parties) {
  if (text.empty()) return trivial_partition(parties);
  Partition p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t bar = std::min(text.find(';', start), text.size());
    std::vector<std::size_t> block;
    std::size_t s = start;
    while (s < bar) {
      const std::size_t comma = std::min(text.find(',', s), bar);
      const auto v = parse_int(text.substr(s, comma - s), "party index");
      if (v < 0) throw InputError("negative party index");
      block.push_back(static_cast<std::size_t>(v));
      s = comma + 1;
    }
    p.push_back(std::move(block));
    start = bar + 1;
  }
  return p;
}

int cmd_spi(const SpiArgs& a, std::ostream& out) {
  if (a.input.empty() == a.observable.empty()) {
    throw InputError("give exactly one of --input and --observable");
  }
  const std::string text = a.input.empty() ? a.observable : read_file(a.input);
  Json spec;
  try {
    spec = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed observable JSON: ") + e.what());
  }
  if (!spec.is_array() || spec.empty()) throw InputError("observable must be a nonempty JSON list");
  // Terms carry "coeff" for lambda_max, or measured "value" with --ne.
  const char* key = a.ne ? "value" : "coeff";
  std::vector<double> coeffs;
  std::vector<std::string> labels;
  Json canon = Json::array();
  for (const auto& term : spec) {
    if (!term.is_object() || !term.contains(key) || !term.contains("paulis") ||
        !term[key].is_number() || !term["paulis"].is_string()) {
      throw InputError(std::string("each term needs a numeric ") + key + " and a paulis string");
    }
    coeffs.push_back(term[key].get<double>());
    labels.push_back(term["paulis"].get<std::string>());
    canon.push_back({{key, format_real(coeffs.back())}, {"paulis", labels.back()}});
  }
  if (a.ne) {
    if (!a.partition.empty()) throw InputError("--partition does not apply to --ne");
    MultipartiteOptions mo;
    mo.search_spi.seed = mo.final_spi.seed = a.seed;
    mo.final_spi.random_starts = a.random_starts;
    const MultipartiteNEResult r = ne_multipartite(labels, coeffs, mo);
    Json res;
    res["ne"] = r.value;
    res["upper_bound"] = r.upper_bound;
    res["verdict"] = std::string(verdict_name(r.verdict));
    Json terms = Json::array();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      terms.push_back({{"coeff", r.coefficients[i]}, {"paulis", labels[i]}});
    }
    res["coefficients"] = terms;
    res["lambda_max"] = r.lambda_max;
    res["rounds"] = r.rounds;
    res["spi_converged"] = r.spi_converged;
    res["heuristic"] = r.heuristic;
    const std::string canonical = canon.dump() + "|ne|" + std::to_string(a.seed) + "|" +
                                  std::to_string(a.random_starts);
    out << envelope("spi", canonical, res).dump(2) << "\n";
    return r.verdict == Verdict::kEntangled ? kEntangled : kUndetected;
  }
  const ObservableSum obs = ObservableSum::from_pauli_strings(coeffs, labels);
  const Partition part = parse_partition(a.partition, obs.parties());
  SpiOptions opts;
  opts.seed = a.seed;
  opts.random_starts = a.random_starts;
  const SPIResult r = k_separable_lambda_max(obs, part, opts);

  Json res;
  res["lambda_max"] = r.lambda_max;
  res["converged"] = r.converged;
  res["restarts_used"] = r.restarts_used;
  Json sites = Json::array();
  for (const auto& v : r.optimizer.sites) {
    Json site = Json::array();
    for (const Complex& z : v) site.push_back({z.real(), z.imag()});
    sites.push_back(site);
  }
  res["optimizer"] = sites;
  Json blocks = Json::array();
  for (const auto& b : part) blocks.push_back(b);
  res["partition"] = blocks;
  const std::string canonical = canon.dump() + "|" + blocks.dump() + "|" +
                                std::to_string(a.seed) + "|" + std::to_string(a.random_starts);
  out << envelope("spi", canonical, res).dump(2) << "\n";
  return kOk;
}

}  // namespace

Angle parse_angle(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '*') s += c;
  }
  if (s.empty()) throw InputError("empty angle");
  const auto pi = s.find("pi");
  if (pi == std::string::npos) {
    if (s.find('/') != std::string::npos) {
      throw InputError("angle '" + std::string(text) + "' needs a pi factor");
    }
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
      throw InputError("malformed angle '" + std::string(text) + "'");
    }
    if (v == 0.0) return make_pi_angle(0, 1);
    Angle a;
    a.radians = v;
    a.label = s;
    return a;
  }
  std::string head = s.substr(0, pi);
  std::string tail = s.substr(pi + 2);
  std::int64_t num = 1;
  if (head == "-") {
    num = -1;
  } else if (head == "+" || head.empty()) {
    num = 1;
  } else {
    num = parse_int(head[0] == '+' ? head.substr(1) : head, "angle");
  }
  std::int64_t den = 1;
  if (!tail.empty()) {
    if (tail[0] != '/') throw InputError("malformed angle '" + std::string(text) + "'");
    den = parse_int(tail.substr(1), "angle");
    if (den == 0) throw InputError("angle has a zero denominator");
  }
  return make_pi_angle(num, den);
}

std::vector<Angle> angle_range(const Angle& from, const Angle& to, int steps) {
  if (steps < 2) throw InputError("--steps must be at least 2");
  std::vector<Angle> out;
  const std::int64_t n = steps - 1;
  for (std::int64_t i = 0; i <= n; ++i) {
    if (from.pi_fraction && to.pi_fraction) {
      const auto [fn, fd] = *from.pi_fraction;
      const auto [tn, td] = *to.pi_fraction;
      out.push_back(make_pi_angle(fn * td * n + i * (tn * fd - fn * td), fd * td * n));
    } else {
      Angle a;
      a.radians = from.radians + (to.radians - from.radians) * static_cast<double>(i) / n;
      a.label = format_real(a.radians);
      out.push_back(a);
    }
  }
  return out;
}

std::string input_digest(std::string_view canonical_input) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_input) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement certification from incomplete correlator data", "ewcert"};
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "certify entanglement from a correlator grid");
  add_grid_options(v, verify.grid);
  add_solve_options(v, verify.solve);
  v->add_option("--set", verify.set, "restrict to these Pauli pairs, e.g. XX,ZZ");

  WitnessArgs witness;
  auto* w = app.add_subcommand("witness", "build or evaluate a mirrored witness pair");
  add_grid_options(w, witness.grid);
  add_solve_options(w, witness.solve);
  w->add_option("--set", witness.set, "restrict to these Pauli pairs");
  w->add_option("--coeffs", witness.coeffs, "evaluate fixed coefficients, e.g. XX=1,ZZ=1");

  SimulateArgs simulate;
  auto* sim = app.add_subcommand("simulate", "synthesize a two-qubit correlator grid");
  add_simulation_options(sim, simulate.sim);
  sim->add_option("--theta", simulate.theta, "state angle, e.g. 7pi/9");
  sim->add_option("--format", simulate.format, "output format: json or csv");
  sim->add_option("--output", simulate.output, "output file (default stdout)");

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "NE across a range of state angles");
  add_simulation_options(sw, sweep.sim);
  add_solve_options(sw, sweep.solve);
  sw->add_option("--from", sweep.from, "first angle");
  sw->add_option("--to", sweep.to, "last angle");
  sw->add_option("--steps", sweep.steps, "number of angles");
  sw->add_option("--set", sweep.set, "measured Pauli pairs (default all nine)");
  sw->add_option("--format", sweep.format, "output format: csv or json");

  std::string classify_set;
  auto* cl = app.add_subcommand("classify", "pattern class of a measurement set");
  cl->add_option("--set", classify_set, "Pauli pairs, e.g. XX,YY,ZZ")->required();

  int orbit_k = 3;
  bool orbit_members = false;
  auto* ob = app.add_subcommand("orbit", "orbits of k-element measurement sets");
  ob->add_option("--k", orbit_k, "set size (1-3)");
  ob->add_flag("--members", orbit_members, "list every member");

  SpiArgs spi;
  auto* sp = app.add_subcommand("spi", "maximal expectation over product states");
  sp->add_option("--input", spi.input, "observable JSON file");
  sp->add_option("--observable", spi.observable, "observable JSON given inline");
  sp->add_option("--partition", spi.partition, "blocks of parties, e.g. 0,1;2");
  sp->add_option("--seed", spi.seed, "seed for random starts");
  sp->add_option("--random-starts", spi.random_starts, "random starts besides basis starts");
  sp->add_flag("--ne", spi.ne, "terms give measured values; report the multipartite NE");

  std::vector<const char*> argv{"ewcert"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out);
    if (w->parsed()) return cmd_witness(witness, out);
    if (sim->parsed()) return cmd_simulate(simulate, out);
    if (sw->parsed()) return cmd_sweep(sweep, out);
    if (cl->parsed()) return cmd_classify(classify_set, out);
    if (ob->parsed()) return cmd_orbit(orbit_k, orbit_members, out);
    if (sp->parsed()) return cmd_spi(spi, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << " (last gap " << e.last_gap() << ")\n";
    return kSolverFailure;
  }
  return kInputError;
}

}  // namespace ewcert::cli
