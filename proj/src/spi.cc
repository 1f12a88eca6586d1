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

#include "ewcert/spi.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include "ewcert/errors.h"
#include "ewcert/quantum.h"

namespace ewcert {
namespace {

double quadratic_form(const ComplexMatrix& k, const std::vector<Complex>& v) {
  Complex s{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    Complex row{};
    for (std::size_t j = 0; j < v.size(); ++j) row += k(i, j) * v[j];
    s += std::conj(v[i]) * row;
  }
  return s.real();
}

ComplexMatrix local_pauli(char c) {
  switch (c) {
    case 'I': return ComplexMatrix::identity(2);
    case 'X': return pauli_matrix(Pauli::X);
    case 'Y': return pauli_matrix(Pauli::Y);
    case 'Z': return pauli_matrix(Pauli::Z);
    default: throw InputError(std::string("unknown Pauli factor '") + c + "'");
  }
}

void validate_partition(const Partition& partition, std::size_t parties) {
  std::vector<int> count(parties, 0);
  for (const auto& block : partition) {
    if (block.empty()) throw InputError("partition has an empty block");
    for (std::size_t p : block) {
      if (p >= parties) throw InputError("partition names a party that does not exist");
      ++count[p];
    }
  }
  for (int c : count) {
    if (c != 1) throw InputError("partition must cover every party exactly once");
  }
}

std::vector<Complex> kron_vec(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a) {
    for (const Complex& y : b) out.push_back(x * y);
  }
  return out;
}

// Term factors multiplied out per block.
class BlockedObservable {
 public:
  BlockedObservable(const ObservableSum& obs, const Partition& partition) {
    validate_partition(partition, obs.parties());
    for (const auto& block : partition) {
      std::size_t d = 1;
      for (std::size_t p : block) d *= obs.dims()[p];
      block_dims_.push_back(d);
    }
    for (const auto& term : obs.terms()) {
      coeffs_.push_back(term.coeff);
      std::vector<ComplexMatrix> ops;
      for (const auto& block : partition) {
        ComplexMatrix k = term.factors[block[0]];
        for (std::size_t i = 1; i < block.size(); ++i) k = kron(k, term.factors[block[i]]);
        ops.push_back(std::move(k));
      }
      ops_.push_back(std::move(ops));
    }
  }

  std::size_t blocks() const { return block_dims_.size(); }
  std::size_t block_dim(std::size_t b) const { return block_dims_[b]; }

  double value(const ProductState& s) const {
    double total = 0.0;
    for (std::size_t t = 0; t < ops_.size(); ++t) {
      double prod = coeffs_[t];
      for (std::size_t b = 0; b < blocks(); ++b) prod *= quadratic_form(ops_[t][b], s.sites[b]);
      total += prod;
    }
    return total;
  }

  ComplexMatrix effective(const ProductState& s, std::size_t site) const {
    ComplexMatrix h(block_dims_[site], block_dims_[site]);
    for (std::size_t t = 0; t < ops_.size(); ++t) {
      double w = coeffs_[t];
      for (std::size_t b = 0; b < blocks() && w != 0.0; ++b) {
        if (b != site) w *= quadratic_form(ops_[t][b], s.sites[b]);
      }
      if (w == 0.0) continue;
      h = h + Complex(w, 0.0) * ops_[t][site];
    }
    return h;
  }

 private:
  std::vector<double> coeffs_;
  std::vector<std::vector<ComplexMatrix>> ops_;
  std::vector<std::size_t> block_dims_;
};

// Top eigenvector of h; within a degenerate top eigenspace the component of
// `current` is kept.
std::vector<Complex> top_vector(const ComplexMatrix& h, const std::vector<Complex>& current) {
  const auto eig = hermitian_eig(h);
  const std::size_t n = h.rows();
  double scale = 0.0;
  for (double v : eig.values) scale = std::max(scale, std::abs(v));
  const double gap_tol = 1e-12 * std::max(scale, 1.0);
  std::size_t deg = 1;
  while (deg < n && eig.values[0] - eig.values[deg] <= gap_tol) ++deg;

  std::vector<Complex> out(n);
  if (deg > 1) {
    for (std::size_t k = 0; k < deg; ++k) {
      Complex overlap{};
      for (std::size_t i = 0; i < n; ++i) overlap += std::conj(eig.vectors(i, k)) * current[i];
      for (std::size_t i = 0; i < n; ++i) out[i] += overlap * eig.vectors(i, k);
    }
    const double nrm = norm2(out);
    if (nrm > 1e-8) {
      for (auto& x : out) x /= nrm;
      return out;
    }
  }
  for (std::size_t i = 0; i < n; ++i) out[i] = eig.vectors(i, 0);
  return out;
}

SpiRun run_spi(const BlockedObservable& bo, ProductState state, const SpiOptions& opts) {
  SpiRun run;
  double value = bo.value(state);
  run.history.push_back(value);
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const double before = value;
    for (std::size_t site = 0; site < bo.blocks(); ++site) {
      state.sites[site] = top_vector(bo.effective(state, site), state.sites[site]);
      value = bo.value(state);
      run.history.push_back(value);
    }
    run.sweeps = sweep + 1;
    if (value - before < opts.tol) {
      run.converged = true;
      break;
    }
  }
  run.value = value;
  run.state = std::move(state);
  return run;
}

std::vector<ProductState> starting_states(const ObservableSum& obs, const Partition& partition,
                                          const SpiOptions& opts) {
  std::vector<ProductState> starts;
  if (opts.basis_starts) {
    // Eigenvectors of every local basis operator, used on all parties at once.
    std::vector<std::vector<std::vector<Complex>>> per_party;
    std::size_t count = 0;
    for (std::size_t d : obs.dims()) {
      std::vector<std::vector<Complex>> vecs;
      const auto basis = gell_mann_basis(static_cast<int>(d));
      for (std::size_t k = 1; k < basis.operators.size(); ++k) {
        const auto eig = hermitian_eig(basis.operators[k]);
        for (std::size_t c = 0; c < d; ++c) {
          std::vector<Complex> v(d);
          for (std::size_t i = 0; i < d; ++i) v[i] = eig.vectors(i, c);
          vecs.push_back(std::move(v));
        }
      }
      count = std::max(count, vecs.size());
      per_party.push_back(std::move(vecs));
    }
    for (std::size_t k = 0; k < count; ++k) {
      ProductState s;
      for (const auto& block : partition) {
        std::vector<Complex> v{Complex(1.0, 0.0)};
        for (std::size_t p : block) v = kron_vec(v, per_party[p][k % per_party[p].size()]);
        s.sites.push_back(std::move(v));
      }
      starts.push_back(std::move(s));
    }
  }
  std::mt19937_64 rng(opts.seed);
  for (int r = 0; r < opts.random_starts; ++r) {
    ProductState s;
    for (const auto& block : partition) {
      std::size_t d = 1;
      for (std::size_t p : block) d *= obs.dims()[p];
      s.sites.push_back(haar_pure_state(d, rng));
    }
    starts.push_back(std::move(s));
  }
  if (starts.empty()) throw InputError("SPI needs at least one starting state");
  return starts;
}

}  // namespace

ObservableSum::ObservableSum(std::vector<std::size_t> dims, std::vector<ObservableTerm> terms)
    : dims_(std::move(dims)), terms_(std::move(terms)) {
  if (dims_.size() < 2) throw InputError("an observable needs at least two parties");
  if (terms_.empty()) throw InputError("an observable needs at least one term");
  for (std::size_t d : dims_) {
    if (d < 2) throw InputError("local dimensions must be at least 2");
  }
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coeff)) throw InputError("non-finite observable coefficient");
    if (t.factors.size() != dims_.size()) throw InputError("term has the wrong number of factors");
    for (std::size_t p = 0; p < dims_.size(); ++p) {
      const auto& f = t.factors[p];
      if (f.rows() != dims_[p] || f.cols() != dims_[p]) {
        throw InputError("factor dimension does not match its party");
      }
      if (!is_hermitian(f)) throw InputError("observable factor is not Hermitian");
    }
  }
}

ObservableSum ObservableSum::from_pauli_strings(const std::vector<double>& coeffs,
                                                const std::vector<std::string>& labels) {
  if (coeffs.size() != labels.size()) throw InputError("coefficients and labels differ in length");
  if (labels.empty()) throw InputError("an observable needs at least one term");
  const std::size_t n = labels[0].size();
  std::vector<ObservableTerm> terms;
  for (std::size_t t = 0; t < labels.size(); ++t) {
    if (labels[t].size() != n) throw InputError("Pauli strings differ in length");
    ObservableTerm term{coeffs[t], {}};
    for (char c : labels[t]) term.factors.push_back(local_pauli(c));
    terms.push_back(std::move(term));
  }
  return ObservableSum(std::vector<std::size_t>(n, 2), std::move(terms));
}

std::size_t ObservableSum::total_dim() const {
  std::size_t d = 1;
  for (std::size_t x : dims_) d *= x;
  return d;
}

ComplexMatrix ObservableSum::dense() const {
  const std::size_t d = total_dim();
  ComplexMatrix out(d, d);
  for (const auto& t : terms_) {
    ComplexMatrix k = t.factors[0];
    for (std::size_t p = 1; p < t.factors.size(); ++p) k = kron(k, t.factors[p]);
    out = out + Complex(t.coeff, 0.0) * k;
  }
  return out;
}

ObservableSum ObservableSum::scaled(double t) const {
  auto terms = terms_;
  for (auto& term : terms) term.coeff *= t;
  return ObservableSum(dims_, std::move(terms));
}

ObservableSum ObservableSum::plus_identity(double s) const {
  auto terms = terms_;
  ObservableTerm id{s, {}};
  for (std::size_t d : dims_) id.factors.push_back(ComplexMatrix::identity(d));
  terms.push_back(std::move(id));
  return ObservableSum(dims_, std::move(terms));
}

Partition trivial_partition(std::size_t parties) {
  Partition p;
  for (std::size_t i = 0; i < parties; ++i) p.push_back({i});
  return p;
}

double product_expectation(const ObservableSum& obs, const Partition& partition,
                           const ProductState& state) {
  const BlockedObservable bo(obs, partition);
  if (state.sites.size() != bo.blocks()) throw InputError("state does not match the partition");
  return bo.value(state);
}

SpiRun spi_single_start(const ObservableSum& obs, const Partition& partition, ProductState start,
                        const SpiOptions& opts) {
  const BlockedObservable bo(obs, partition);
  if (start.sites.size() != bo.blocks()) throw InputError("state does not match the partition");
  for (std::size_t b = 0; b < bo.blocks(); ++b) {
    auto& v = start.sites[b];
    if (v.size() != bo.block_dim(b)) throw InputError("site vector has the wrong dimension");
    const double n = norm2(v);
    if (!(n > 0.0)) throw InputError("site vector is zero");
    for (auto& x : v) x /= n;
  }
  return run_spi(bo, std::move(start), opts);
}

SPIResult k_separable_lambda_max(const ObservableSum& obs, const Partition& partition,
                                 const SpiOptions& opts) {
  const BlockedObservable bo(obs, partition);
  SPIResult best;
  best.lambda_max = -std::numeric_limits<double>::infinity();
  for (auto& start : starting_states(obs, partition, opts)) {
    SpiRun run = run_spi(bo, std::move(start), opts);
    ++best.restarts_used;
    for (std::size_t i = 1; i < run.history.size(); ++i) {
      best.worst_step = std::max(best.worst_step, run.history[i - 1] - run.history[i]);
    }
    if (run.value > best.lambda_max) {
      best.lambda_max = run.value;
      best.optimizer = std::move(run.state);
      best.converged = run.converged;
      best.ascent = std::move(run.history);
    }
  }
  return best;
}

SPIResult spi_lambda_max(const ObservableSum& obs, const SpiOptions& opts) {
  return k_separable_lambda_max(obs, trivial_partition(obs.parties()), opts);
}

namespace {

// Expectation vector (<P_1>, ..., <P_m>) of Pauli strings in a product state
// of single qubits.
std::vector<double> pauli_point(const std::vector<std::string>& labels, const ProductState& state) {
  std::vector<std::array<double, 3>> bloch;
  for (const auto& site : state.sites) {
    std::array<double, 3> b{};
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      b[static_cast<std::size_t>(pauli_index(p))] = inner(site, matvec(pauli_matrix(p), site)).real();
    }
    bloch.push_back(b);
  }
  std::vector<double> v;
  for (const auto& l : labels) {
    double x = 1.0;
    for (std::size_t q = 0; q < l.size(); ++q) {
      if (l[q] != 'I') x *= bloch[q][static_cast<std::size_t>(pauli_index(pauli_from_char(l[q])))];
    }
    v.push_back(x);
  }
  return v;
}

// max e.c subject to a.c <= 1 for every row a, by a log barrier with damped
// Newton centering. c = 0 is strictly feasible; the rows must bound the set.
std::vector<double> cut_lp(const std::vector<double>& e, const std::vector<std::vector<double>>& rows) {
  const std::size_t m = e.size();
  const double count = static_cast<double>(rows.size());
  double e1 = 0.0;
  for (double x : e) e1 += std::abs(x);
  std::vector<double> c(m, 0.0);
  double tau = count / e1;
  int steps = 0;
  while (true) {
    const bool final_stage = count / tau <= 1e-11;
    while (steps < 2000) {
      std::vector<double> grad(m);
      RealMatrix hess(m, m);
      for (std::size_t i = 0; i < m; ++i) grad[i] = -tau * e[i];
      for (const auto& a : rows) {
        double slack = 1.0;
        for (std::size_t i = 0; i < m; ++i) slack -= a[i] * c[i];
        for (std::size_t i = 0; i < m; ++i) {
          grad[i] += a[i] / slack;
          for (std::size_t j = 0; j < m; ++j) hess(i, j) += a[i] * a[j] / (slack * slack);
        }
      }
      const auto factor = SpdFactor::compute(hess);
      if (!factor) break;
      for (double& g : grad) g = -g;
      const auto step = factor->solve(grad);
      double dec = 0.0;
      for (std::size_t i = 0; i < m; ++i) dec += grad[i] * step[i];
      if (dec / 2.0 <= (final_stage ? 1e-12 : 1e-6)) break;
      const double lambda = std::sqrt(std::max(dec, 0.0));
      const double alpha = lambda < 0.25 ? 1.0 : 1.0 / (1.0 + lambda);
      for (std::size_t i = 0; i < m; ++i) c[i] += alpha * step[i];
      ++steps;
    }
    if (final_stage || steps >= 2000) break;
    tau *= 5.0;
  }
  return c;
}

}  // namespace

MultipartiteNEResult ne_multipartite(const std::vector<std::string>& labels,
                                     const std::vector<double>& estimates,
                                     const MultipartiteOptions& opts) {
  if (labels.size() != estimates.size()) throw InputError("labels and estimates differ in length");
  if (labels.empty()) throw InputError("no observables given");
  if (labels[0].size() < 2) throw InputError("multipartite strings need at least two parties");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.find_first_not_of('I') == std::string::npos) {
      throw InputError("identity string '" + l + "' carries no correlation");
    }
    if (!seen.insert(l).second) throw InputError("duplicate Pauli string " + l);
  }
  for (double e : estimates) {
    if (!std::isfinite(e)) throw InputError("non-finite estimate");
  }
  // Validates characters and lengths.
  (void)ObservableSum::from_pauli_strings(std::vector<double>(labels.size(), 1.0), labels);
  if (opts.max_rounds < 1 || !(opts.tol > 0.0)) throw InputError("invalid multipartite options");

  const std::size_t m = labels.size();
  auto dot = [&](const std::vector<double>& c) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += c[i] * estimates[i];
    return s;
  };

  MultipartiteNEResult out;
  out.coefficients.assign(m, 0.0);
  if (std::all_of(estimates.begin(), estimates.end(), [](double e) { return e == 0.0; })) {
    out.coefficients[0] = 1.0;
    const auto spi = spi_lambda_max(ObservableSum::from_pauli_strings(out.coefficients, labels),
                                    opts.final_spi);
    out.coefficients[0] /= spi.lambda_max;
    out.lambda_max = 1.0;
    out.upper_bound = 0.0;
    out.spi_converged = spi.converged;
    return out;
  }

  // For distinct non-identity strings, averaging the product Pauli
  // eigenstates with <P_i> = +-1 gives the point +-e_i, so |c_i| <= 1 holds on
  // the feasible set. Every product state adds the cut c.v(state) <= 1.
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < m; ++i) {
    for (double sgn : {1.0, -1.0}) {
      std::vector<double> r(m, 0.0);
      r[i] = sgn;
      rows.push_back(std::move(r));
    }
  }

  // c ranges over all of R^m, so both signs of the correlation are covered;
  // maximizing (-e).c under the same constraint would not be sound, since
  // separable points only satisfy c.v <= lambda_max(O_c).
  std::vector<double> best_c;
  double best_f = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  for (int round = 0; round < opts.max_rounds; ++round) {
    const auto c = cut_lp(estimates, rows);
    const double ec = dot(c);
    upper = std::min(upper, ec);
    const auto spi = spi_lambda_max(ObservableSum::from_pauli_strings(c, labels), opts.search_spi);
    ++out.rounds;
    if (spi.lambda_max > 0.0 && ec / spi.lambda_max > best_f) {
      best_f = ec / spi.lambda_max;
      best_c = c;
    }
    rows.push_back(pauli_point(labels, spi.optimizer));
    if (upper - best_f <= opts.tol * std::max(1.0, upper)) break;
  }

  const auto final_spi =
      spi_lambda_max(ObservableSum::from_pauli_strings(best_c, labels), opts.final_spi);
  out.lambda_max = 1.0;
  out.spi_converged = final_spi.converged;
  out.coefficients = best_c;
  for (double& x : out.coefficients) x /= final_spi.lambda_max;
  out.value = dot(out.coefficients);
  out.upper_bound = std::max(upper, out.value);
  out.verdict = out.value > 1.0 + kVerdictThreshold ? Verdict::kEntangled : Verdict::kUndetected;
  return out;
}

}  // namespace ewcert
