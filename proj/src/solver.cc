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

#include "ewcert/solver.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

// Variables are the coefficients on the support. Only the rows and columns
// the support touches enter the block matrix; the others contribute a
// constant factor to the determinant.
class BarrierProblem {
 public:
  BarrierProblem(const std::vector<GridIndex>& support, std::vector<double> objective,
                 double t)
      : objective_(std::move(objective)), t_(t) {
    std::set<int> rows;
    std::set<int> cols;
    for (const auto& idx : support) {
      rows.insert(idx.row);
      cols.insert(idx.col);
    }
    const std::vector<int> row_list(rows.begin(), rows.end());
    const std::vector<int> col_list(cols.begin(), cols.end());
    nrows_ = row_list.size();
    block_ = nrows_ + col_list.size();
    for (const auto& idx : support) {
      const auto r = std::lower_bound(row_list.begin(), row_list.end(), idx.row) - row_list.begin();
      const auto c = std::lower_bound(col_list.begin(), col_list.end(), idx.col) - col_list.begin();
      pos_.emplace_back(static_cast<std::size_t>(r), nrows_ + static_cast<std::size_t>(c));
    }
  }

  std::size_t size() const { return pos_.size(); }
  std::size_t block() const { return block_; }

  RealMatrix block_matrix(const std::vector<double>& x) const {
    RealMatrix m(block_, block_);
    for (std::size_t i = 0; i < block_; ++i) m(i, i) = t_;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const auto [p, q] = pos_[k];
      m(p, q) = x[k];
      m(q, p) = x[k];
    }
    return m;
  }

  double objective(const std::vector<double>& x) const {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += objective_[k] * x[k];
    return s;
  }

  // Gradient and Hessian of the merit function at a strictly feasible x.
  void derivatives(const std::vector<double>& x, double tau, std::vector<double>& grad,
                   RealMatrix& hess) const {
    const auto f = SpdFactor::compute(block_matrix(x));
    if (!f) throw SolverError("iterate left the feasible region", 0.0, 0);
    const RealMatrix p = f->inverse();
    const std::size_t n = size();
    grad.assign(n, 0.0);
    hess = RealMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto [pk, qk] = pos_[k];
      grad[k] = -tau * objective_[k] - 2.0 * p(pk, qk);
      for (std::size_t l = 0; l <= k; ++l) {
        const auto [pl, ql] = pos_[l];
        const double h = 2.0 * (p(qk, pl) * p(pk, ql) + p(qk, ql) * p(pk, pl));
        hess(k, l) = h;
        hess(l, k) = h;
      }
    }
  }

 private:
  std::vector<double> objective_;
  double t_;
  std::size_t nrows_ = 0;
  std::size_t block_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pos_;
};

struct BranchResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  double gap = 0.0;
};

// Path following on tau with damped Newton centering.
BranchResult solve_branch(const BarrierProblem& prob, double objective_l1, double t,
                          const SolverOptions& opts) {
  const std::size_t n = prob.size();
  const double barrier_degree = static_cast<double>(prob.block());
  std::vector<double> x(n, 0.0);
  double tau = barrier_degree / (t * objective_l1);
  int iterations = 0;
  const double target_gap = 0.5 * opts.tol;

  std::vector<double> grad;
  RealMatrix hess;
  while (true) {
    const bool final_stage = barrier_degree / tau <= target_gap;
    const double centering_tol = final_stage ? 1e-10 : 1e-6;
    while (true) {
      if (iterations >= opts.max_iter) {
        throw SolverError("NE solver did not converge within " +
                              std::to_string(opts.max_iter) + " iterations",
                          barrier_degree / tau, iterations);
      }
      prob.derivatives(x, tau, grad, hess);
      const auto factor = SpdFactor::compute(hess);
      if (!factor) break;  // Hessian numerically singular; accept the iterate.
      std::vector<double> neg_grad(n);
      for (std::size_t k = 0; k < n; ++k) neg_grad[k] = -grad[k];
      const std::vector<double> step = factor->solve(neg_grad);
      double slope = 0.0;
      for (std::size_t k = 0; k < n; ++k) slope += grad[k] * step[k];
      if (-slope / 2.0 <= centering_tol) break;
      ++iterations;

      // Damped Newton for a self-concordant merit: the step 1/(1 + lambda)
      // stays feasible and decreases the merit, and full steps converge
      // quadratically once lambda < 1/4. No merit comparisons are needed, so
      // large tau does not run into cancellation.
      const double lambda = std::sqrt(std::max(0.0, -slope));
      const double alpha = lambda < 0.25 ? 1.0 : 1.0 / (1.0 + lambda);
      std::vector<double> trial(n);
      for (std::size_t k = 0; k < n; ++k) trial[k] = x[k] + alpha * step[k];
      if (!SpdFactor::compute(prob.block_matrix(trial))) break;
      x = std::move(trial);
    }
    if (final_stage) break;
    tau /= opts.mu_factor;
  }

  BranchResult out;
  out.iterations = iterations;
  out.gap = barrier_degree / tau;
  out.x = std::move(x);
  out.value = prob.objective(out.x);
  return out;
}

NEResult make_result(const CorrelatorGrid& grid, const std::vector<GridIndex>& support,
                     const std::vector<double>& x, double value, SignBranch sign,
                     SolverDiagnostics diag) {
  NEResult r;
  r.coefficients = CoefficientMatrix(grid.dim_a(), grid.dim_b());
  for (std::size_t k = 0; k < support.size(); ++k) r.coefficients.set(support[k], x[k]);
  r.value = value;
  r.sign = sign;
  r.verdict = ne_verdict(value);
  r.diagnostics = std::move(diag);
  return r;
}

}  // namespace

NEResult ne_solve(const CorrelatorGrid& grid, const std::vector<GridIndex>& support_in,
                  const SolverOptions& opts) {
  if (support_in.empty()) throw InputError("empty support");
  if (!(opts.tol > 0.0) || opts.max_iter < 1 || !(opts.mu_factor > 0.0 && opts.mu_factor < 1.0)) {
    throw InputError("invalid solver options");
  }
  std::vector<GridIndex> support = support_in;
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end()) {
    throw InputError("support lists an entry twice");
  }

  std::vector<double> g;
  for (const auto& idx : support) g.push_back(grid.at(idx));

  const double scale = separable_scale(grid.dim_a(), grid.dim_b());
  const double t = 1.0 / scale;
  double l1 = 0.0;
  for (double v : g) l1 += std::abs(v);

  if (l1 == 0.0) {
    std::vector<double> x(support.size(), 0.0);
    x[0] = t;
    return make_result(grid, support, x, 0.0, SignBranch::kPlus, {"barrier", 0, 0.0});
  }

  std::vector<double> neg(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) neg[k] = -g[k];
  const BarrierProblem plus(support, g, t);
  const BarrierProblem minus(support, neg, t);
  BranchResult bp = solve_branch(plus, l1, t, opts);
  BranchResult bm = solve_branch(minus, l1, t, opts);

  // Push each interior optimum radially onto the boundary scale * |C| = 1,
  // which can only increase a positive objective.
  auto to_boundary = [&](BranchResult& b, const BarrierProblem& prob) {
    RealMatrix dense(static_cast<std::size_t>(grid.rows()), static_cast<std::size_t>(grid.cols()));
    for (std::size_t k = 0; k < support.size(); ++k) {
      dense(static_cast<std::size_t>(support[k].row), static_cast<std::size_t>(support[k].col)) = b.x[k];
    }
    const double norm = scale * operator_norm(dense);
    if (norm > 0.0) {
      for (double& v : b.x) v /= norm;
    }
    b.value = prob.objective(b.x);
  };
  to_boundary(bp, plus);
  to_boundary(bm, minus);

  const bool minus_wins = bm.value > bp.value + opts.tol;
  const BranchResult& best = minus_wins ? bm : bp;
  SolverDiagnostics diag{"barrier", bp.iterations + bm.iterations, std::max(bp.gap, bm.gap)};
  return make_result(grid, support, best.x, best.value,
                     minus_wins ? SignBranch::kMinus : SignBranch::kPlus, std::move(diag));
}

NEResult ne_solve(const CorrelatorGrid& grid, const SolverOptions& opts) {
  if (grid.empty()) throw InputError("no measured entries");
  return ne_solve(grid, grid.support(), opts);
}

NEResult ne_solve(const CorrelatorGrid& grid, const MeasurementSet& set,
                  const SolverOptions& opts) {
  if (!grid.is_qubit()) throw InputError("Pauli measurement sets require a qubit grid");
  return ne_solve(grid, set.entries(), opts);
}

std::vector<NEResult> ne_monotone_report(const CorrelatorGrid& grid,
                                         const std::vector<MeasurementSet>& chain,
                                         const SolverOptions& opts) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    for (const auto& idx : chain[i - 1].entries()) {
      if (!chain[i].contains(idx)) {
        throw InputError("measurement chain is not nested: " + pauli_pair_label(idx) +
                         " is missing from set " + std::to_string(i + 1));
      }
    }
  }
  std::vector<NEResult> out;
  for (const auto& set : chain) out.push_back(ne_solve(grid, set, opts));
  return out;
}

}  // namespace ewcert
