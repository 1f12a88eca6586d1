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


#ifndef EWCERT_SPI_H_
#define EWCERT_SPI_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ewcert/smallmat.h"
#include "ewcert/witness.h"

namespace ewcert {

struct ObservableTerm {
  double coeff = 0.0;
  std::vector<ComplexMatrix> factors;  // one per party
};

// Sum of products of Hermitian local operators.
class ObservableSum {
 public:
  ObservableSum(std::vector<std::size_t> dims, std::vector<ObservableTerm> terms);

  // Labels over {I, X, Y, Z}, one character per qubit, e.g. "XZX".
  static ObservableSum from_pauli_strings(const std::vector<double>& coeffs,
                                          const std::vector<std::string>& labels);

  std::size_t parties() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<ObservableTerm>& terms() const { return terms_; }
  std::size_t total_dim() const;

  ComplexMatrix dense() const;
  ObservableSum scaled(double t) const;
  ObservableSum plus_identity(double s) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<ObservableTerm> terms_;
};

// One unit vector per site. A site is a party, or a block of parties for
// k-separable problems.
struct ProductState {
  std::vector<std::vector<Complex>> sites;
};

// Parties grouped into blocks; each party appears exactly once.
using Partition = std::vector<std::vector<std::size_t>>;

Partition trivial_partition(std::size_t parties);

struct SpiOptions {
  double tol = 1e-10;
  int max_sweeps = 500;
  // Haar-random starts added to the operator-basis starts.
  int random_starts = 8;
  bool basis_starts = true;
  std::uint64_t seed = 0x5eed;
};

struct SpiRun {
  double value = 0.0;
  ProductState state;
  // Objective after the start and after every single-site update.
  std::vector<double> history;
  int sweeps = 0;
  bool converged = false;
};

struct SPIResult {
  double lambda_max = 0.0;
  ProductState optimizer;
  int restarts_used = 0;
  bool converged = false;
  // Largest decrease between consecutive updates over all restarts; <= 0
  // up to roundoff for an exact ascent.
  double worst_step = 0.0;
  std::vector<double> ascent;  // history of the winning restart
};

// Expectation <psi|O|psi> for a product state across `partition`.
double product_expectation(const ObservableSum& obs, const Partition& partition,
                           const ProductState& state);

SpiRun spi_single_start(const ObservableSum& obs, const Partition& partition,
                        ProductState start, const SpiOptions& opts = {});

SPIResult spi_lambda_max(const ObservableSum& obs, const SpiOptions& opts = {});
SPIResult k_separable_lambda_max(const ObservableSum& obs, const Partition& partition,
                                 const SpiOptions& opts = {});

// Cutting planes: each round solves a small LP over the cuts collected so
// far and adds the product-state optimizer of its solution as a new cut.
struct MultipartiteOptions {
  int max_rounds = 300;
  // Relative gap between the LP bound and the best attained ratio.
  double tol = 1e-7;
  // Used while searching; the final value is re-evaluated with `final_spi`.
  SpiOptions search_spi{1e-10, 500, 2, true, 0x5eed};
  SpiOptions final_spi{};
};

struct MultipartiteNEResult {
  double value = 0.0;
  std::vector<double> coefficients;  // aligned with the labels
  double lambda_max = 0.0;
  Verdict verdict = Verdict::kUndetected;
  // LP value over the collected cuts. It bounds the optimum from above as
  // long as the product-state search finds the true lambda_max.
  double upper_bound = 0.0;
  int rounds = 0;
  bool spi_converged = false;
  // lambda_max comes from a local product-state search, so neither the value
  // nor the bound is certified.
  bool heuristic = true;
};

MultipartiteNEResult ne_multipartite(const std::vector<std::string>& labels,
                                     const std::vector<double>& estimates,
                                     const MultipartiteOptions& opts = {});

}  // namespace ewcert

#endif  // EWCERT_SPI_H_
