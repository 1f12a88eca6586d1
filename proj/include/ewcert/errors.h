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

#ifndef EWCERT_ERRORS_H_
#define EWCERT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ewcert {

// Malformed or out-of-contract input: bad documents, labels, dimensions,
// non-finite numbers, missing correlators.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The interior-point solver ran out of iterations before reaching the
// requested gap.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double last_gap, int iterations)
      : std::runtime_error(what), last_gap_(last_gap), iterations_(iterations) {}

  double last_gap() const { return last_gap_; }
  int iterations() const { return iterations_; }

 private:
  double last_gap_;
  int iterations_;
};

}  // namespace ewcert

#endif  // EWCERT_ERRORS_H_
