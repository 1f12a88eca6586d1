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

// Dense linear algebra for the small matrices that show up in correlator
// analysis: coefficient matrices (at most 63x63), local operators, and
// few-party density matrices. Everything is row-major and owned by value.

#ifndef EWCERT_SMALLMAT_H_
#define EWCERT_SMALLMAT_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ewcert {

using Complex = std::complex<double>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
Matrix<T> operator*(T s, const Matrix<T>& a);

RealMatrix transpose(const RealMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix to_complex(const RealMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& m);
double trace(const RealMatrix& m);

// Largest |a_ij - b_ij|; matrices must have equal shape.
template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b);

bool all_finite(const RealMatrix& m);
bool is_symmetric(const RealMatrix& m, double tol = 1e-12);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm2(std::span<const Complex> v);

// Eigenvalues are sorted descending; column k of `vectors` belongs to
// values[k].
template <class T>
struct EigenDecomposition {
  std::vector<double> values;
  Matrix<T> vectors;
};

using SymmetricEigen = EigenDecomposition<double>;
using HermitianEigen = EigenDecomposition<Complex>;

// Cyclic Jacobi. Throws InputError when the input is not square, has
// non-finite entries, or fails the (relative) symmetry check.
SymmetricEigen symmetric_eig(const RealMatrix& m);
HermitianEigen hermitian_eig(const ComplexMatrix& m);

double operator_norm(const RealMatrix& m);
std::vector<double> singular_values(const RealMatrix& m);
double nuclear_norm(const RealMatrix& m);

// Thin SVD m = U diag(sigma) V^T keeping singular values above
// rank_tol * ||m||. V is obtained from m^T m, U by back-substitution.
struct SingularValueDecomposition {
  RealMatrix u;
  std::vector<double> sigma;
  RealMatrix v;
};
SingularValueDecomposition svd(const RealMatrix& m, double rank_tol = 1e-12);

inline constexpr double kDefaultPsdTol = 1e-9;

bool is_psd(const ComplexMatrix& m, double tol = kDefaultPsdTol);
bool is_psd(const RealMatrix& m, double tol = kDefaultPsdTol);

// Cholesky factor of a symmetric positive definite matrix. Empty when the
// matrix is not numerically positive definite, which the barrier solver
// uses as its feasibility test.
class SpdFactor {
 public:
  static std::optional<SpdFactor> compute(const RealMatrix& m);

  double log_det() const;
  std::vector<double> solve(std::span<const double> rhs) const;
  RealMatrix inverse() const;
  const RealMatrix& lower() const { return lower_; }

 private:
  explicit SpdFactor(RealMatrix lower) : lower_(std::move(lower)) {}
  RealMatrix lower_;
};

}  // namespace ewcert

#endif  // EWCERT_SMALLMAT_H_
