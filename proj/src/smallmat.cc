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

#include "ewcert/smallmat.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ewcert/errors.h"

namespace ewcert {
namespace {

double conj_of(double x) { return x; }
Complex conj_of(const Complex& x) { return std::conj(x); }
double real_of(double x) { return x; }
double real_of(const Complex& x) { return x.real(); }

template <class T>
double frobenius_sq(const Matrix<T>& m) {
  double s = 0.0;
  for (const T& x : m.data()) s += std::norm(x);
  return s;
}

template <class T>
double max_abs(const Matrix<T>& m) {
  double s = 0.0;
  for (const T& x : m.data()) s = std::max(s, std::abs(x));
  return s;
}

template <class T>
bool self_adjoint(const Matrix<T>& m, double tol) {
  if (!m.square()) return false;
  const double scale = std::max(1.0, max_abs(m));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - conj_of(m(j, i))) > tol * scale) return false;
    }
  }
  return true;
}

template <class T>
void require_finite(const Matrix<T>& m) {
  for (const T& x : m.data()) {
    if (!std::isfinite(std::abs(x))) {
      throw InputError("matrix has a non-finite entry");
    }
  }
}

// Cyclic Jacobi on a self-adjoint matrix. Each rotation first removes the
// phase of the pivot so the 2x2 subproblem is real symmetric.
template <class T>
EigenDecomposition<T> jacobi(Matrix<T> a) {
  const std::size_t n = a.rows();
  Matrix<T> v = Matrix<T>::identity(n);
  const double fro2 = frobenius_sq(a);

  for (int sweep = 0; sweep < 100 && fro2 > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (off <= 1e-32 * fro2) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const T phase = apq / mag;
        const double app = real_of(a(p, p));
        const double aqq = real_of(a(q, q));
        const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const T gpp = c;
        const T gpq = s;
        const T gqp = -s * conj_of(phase);
        const T gqq = c * conj_of(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const T akp = a(k, p);
          const T akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const T apk = a(p, k);
          const T aqk = a(q, k);
          a(p, k) = conj_of(gpp) * apk + conj_of(gqp) * aqk;
          a(q, k) = conj_of(gpq) * apk + conj_of(gqq) * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const T vkp = v(k, p);
          const T vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        a(p, q) = T{};
        a(q, p) = T{};
        a(p, p) = real_of(a(p, p));
        a(q, q) = real_of(a(q, q));
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return real_of(a(i, i)) > real_of(a(j, j));
  });

  EigenDecomposition<T> out;
  out.values.resize(n);
  out.vectors = Matrix<T>(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = real_of(a(order[k], order[k]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <class T>
Matrix<T> symmetrized(const Matrix<T>& m) {
  Matrix<T> s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      s(i, j) = 0.5 * (m(i, j) + conj_of(m(j, i)));
    }
  }
  return s;
}

// Eigenvectors of m^T m, ordered by descending eigenvalue.
RealMatrix right_singular_basis(const RealMatrix& m) {
  return symmetric_eig(transpose(m) * m).vectors;
}

}  // namespace

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
  return m;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("shape mismatch in matrix sum");
  }
  Matrix<T> out = a;
  auto o = out.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] += bd[i];
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  return a + (T{-1} * b);
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InputError("shape mismatch in matrix product");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

template <class T>
Matrix<T> operator*(T s, const Matrix<T>& a) {
  Matrix<T> out = a;
  for (T& x : out.data()) x *= s;
  return out;
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("shape mismatch in max_abs_diff");
  }
  double d = 0.0;
  auto ad = a.data();
  auto bd = b.data();
  for (std::size_t i = 0; i < ad.size(); ++i) d = std::max(d, std::abs(ad[i] - bd[i]));
  return d;
}

template class Matrix<double>;
template class Matrix<Complex>;
template RealMatrix operator+(const RealMatrix&, const RealMatrix&);
template ComplexMatrix operator+(const ComplexMatrix&, const ComplexMatrix&);
template RealMatrix operator-(const RealMatrix&, const RealMatrix&);
template ComplexMatrix operator-(const ComplexMatrix&, const ComplexMatrix&);
template RealMatrix operator*(const RealMatrix&, const RealMatrix&);
template ComplexMatrix operator*(const ComplexMatrix&, const ComplexMatrix&);
template RealMatrix operator*(double, const RealMatrix&);
template ComplexMatrix operator*(Complex, const ComplexMatrix&);
template double max_abs_diff(const RealMatrix&, const RealMatrix&);
template double max_abs_diff(const ComplexMatrix&, const ComplexMatrix&);

RealMatrix transpose(const RealMatrix& m) {
  RealMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  }
  return t;
}

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex t{};
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

double trace(const RealMatrix& m) {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

bool all_finite(const RealMatrix& m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](double x) { return std::isfinite(x); });
}

bool is_symmetric(const RealMatrix& m, double tol) { return self_adjoint(m, tol); }
bool is_hermitian(const ComplexMatrix& m, double tol) { return self_adjoint(m, tol); }

std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) throw InputError("shape mismatch in matvec");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s{};
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw InputError("shape mismatch in inner");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

SymmetricEigen symmetric_eig(const RealMatrix& m) {
  require_finite(m);
  if (!is_symmetric(m)) throw InputError("symmetric_eig: matrix is not symmetric");
  return jacobi(symmetrized(m));
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_finite(m);
  if (!is_hermitian(m)) throw InputError("hermitian_eig: matrix is not Hermitian");
  return jacobi(symmetrized(m));
}

std::vector<double> singular_values(const RealMatrix& m) {
  require_finite(m);
  if (m.rows() == 0 || m.cols() == 0) return {};
  // sigma_k = |m v_k| is accurate to eps * |m| even for tiny sigma, unlike
  // sqrt of the eigenvalues of m^T m.
  const RealMatrix v = right_singular_basis(m);
  const RealMatrix mv = m * v;
  std::vector<double> sigma(m.cols());
  for (std::size_t k = 0; k < m.cols(); ++k) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += mv(r, k) * mv(r, k);
    sigma[k] = std::sqrt(s);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  sigma.resize(std::min(m.rows(), m.cols()));
  return sigma;
}

double operator_norm(const RealMatrix& m) {
  const auto sigma = singular_values(m);
  return sigma.empty() ? 0.0 : sigma.front();
}

double nuclear_norm(const RealMatrix& m) {
  const auto sigma = singular_values(m);
  return std::accumulate(sigma.begin(), sigma.end(), 0.0);
}

SingularValueDecomposition svd(const RealMatrix& m, double rank_tol) {
  require_finite(m);
  SingularValueDecomposition out;
  if (m.rows() == 0 || m.cols() == 0) return out;
  const RealMatrix v = right_singular_basis(m);
  const RealMatrix mv = m * v;
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t k = 0; k < m.cols(); ++k) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += mv(r, k) * mv(r, k);
    ranked.emplace_back(std::sqrt(s), k);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  const double cutoff = rank_tol * std::max(ranked.front().first, 1e-300);
  std::size_t rank = 0;
  while (rank < ranked.size() && rank < m.rows() && ranked[rank].first > cutoff) ++rank;

  out.u = RealMatrix(m.rows(), rank);
  out.v = RealMatrix(m.cols(), rank);
  for (std::size_t k = 0; k < rank; ++k) {
    const auto [sigma, col] = ranked[k];
    out.sigma.push_back(sigma);
    for (std::size_t r = 0; r < m.cols(); ++r) out.v(r, k) = v(r, col);
    for (std::size_t r = 0; r < m.rows(); ++r) out.u(r, k) = mv(r, col) / sigma;
  }
  return out;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  const auto eig = hermitian_eig(m);
  return eig.values.empty() || eig.values.back() >= -tol;
}

bool is_psd(const RealMatrix& m, double tol) {
  const auto eig = symmetric_eig(m);
  return eig.values.empty() || eig.values.back() >= -tol;
}

std::optional<SpdFactor> SpdFactor::compute(const RealMatrix& m) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  RealMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) return std::nullopt;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return SpdFactor(std::move(l));
}

double SpdFactor::log_det() const {
  double s = 0.0;
  for (std::size_t i = 0; i < lower_.rows(); ++i) s += std::log(lower_(i, i));
  return 2.0 * s;
}

std::vector<double> SpdFactor::solve(std::span<const double> rhs) const {
  const std::size_t n = lower_.rows();
  if (rhs.size() != n) throw InputError("SpdFactor::solve: size mismatch");
  std::vector<double> y(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) y[i] -= lower_(i, k) * y[k];
    y[i] /= lower_(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) y[ii] -= lower_(k, ii) * y[k];
    y[ii] /= lower_(ii, ii);
  }
  return y;
}

RealMatrix SpdFactor::inverse() const {
  const std::size_t n = lower_.rows();
  RealMatrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const auto col = solve(e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

}  // namespace ewcert
