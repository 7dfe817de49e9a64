// Copyright 2026 The toeplitz-fh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TFH_LINALG_HPP
#define TFH_LINALG_HPP

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace tfh {

using cplx = std::complex<double>;

/// Dense row-major matrix, real or complex.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return a_[i * cols_ + j];
  }

  const std::vector<T>& data() const { return a_; }
  std::vector<T>& data() { return a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using RMatrix = Matrix<double>;
using CMatrix = Matrix<cplx>;

template <class T>
std::vector<T> matmul_vec(const Matrix<T>& A, const std::vector<T>& x) {
  assert(x.size() == A.cols());
  std::vector<T> y(A.rows(), T{});
  for (std::size_t i = 0; i < A.rows(); ++i) {
    T acc{};
    const T* row = A.data().data() + i * A.cols();
    for (std::size_t j = 0; j < A.cols(); ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

/// y = A^H x (conjugate transpose for complex, transpose for real).
std::vector<double> adjoint_matmul_vec(const RMatrix& A, const std::vector<double>& x);
std::vector<cplx> adjoint_matmul_vec(const CMatrix& A, const std::vector<cplx>& x);

RMatrix matmul(const RMatrix& A, const RMatrix& B);

inline double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}
inline double norm2(const std::vector<cplx>& v) {
  double s = 0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
/// Hermitian inner product <a, b> = sum conj(b_i) a_i.
inline cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

}  // namespace tfh

#endif  // TFH_LINALG_HPP
