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

#include "tfh/linalg.hpp"

namespace tfh {

std::vector<double> adjoint_matmul_vec(const RMatrix& A, const std::vector<double>& x) {
  assert(x.size() == A.rows());
  std::vector<double> y(A.cols(), 0.0);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const double* row = A.data().data() + i * A.cols();
    const double xi = x[i];
    for (std::size_t j = 0; j < A.cols(); ++j) y[j] += row[j] * xi;
  }
  return y;
}

std::vector<cplx> adjoint_matmul_vec(const CMatrix& A, const std::vector<cplx>& x) {
  assert(x.size() == A.rows());
  std::vector<cplx> y(A.cols(), cplx{});
  for (std::size_t i = 0; i < A.rows(); ++i) {
    const cplx* row = A.data().data() + i * A.cols();
    const cplx xi = x[i];
    for (std::size_t j = 0; j < A.cols(); ++j) y[j] += std::conj(row[j]) * xi;
  }
  return y;
}

RMatrix matmul(const RMatrix& A, const RMatrix& B) {
  assert(A.cols() == B.rows());
  RMatrix C(A.rows(), B.cols(), 0.0);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const double aik = A(i, k);
      if (aik == 0.0) continue;
      const double* brow = B.data().data() + k * B.cols();
      double* crow = C.data().data() + i * C.cols();
      for (std::size_t j = 0; j < B.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return C;
}

}  // namespace tfh
