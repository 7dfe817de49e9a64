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

#ifndef TFH_SPECTRA_HPP
#define TFH_SPECTRA_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "tfh/linalg.hpp"
#include "tfh/toeplitz.hpp"

namespace tfh {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct EigenEstimate {
  double value = 0.0;
  int iterations = 0;
  // ||A v - value v|| / (||v|| |value|); at most sqrt(tol) on success.
  // convergence is declared on settled Rayleigh increments (three
  // consecutive passes below tol), which certifies the value itself;
  // demanding residual <= tol outright is unreachable for symbols whose
  // extreme eigenvalue sits in an edge cluster.
  double residual = 0.0;
};

class PowerIterationFailure : public std::runtime_error {
 public:
  PowerIterationFailure(int iterations, double residual);
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Dominant eigenvalue (by magnitude) of a linear operator given through
/// its matvec. Deterministic seeded random starts; `restarts` independent
/// runs, the largest magnitude wins. Works for Hermitian operators and,
/// via the Rayleigh quotient, for positive-spectrum non-Hermitian products.
EigenEstimate power_iteration(
    const std::function<std::vector<cplx>(const std::vector<cplx>&)>& apply,
    std::size_t dim, double tol, int max_iters = 10000,
    std::uint64_t seed = kDefaultSeed, int restarts = 3);

/// Smallest eigenvalue of an SPD Toeplitz system by inverse power
/// iteration; every step is one Gohberg-Semencul solve. The returned
/// residual is measured against T itself with the converged vector.
EigenEstimate lambda_min_toeplitz(const ToeplitzSystem& system, double tol,
                                  int max_iters = 10000,
                                  std::uint64_t seed = kDefaultSeed);

/// Largest-magnitude eigenvalue of a Hermitian matrix by power iteration.
EigenEstimate lambda_max_matrix(const CMatrix& A, double tol,
                                int max_iters = 10000,
                                std::uint64_t seed = kDefaultSeed);
EigenEstimate lambda_max_matrix(const RMatrix& A, double tol,
                                int max_iters = 10000,
                                std::uint64_t seed = kDefaultSeed);

/// Full spectrum of a Hermitian matrix (order <= 512) by cyclic Jacobi
/// rotations, ascending. Off-diagonal Frobenius mass is driven below
/// 1e-12 of the input norm.
std::vector<double> dense_eig_oracle(const CMatrix& A);
std::vector<double> dense_eig_oracle(const RMatrix& A);

/// Spectral norm of an arbitrary (possibly rectangular) matrix: power
/// iteration on the Gram operator x -> A^H (A x).
double operator_norm_matrix(const CMatrix& A, double tol);
double operator_norm_matrix(const RMatrix& A, double tol);

}  // namespace tfh

#endif  // TFH_SPECTRA_HPP
