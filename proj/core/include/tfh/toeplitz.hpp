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

#ifndef TFH_TOEPLITZ_HPP
#define TFH_TOEPLITZ_HPP

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "tfh/linalg.hpp"
#include "tfh/symbols.hpp"

namespace tfh {

/// Levinson recursion hit a nonpositive prediction-error variance.
class LevinsonBreakdown : public std::runtime_error {
 public:
  LevinsonBreakdown(int step, double variance);
  int step() const { return step_; }
  double variance() const { return variance_; }

 private:
  int step_;
  double variance_;
};

/// Predictor polynomial P_N(z) = sum_u gamma_u z^u: the first column of
/// T_N^{-1} divided by sqrt((T_N^{-1})_{1,1}).
struct PredictorPoly {
  int degree = 0;
  std::vector<cplx> gamma;  // u = 0..degree

  /// min |P_N| sampled on >= 8 N circle points (nonzero for valid predictors).
  double min_modulus_on_circle() const;
};

/// Hermitian Toeplitz matrix of order (N+1) x (N+1) backed by a Fourier
/// table, entry(k,l) = h-hat(l-k). The predictor is computed once on first
/// use and cached; instances are immutable afterwards and safe to share
/// across threads.
class ToeplitzSystem {
 public:
  ToeplitzSystem(FourierTable table, int order);

  int order() const { return order_; }
  const FourierTable& table() const { return table_; }
  cplx coeff(long n) const { return table_.at(n); }
  cplx entry(int k, int l) const { return table_.at(long(l) - long(k)); }

  /// Dense materialization (small orders; tests and oracles).
  CMatrix dense() const;

  /// Cached predictor; throws LevinsonBreakdown if the symbol is not
  /// positive definite at this order.
  const PredictorPoly& predictor() const;

 private:
  FourierTable table_;
  int order_;
  mutable std::once_flag predictor_once_;
  mutable std::unique_ptr<PredictorPoly> predictor_;
};

ToeplitzSystem build_toeplitz(FourierTable table, int order);
ToeplitzSystem build_toeplitz(const SymbolSpec& spec, int order);

/// Levinson-Durbin recursion for the predictor coefficients.
PredictorPoly levinson_predictor(const ToeplitzSystem& system);

/// Coefficients of Q_N(z) = z^N conj(P_N)(1/z): q_u = conj(gamma_{N-u}).
std::vector<cplx> orthogonal_poly(const PredictorPoly& pred);

/// (T_N^{-1})_{k+1,l+1} by the Gohberg-Semencul two-sum formula.
cplx gs_inverse_entry(const PredictorPoly& pred, int k, int l);

/// Full T_N^{-1} assembled in O(N^2) through the diagonal recurrence of
/// the Gohberg-Semencul sums.
CMatrix gs_inverse_dense(const PredictorPoly& pred);

/// Applies T_N^{-1} as two pairs of triangular-Toeplitz convolutions.
class GsSolver {
 public:
  explicit GsSolver(const PredictorPoly& pred);
  int order() const { return order_; }
  std::vector<cplx> apply(const std::vector<cplx>& rhs) const;

 private:
  int order_;
  std::size_t fft_size_;
  std::vector<cplx> fwd_;   // FFT of (gamma_0..gamma_N, 0...)
  std::vector<cplx> corner_;  // FFT of (0, conj(gamma_N)..conj(gamma_1), 0...)
};

/// x with T_N x = rhs (Gohberg-Semencul applied via convolutions).
std::vector<cplx> toeplitz_solve(const ToeplitzSystem& system, const std::vector<cplx>& rhs);

/// y = T_N x by circulant embedding.
std::vector<cplx> matvec(const ToeplitzSystem& system, const std::vector<cplx>& x);

}  // namespace tfh

#endif  // TFH_TOEPLITZ_HPP
