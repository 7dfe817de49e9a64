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

#ifndef TFH_SYMBOLS_HPP
#define TFH_SYMBOLS_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "tfh/fft.hpp"

namespace tfh {

/// Symmetric window of Fourier coefficients f-hat(-M..M).
class FourierTable {
 public:
  FourierTable() = default;
  FourierTable(int half_width, std::vector<cplx> coeffs);

  int half_width() const { return half_width_; }
  /// f-hat(n); throws outside [-M, M].
  cplx at(long n) const;
  /// max |coeffs(-n) - conj(coeffs(n))|, zero for tables of real functions.
  double hermitian_defect() const;

  const std::vector<cplx>& raw() const { return coeffs_; }

 private:
  int half_width_ = 0;
  std::vector<cplx> coeffs_;  // index n stored at n + half_width_
};

/// Fisher-Hartwig symbol  phi_a(e^{it}) = |1 - e^{it}|^{2a} c1(e^{it})
/// with c1 a strictly positive real trigonometric polynomial.
class SymbolSpec {
 public:
  /// c1_hat holds c1-hat(-d..d); Hermitian symmetry and positivity of c1
  /// on a dense grid are checked here.
  SymbolSpec(double alpha, std::vector<cplx> c1_hat);

  static SymbolSpec one(double alpha);          // c1 = 1
  static SymbolSpec shifted_cos(double alpha);  // c1 = 2 + cos t

  double alpha() const { return alpha_; }
  int degree() const { return int(c1_hat_.size() / 2); }
  const std::vector<cplx>& c1_hat() const { return c1_hat_; }

  /// c1(e^{it}) (real by the Hermitian invariant).
  double c1(double theta) const;
  double c1_at_one() const { return c1(0.0); }

 private:
  double alpha_ = 0.0;
  std::vector<cplx> c1_hat_;  // index n at n + degree
};

/// Fourier coefficients beta_u of g_alpha^{-1} = (1-chi)^{-alpha} g_1^{-1},
/// normalized so beta_0 = 1.
struct BetaSeries {
  double alpha = 0.0;
  std::vector<cplx> values;  // u = 0..length-1
};

/// n-th Fourier coefficient of (2 - 2 cos t)^alpha, alpha > -1/2.
/// Closed form (-1)^n Gamma(2a+1) / (Gamma(a+n+1) Gamma(a-n+1)) evaluated
/// through log-Gamma with reflection, so |n| up to 1e6 is safe.
double fourier_fh_pure(double alpha, long n);

/// phi_alpha-hat(-M..M): discrete convolution of the pure-part closed form
/// with c1-hat (exact, c1 is a trig polynomial).
FourierTable fourier_of_symbol(const SymbolSpec& spec, int half_width);

/// phi_alpha^{-1}-hat(-M..M): closed form for the pure part with exponent
/// -alpha, convolved with the coefficients of 1/c1 obtained by dense-grid
/// quadrature. Requires alpha < 1/2.
FourierTable fourier_of_inverse_symbol(const SymbolSpec& spec, int half_width);

/// beta_u for u = 0..length-1 via the binomial series of (1-z)^{-alpha}
/// convolved with the Taylor coefficients of g_1^{-1}.
BetaSeries wiener_hopf_beta(const SymbolSpec& spec, int length);

/// Outer factor of c1 evaluated at z = 1; |g1(1)|^2 = c1(1).
cplx g1_at_one(const SymbolSpec& spec);

/// Value of g1 at z = 0, exp(l0/2) with l0 the mean of log c1. The
/// beta normalization rescales the series by 1/g1(0); asymptotic
/// comparisons against u^{alpha-1}/(Gamma(alpha) g1(1)) must carry this
/// factor when the geometric mean of c1 is not 1.
double g1_at_zero(const SymbolSpec& spec);

/// Smallest u0 such that |beta_u * Gamma(a) g1(1) g1(0)^{-1} u^{1-a} - 1| < eps
/// for all u in [u0, length) of a precomputed series; -1 if never reached.
long beta_asymptotic_onset(const SymbolSpec& spec, const BetaSeries& beta, double eps);

}  // namespace tfh

#endif  // TFH_SYMBOLS_HPP
