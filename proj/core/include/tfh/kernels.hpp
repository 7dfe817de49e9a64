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

#ifndef TFH_KERNELS_HPP
#define TFH_KERNELS_HPP

#include <vector>

#include "tfh/linalg.hpp"
#include "tfh/quadrature.hpp"

namespace tfh {

/// G_a(x,y) = Gamma(a)^{-2} x^a y^a  int_{max(x,y)}^1 (t-x)^{a-1} (t-y)^{a-1} t^{-2a} dt
/// on [0,1]^2 minus the diagonal. The (t-max)^{a-1} endpoint power goes
/// into a Gauss-Jacobi panel; the remaining near-singular powers are
/// resolved by geometrically growing Legendre panels.
double eval_G_alpha(double alpha, double x, double y);

/// h_a = h_1 + h_2 on (0,1)^2 minus the diagonal, with
///   h_1 = int_{min}^{inf} t^{a-1} (|y-x|+t)^{a-1} dt
///   h_2 = int_0^{min} t^{a-1} (|y-x|+t)^{a-1} ((1-t)^a - 1) dt
///       + int_0^{min} (1-t)^{a-1} t^a (1-t-|y-x|)^{a-1} (|y-x|+t)^a dt
/// h_1's tail is mapped to [0,1] by u = min/t (no truncation parameter).
double eval_h_alpha(double alpha, double x, double y);

/// Reusable G_a evaluator: quadrature rules are built once per alpha.
class GKernel {
 public:
  explicit GKernel(double alpha);
  double alpha() const { return alpha_; }
  double operator()(double x, double y) const;

 private:
  double alpha_;
  double gamma_sq_;
  GaussRule jacobi_;    // weight s^{alpha-1}
  GaussRule legendre_;
};

/// M x M sampled-kernel matrix with zero diagonal: entries(i,j) =
/// kernel(i/M, j/M), grid weight scale = 1/M.
struct NystromKernel {
  int size = 0;
  double scale = 0.0;
  RMatrix entries;
};

/// Samples G_a / c1_at_1 on the uniform grid i/M (i = 0..M-1), zero diagonal.
NystromKernel nystrom_G(double alpha, int M, double c1_at_1);

/// Operator norm of the discretized kernel: dominant eigenvalue of the
/// entries matrix divided by M (piecewise-constant identification).
double operator_norm_nystrom(const NystromKernel& kernel);

/// Iterated-trace norm estimates t_s = (grid-weighted trace of the s-fold
/// kernel composition)^{1/s} for s = 2..s_max; t_s approaches the operator
/// norm as s grows. Work switches to log scale before traces can overflow.
std::vector<double> iterated_trace_norm(const NystromKernel& kernel, int s_max);

/// Kernel composition int_0^1 a(x,t) b(t,y) dt at grid level: matrix
/// product scaled by 1/M. The diagonal is kept (the composed kernel is
/// continuous there when 2a1 + 2a2 - 1 > 0).
RMatrix star_product(const NystromKernel& a, const NystromKernel& b);

/// Closed-form constants attached to the kernels.
struct KernelBounds {
  double alpha1 = 0.0;
  double alpha2 = 0.0;      // == alpha1 for the single-kernel bounds
  double c_upper = 0.0;     // upper bound for 1/||G~||, as printed
  double c_upper_alt = 0.0; // second candidate reconstructed from the proof
  double c_lower = 0.0;     // lower bound for 1/||G~||
  double c_singularity = 0.0;  // C_a in G_a <= C_a |x-y|^{2a-1}
  double h_duo = 0.0;          // H in the power-kernel composition bound
};

/// Single-kernel constants:
///   c_lower  = Gamma(1+a) Gamma(1-a) / Gamma(1-2a)   (0 at a = 1/2)
///   c_upper  = Gamma(a)^2 Gamma(2a+4) / (6 Gamma(1+2a))
///   c_upper_alt = 2 Gamma(2a+1) / Gamma(2a+4)
///   c_singularity = Gamma(1-2a) / (Gamma(1-a) Gamma(a))
///   h_duo = 2/a
KernelBounds closed_form_bounds(double alpha);

/// Product-kernel constants for c_{a1,a2} (requires a1 + a2 > 1/2):
/// the printed lower bound, the Beta-identity upper bound (c_upper) and
/// the printed 1/6^3 variant (c_upper_alt; equals c_upper / 27).
KernelBounds product_bounds(double alpha1, double alpha2);

}  // namespace tfh

#endif  // TFH_KERNELS_HPP
