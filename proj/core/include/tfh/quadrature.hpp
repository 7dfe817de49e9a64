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

#ifndef TFH_QUADRATURE_HPP
#define TFH_QUADRATURE_HPP

#include <cmath>
#include <vector>

namespace tfh {

/// Nodes and weights on the reference interval [0, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule for  int_0^1 g(s) ds.
GaussRule gauss_legendre01(int n);

/// n-point Gauss-Jacobi rule for  int_0^1 s^beta g(s) ds,  beta > -1.
/// The endpoint power is carried by the weights; g is sampled smooth.
GaussRule gauss_jacobi01(int n, double beta);

/// int_a^b f(t) dt with a plain Legendre rule.
template <class F>
double legendre_panel(const GaussRule& gl, double a, double b, F&& f) {
  const double h = b - a;
  double acc = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    acc += gl.weights[i] * f(a + h * gl.nodes[i]);
  return h * acc;
}

/// int_a^{a+h} (t-a)^beta g(t) dt with the matching Jacobi rule.
template <class F>
double jacobi_left_panel(const GaussRule& gj, double beta, double a, double h, F&& g) {
  double acc = 0.0;
  for (std::size_t i = 0; i < gj.nodes.size(); ++i)
    acc += gj.weights[i] * g(a + h * gj.nodes[i]);
  return std::pow(h, beta + 1.0) * acc;
}

}  // namespace tfh

#endif  // TFH_QUADRATURE_HPP
