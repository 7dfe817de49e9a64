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

#include "tfh/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tfh {
namespace {

// Golub-Welsch: eigenvalues of the Jacobi tridiagonal give the nodes,
// squared first eigenvector components (times mu0) give the weights.
// Implicit-shift QL on (d, e) tracking only the first row of the
// eigenvector product in z.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& z) {
  const int n = int(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  e.push_back(0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 64) throw std::runtime_error("tridiag_ql: no convergence");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

GaussRule from_recurrence(std::vector<double> d, std::vector<double> e2,
                          double mu0) {
  const int n = int(d.size());
  std::vector<double> e(n - 1);
  for (int i = 0; i < n - 1; ++i) e[i] = std::sqrt(e2[i]);
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiag_ql(d, e, z);

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (d[idx[i]] + 1.0);  // [-1,1] -> [0,1]
    rule.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
  }
  return rule;
}

}  // namespace

GaussRule gauss_legendre01(int n) { return gauss_jacobi01(n, 0.0); }

GaussRule gauss_jacobi01(int n, double beta) {
  if (n < 1 || beta <= -1.0)
    throw std::invalid_argument("gauss_jacobi01: need n >= 1 and beta > -1");
  // recurrence for weight (1+x)^beta on [-1,1] (Jacobi with a = 0, b = beta)
  std::vector<double> d(n), e2(std::max(0, n - 1));
  d[0] = beta / (beta + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + beta;
    d[k] = beta * beta / (t * (t + 2.0));
  }
  if (n > 1) e2[0] = 4.0 * (beta + 1.0) / ((beta + 2.0) * (beta + 2.0) * (beta + 3.0));
  for (int k = 2; k < n; ++k) {
    const double t = 2.0 * k + beta;
    e2[k - 1] = 4.0 * k * k * (k + beta) * (k + beta) /
                (t * t * (t + 1.0) * (t - 1.0));
  }
  const double mu0 = std::pow(2.0, beta + 1.0) / (beta + 1.0);
  GaussRule rule = from_recurrence(std::move(d), std::move(e2), mu0);
  // rescale weights from [-1,1] measure to the [0,1] weight s^beta:
  // int_0^1 s^beta g(s) ds = 2^{-beta-1} int_{-1}^1 (1+x)^beta g((1+x)/2) dx
  const double s = std::pow(2.0, -beta - 1.0);
  for (auto& w : rule.weights) w *= s;
  return rule;
}

}  // namespace tfh
