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

#include "tfh/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tfh/parallel.hpp"
#include "tfh/special.hpp"
#include "tfh/spectra.hpp"

namespace tfh {

namespace {

constexpr int kJacobiNodes = 64;
constexpr int kLegendreNodes = 32;

double check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5))
    throw std::domain_error("kernel evaluation: alpha must lie in (0, 1/2]");
  return alpha;
}

}  // namespace

GKernel::GKernel(double alpha)
    : alpha_(check_alpha(alpha)),
      gamma_sq_(gamma_fn(alpha) * gamma_fn(alpha)),
      jacobi_(gauss_jacobi01(kJacobiNodes, alpha - 1.0)),
      legendre_(gauss_legendre01(kLegendreNodes)) {}

double GKernel::operator()(double x, double y) const {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw std::domain_error("G_alpha: (x,y) outside the unit square");
  if (x == 0.0 || y == 0.0) return 0.0;
  if (x == y) throw std::domain_error("G_alpha: diagonal excluded");
  const double a = alpha_;
  const double top = std::max(x, y);
  const double low = std::min(x, y);
  if (top >= 1.0) return 0.0;  // empty integration interval

  const double span = 1.0 - top;
  const double sep = top - low;
  const double h0 = std::min(sep, span);

  // [top, top+h0]: (t-top)^{a-1} absorbed by the Jacobi weight
  double acc = jacobi_left_panel(jacobi_, a - 1.0, top, h0, [&](double t) {
    return std::pow(t - low, a - 1.0) * std::pow(t, -2.0 * a);
  });
  // then Legendre panels doubling away from the singular endpoint
  double t0 = top + h0;
  while (t0 < 1.0 - 1e-15) {
    const double t1 = std::min(top + 2.0 * (t0 - top), 1.0);
    acc += legendre_panel(legendre_, t0, t1, [&](double t) {
      return std::pow(t - top, a - 1.0) * std::pow(t - low, a - 1.0) * std::pow(t, -2.0 * a);
    });
    t0 = t1;
  }
  return std::pow(x, a) * std::pow(y, a) * acc / gamma_sq_;
}

double eval_G_alpha(double alpha, double x, double y) {
  return GKernel(alpha)(x, y);
}

namespace {

/// Shared machinery for the three h integrals.
class HKernel {
 public:
  explicit HKernel(double alpha)
      : a_(alpha),
        tail_(gauss_jacobi01(kJacobiNodes, -2.0 * alpha)),
        left_(gauss_jacobi01(kJacobiNodes, alpha - 1.0)),
        legendre_(gauss_legendre01(kLegendreNodes)) {}

  double eval(double x, double y) const {
    const double m = std::min(x, y);
    const double d = std::abs(y - x);
    return h1(m, d) + h2a(m, d) + h2b(m, d);
  }

 private:
  // h1 = m^{2a-1} int_0^1 u^{-2a} (1 + d u / m)^{a-1} du
  double h1(double m, double d) const {
    const double a = a_;
    const double u0 = std::min(1.0, m / d);
    auto smooth = [&](double u) { return std::pow(1.0 + d * u / m, a - 1.0); };
    double acc = jacobi_left_panel(tail_, -2.0 * a, 0.0, u0, smooth);
    double t0 = u0;
    while (t0 < 1.0 - 1e-15) {
      const double t1 = std::min(2.0 * t0, 1.0);
      acc += legendre_panel(legendre_, t0, t1,
                            [&](double u) { return std::pow(u, -2.0 * a) * smooth(u); });
      t0 = t1;
    }
    return std::pow(m, 2.0 * a - 1.0) * acc;
  }

  // int_0^m t^{a-1} (d+t)^{a-1} ((1-t)^a - 1) dt
  double h2a(double m, double d) const {
    const double a = a_;
    auto smooth = [&](double t) {
      return std::pow(d + t, a - 1.0) * (std::pow(1.0 - t, a) - 1.0);
    };
    auto full = [&](double t) { return std::pow(t, a - 1.0) * smooth(t); };
    return left_then_geometric(m, d, smooth, full);
  }

  // int_0^m t^{a-1} * [ t (1-t)^{a-1} (1-t-d)^{a-1} (d+t)^a ] dt
  double h2b(double m, double d) const {
    const double a = a_;
    auto smooth = [&](double t) {
      return t * std::pow(1.0 - t, a - 1.0) * std::pow(1.0 - t - d, a - 1.0) *
             std::pow(d + t, a);
    };
    auto full = [&](double t) { return std::pow(t, a - 1.0) * smooth(t); };
    return left_then_geometric(m, d, smooth, full);
  }

  template <class S, class F>
  double left_then_geometric(double m, double d, S&& smooth, F&& full) const {
    const double h0 = std::min(m, d);
    double acc = jacobi_left_panel(left_, a_ - 1.0, 0.0, h0, smooth);
    double t0 = h0;
    while (t0 < m - 1e-15 * m) {
      const double t1 = std::min(2.0 * t0, m);
      acc += legendre_panel(legendre_, t0, t1, full);
      t0 = t1;
    }
    return acc;
  }

  double a_;
  GaussRule tail_;
  GaussRule left_;
  GaussRule legendre_;
};

}  // namespace

double eval_h_alpha(double alpha, double x, double y) {
  check_alpha(alpha);
  if (!(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0))
    throw std::domain_error("h_alpha: (x,y) must lie in the open square");
  if (x == y) throw std::domain_error("h_alpha: diagonal excluded");
  return HKernel(alpha).eval(x, y);
}

NystromKernel nystrom_G(double alpha, int M, double c1_at_1) {
  check_alpha(alpha);
  if (M < 16) throw std::invalid_argument("nystrom_G: M >= 16 required");
  if (!(c1_at_1 > 0.0)) throw std::invalid_argument("nystrom_G: c1(1) must be positive");
  const GKernel g(alpha);
  NystromKernel k;
  k.size = M;
  k.scale = 1.0 / double(M);
  k.entries = RMatrix(std::size_t(M), std::size_t(M), 0.0);
  auto& A = k.entries;
  parallel_for(1, std::size_t(M), [&](std::size_t i) {
    const double x = double(i) / double(M);
    for (std::size_t j = 0; j < i; ++j)
      A(i, j) = g(x, double(j) / double(M)) / c1_at_1;
  });
  for (std::size_t i = 0; i < std::size_t(M); ++i)
    for (std::size_t j = i + 1; j < std::size_t(M); ++j) A(i, j) = A(j, i);
  return k;
}

double operator_norm_nystrom(const NystromKernel& kernel) {
  const auto est = lambda_max_matrix(kernel.entries, 1e-12);
  return std::abs(est.value) * kernel.scale;
}

std::vector<double> iterated_trace_norm(const NystromKernel& kernel, int s_max) {
  if (s_max < 2) throw std::invalid_argument("iterated_trace_norm: s_max >= 2");
  const std::size_t n = std::size_t(kernel.size);
  RMatrix D(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) D(i, j) = kernel.entries(i, j) * kernel.scale;

  std::vector<double> out;
  out.reserve(std::size_t(s_max - 1));
  RMatrix P = matmul(D, D);
  double log_rescale = 0.0;
  for (int s = 2; s <= s_max; ++s) {
    P = matmul(P, D);  // P = D^{s+1} (times exp(log_rescale))
    double mx = 0.0;
    for (double v : P.data()) mx = std::max(mx, std::abs(v));
    if (mx > 1e280) {  // keep traces under ~1e300
      for (double& v : P.data()) v *= 1e-280;
      log_rescale += 280.0 * std::log(10.0);
    }
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += P(i, i);
    out.push_back(tr > 0.0 ? std::exp((std::log(tr) + log_rescale) / double(s)) : 0.0);
  }
  return out;
}

RMatrix star_product(const NystromKernel& a, const NystromKernel& b) {
  if (a.size != b.size) throw std::invalid_argument("star_product: size mismatch");
  RMatrix C = matmul(a.entries, b.entries);
  for (double& v : C.data()) v *= a.scale;
  return C;
}

KernelBounds closed_form_bounds(double alpha) {
  check_alpha(alpha);
  KernelBounds b;
  b.alpha1 = b.alpha2 = alpha;
  const double g_a = gamma_fn(alpha);
  b.c_upper = g_a * g_a * gamma_fn(2.0 * alpha + 4.0) / (6.0 * gamma_fn(1.0 + 2.0 * alpha));
  b.c_upper_alt = 2.0 * gamma_fn(2.0 * alpha + 1.0) / gamma_fn(2.0 * alpha + 4.0);
  b.c_lower = (alpha == 0.5)
                  ? 0.0  // Gamma(1-2a) -> inf, lower bound -> 0 by continuity
                  : gamma_fn(1.0 + alpha) * gamma_fn(1.0 - alpha) / gamma_fn(1.0 - 2.0 * alpha);
  b.c_singularity = (alpha == 0.5)
                        ? std::numeric_limits<double>::infinity()
                        : gamma_fn(1.0 - 2.0 * alpha) / (gamma_fn(1.0 - alpha) * g_a);
  b.h_duo = 2.0 / alpha;
  return b;
}

KernelBounds product_bounds(double alpha1, double alpha2) {
  check_alpha(alpha1);
  check_alpha(alpha2);
  if (!(alpha1 + alpha2 > 0.5))
    throw std::domain_error("product_bounds: requires alpha1 + alpha2 > 1/2");
  KernelBounds b;
  b.alpha1 = alpha1;
  b.alpha2 = alpha2;
  auto lower_factor = [](double a) {
    return a == 0.5 ? 0.0
                    : gamma_fn(1.0 - a) * gamma_fn(a + 1.0) / gamma_fn(1.0 - 2.0 * a);
  };
  b.c_lower = lower_factor(alpha1) * lower_factor(alpha2) *
              std::min(alpha1, alpha2) / (alpha1 + alpha2);
  // int_0^1 (1-t)^2 t^p dt = 2 / ((p+1)(p+2)(p+3))
  auto beta3 = [](double p) { return 2.0 / ((p + 1.0) * (p + 2.0) * (p + 3.0)); };
  const double g1 = gamma_fn(alpha1), g2 = gamma_fn(alpha2);
  b.c_upper = 1.0 / beta3(alpha1 + alpha2) * g1 * g1 / beta3(2.0 * alpha1) * g2 * g2 /
              beta3(2.0 * alpha2);
  b.c_upper_alt = (1.0 / 216.0) * gamma_fn(alpha1 + alpha2 + 4.0) /
                  gamma_fn(alpha1 + alpha2 + 1.0) * gamma_fn(2.0 * alpha1 + 4.0) * g1 *
                  g1 / gamma_fn(2.0 * alpha1 + 1.0) * gamma_fn(2.0 * alpha2 + 4.0) * g2 *
                  g2 / gamma_fn(2.0 * alpha2 + 1.0);
  const double c1s = closed_form_bounds(alpha1).c_singularity;
  const double c2s = closed_form_bounds(alpha2).c_singularity;
  b.h_duo = 1.0 / alpha1 + 1.0 / alpha2;
  b.c_singularity = c1s * c2s * b.h_duo;
  return b;
}

}  // namespace tfh
