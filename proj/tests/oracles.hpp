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

// Test-only reference computations. Everything here is independent of the
// library's own evaluation paths: LU with partial pivoting for inverses
// and solves, adaptive Simpson on substitution-regularized integrands for
// the singular kernels, and plain trapezoid sums for Fourier coefficients.

#ifndef TFH_TESTS_ORACLES_HPP
#define TFH_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "tfh/linalg.hpp"
#include "tfh/symbols.hpp"

namespace tfh::oracle {

// ---------------------------------------------------------------- dense LU

struct Lu {
  CMatrix lu;
  std::vector<std::size_t> piv;
};

inline Lu lu_factor(CMatrix A) {
  const std::size_t n = A.rows();
  Lu f{std::move(A), {}};
  f.piv.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(f.lu(i, k)) > std::abs(f.lu(p, k))) p = i;
    f.piv[k] = p;
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(p, j));
    const cplx d = f.lu(k, k);
    if (std::abs(d) == 0.0) throw std::runtime_error("lu_factor: singular matrix");
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx m = f.lu(i, k) / d;
      f.lu(i, k) = m;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
    }
  }
  return f;
}

inline std::vector<cplx> lu_solve(const Lu& f, std::vector<cplx> b) {
  const std::size_t n = f.lu.rows();
  for (std::size_t k = 0; k < n; ++k)
    if (f.piv[k] != k) std::swap(b[k], b[f.piv[k]]);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) b[i] -= f.lu(i, j) * b[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) b[i] -= f.lu(i, j) * b[j];
    b[i] /= f.lu(i, i);
  }
  return b;
}

inline CMatrix lu_inverse(const CMatrix& A) {
  const std::size_t n = A.rows();
  const Lu f = lu_factor(A);
  CMatrix inv{n, n};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx> e(n, cplx{});
    e[j] = 1.0;
    const auto col = lu_solve(f, std::move(e));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

// ----------------------------------------------------- adaptive quadrature

namespace detail {

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double eps,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, m, fa, flm, fm);
  const double right = simpson(f, m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson for smooth integrands.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double eps = 1e-13) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = detail::simpson(f, a, b, fa, fm, fb);
  return detail::adapt(f, a, b, fa, fm, fb, whole, eps, 36);
}

/// G_alpha through the substitution u = (t - max)^alpha, which removes the
/// endpoint singularity entirely; then adaptive Simpson.
inline double G_alpha_ref(double alpha, double x, double y, double eps = 1e-12) {
  if (x == 0.0 || y == 0.0) return 0.0;
  const double top = std::max(x, y), low = std::min(x, y);
  if (top >= 1.0) return 0.0;
  const double U = std::pow(1.0 - top, alpha);
  const double inv_a = 1.0 / alpha;
  auto f = [&](double u) {
    const double t = top + std::pow(u, inv_a);
    return std::pow(t - low, alpha - 1.0) * std::pow(t, -2.0 * alpha) * inv_a;
  };
  const double ga = std::tgamma(alpha);
  return std::pow(x, alpha) * std::pow(y, alpha) * integrate(f, 0.0, U, eps) / (ga * ga);
}

/// h_alpha with each piece regularized by a power substitution.
inline double h_alpha_ref(double alpha, double x, double y, double eps = 1e-12) {
  const double m = std::min(x, y), d = std::abs(y - x);
  const double a = alpha;
  // h1 = m^{2a-1} int_0^1 u^{-2a} (1 + d u/m)^{a-1} du;  v = u^{1-2a}
  const double p1 = 1.0 - 2.0 * a;
  auto f1 = [&](double v) {
    const double u = std::pow(v, 1.0 / p1);
    return std::pow(1.0 + d * u / m, a - 1.0) / p1;
  };
  const double h1 = std::pow(m, 2.0 * a - 1.0) * integrate(f1, 0.0, 1.0, eps);
  // h2a: t = w^{1/a}
  auto f2 = [&](double w) {
    const double t = std::pow(w, 1.0 / a);
    return std::pow(d + t, a - 1.0) * (std::pow(1.0 - t, a) - 1.0) / a;
  };
  const double h2a = integrate(f2, 0.0, std::pow(m, a), eps);
  // h2b: integrand ~ t^a near zero; t = w^{1/a} keeps it smooth as well
  auto f3 = [&](double w) {
    const double t = std::pow(w, 1.0 / a);
    return t * std::pow(1.0 - t, a - 1.0) * std::pow(1.0 - t - d, a - 1.0) *
           std::pow(d + t, a) / a;
  };
  const double h2b = integrate(f3, 0.0, std::pow(m, a), eps);
  return h1 + h2a + h2b;
}

/// 2 - 2 cos t evaluated as 4 sin^2(t/2): no cancellation near t = 0.
inline double two_minus_two_cos(double t) {
  const double s = std::sin(0.5 * t);
  return 4.0 * s * s;
}

/// Fourier coefficient of (2 - 2 cos t)^a by adaptive quadrature,
/// valid for -1/2 < a. Negative exponents go through the substitution
/// v = t^{1-2|a|} that absorbs the t^{2a} endpoint power.
inline double fh_pure_ref(double a, long n, double eps = 1e-12) {
  n = std::labs(n);
  auto bracket = [&](double t) {  // (2-2cos t)^a / t^{2a}, smooth and even
    if (t == 0.0) return 1.0;
    return std::pow(two_minus_two_cos(t) / (t * t), a);
  };
  double integral;
  if (a >= 0.0) {
    integral = integrate(
        [&](double t) { return std::pow(two_minus_two_cos(t), a) * std::cos(double(n) * t); },
        0.0, std::numbers::pi, eps);
  } else {
    const double p = 1.0 + 2.0 * a;  // in (0,1)
    integral = integrate(
        [&](double v) {
          const double t = std::pow(v, 1.0 / p);
          return bracket(t) * std::cos(double(n) * t) / p;
        },
        0.0, std::pow(std::numbers::pi, p), eps);
  }
  return integral / std::numbers::pi;
}

// ------------------------------------------------- trapezoid Fourier sums

/// f-hat(n) by a P-point trapezoid sum (spectrally accurate for smooth f;
/// used with P = 2^20 for the singular symbols, where the error is sub-1e-8).
inline cplx trapezoid_coefficient(const std::function<double(double)>& f, long n,
                                  std::size_t P) {
  cplx acc{};
  for (std::size_t k = 0; k < P; ++k) {
    const double th = 2.0 * std::numbers::pi * double(k) / double(P);
    acc += f(th) * std::polar(1.0, -double(n) * th);
  }
  return acc / double(P);
}

inline double symbol_value(const SymbolSpec& spec, double theta) {
  return std::pow(two_minus_two_cos(theta), spec.alpha()) * spec.c1(theta);
}

// ------------------------------------------------- random positive symbols

/// Random strictly positive trig polynomial via |q(e^{it})|^2 + floor.
inline std::vector<cplx> random_positive_c1(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> q(std::size_t(degree) + 1);
  for (auto& v : q) v = cplx(u(rng), u(rng));
  std::vector<cplx> c(std::size_t(2 * degree + 1), cplx{});
  for (int n = -degree; n <= degree; ++n) {
    cplx s{};
    for (int k = 0; k <= degree; ++k) {
      const int km = k - n;
      if (km >= 0 && km <= degree) s += q[std::size_t(k)] * std::conj(q[std::size_t(km)]);
    }
    c[std::size_t(n + degree)] = s;
  }
  c[std::size_t(degree)] += 0.05;
  return c;
}

}  // namespace tfh::oracle

#endif  // TFH_TESTS_ORACLES_HPP
