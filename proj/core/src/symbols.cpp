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

#include "tfh/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tfh/special.hpp"

namespace tfh {

FourierTable::FourierTable(int half_width, std::vector<cplx> coeffs)
    : half_width_(half_width), coeffs_(std::move(coeffs)) {
  if (half_width_ < 0 || coeffs_.size() != std::size_t(2 * half_width_ + 1))
    throw std::invalid_argument("FourierTable: need 2*half_width+1 coefficients");
  for (const cplx& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("FourierTable: non-finite coefficient");
}

cplx FourierTable::at(long n) const {
  if (n < -half_width_ || n > half_width_)
    throw std::out_of_range("FourierTable::at: index outside window");
  return coeffs_[std::size_t(n + half_width_)];
}

double FourierTable::hermitian_defect() const {
  double d = 0.0;
  for (int n = 0; n <= half_width_; ++n)
    d = std::max(d, std::abs(at(-n) - std::conj(at(n))));
  return d;
}

namespace {
constexpr int kPositivityGrid = 4096;
}

SymbolSpec::SymbolSpec(double alpha, std::vector<cplx> c1_hat)
    : alpha_(alpha), c1_hat_(std::move(c1_hat)) {
  if (!(alpha_ >= 0.0 && alpha_ <= 0.5))
    throw std::domain_error("SymbolSpec: alpha must lie in [0, 1/2]");
  if (c1_hat_.empty() || c1_hat_.size() % 2 == 0)
    throw std::invalid_argument("SymbolSpec: c1_hat must hold indices -d..d");
  const int d = degree();
  for (int n = 0; n <= d; ++n) {
    const cplx diff = c1_hat_[std::size_t(d - n)] - std::conj(c1_hat_[std::size_t(d + n)]);
    if (std::abs(diff) > 1e-12)
      throw std::invalid_argument("SymbolSpec: c1 is not real-valued (Hermitian symmetry broken)");
  }
  for (int k = 0; k < kPositivityGrid; ++k) {
    const double th = 2.0 * std::numbers::pi * k / kPositivityGrid;
    if (!(c1(th) > 0.0))
      throw std::domain_error("SymbolSpec: c1 not strictly positive on the circle");
  }
}

SymbolSpec SymbolSpec::one(double alpha) { return SymbolSpec(alpha, {cplx(1.0, 0.0)}); }

SymbolSpec SymbolSpec::shifted_cos(double alpha) {
  return SymbolSpec(alpha, {cplx(0.5, 0.0), cplx(2.0, 0.0), cplx(0.5, 0.0)});
}

double SymbolSpec::c1(double theta) const {
  const int d = degree();
  cplx acc{};
  for (int n = -d; n <= d; ++n)
    acc += c1_hat_[std::size_t(n + d)] * std::polar(1.0, double(n) * theta);
  return acc.real();
}

double fourier_fh_pure(double alpha, long n) {
  if (!(alpha > -0.5))
    throw std::domain_error("fourier_fh_pure: alpha must exceed -1/2");
  if (alpha == 0.0) return n == 0 ? 1.0 : 0.0;
  n = std::labs(n);
  const auto num = signed_log_gamma(2.0 * alpha + 1.0);
  const auto d1 = signed_log_gamma(alpha + double(n) + 1.0);
  const auto d2 = signed_log_gamma(alpha - double(n) + 1.0);
  if (d2.sign == 0) return 0.0;  // pole in the denominator
  const double mag = std::exp(num.log_abs - d1.log_abs - d2.log_abs);
  const int sign = ((n % 2 == 0) ? 1 : -1) * num.sign * d1.sign * d2.sign;
  return sign * mag;
}

FourierTable fourier_of_symbol(const SymbolSpec& spec, int half_width) {
  const int d = spec.degree();
  if (half_width < d)
    throw std::invalid_argument("fourier_of_symbol: half_width below deg(c1)");
  // pure coefficients out to half_width + d make the convolution exact;
  // negative indices are mirrored by conjugation so Hermitian symmetry is
  // exact rather than up to summation-order rounding
  std::vector<double> pure(std::size_t(half_width + d + 1));
  for (int m = 0; m <= half_width + d; ++m) pure[std::size_t(m)] = fourier_fh_pure(spec.alpha(), m);
  std::vector<cplx> out(std::size_t(2 * half_width + 1));
  for (int n = 0; n <= half_width; ++n) {
    cplx acc{};
    for (int j = -d; j <= d; ++j)
      acc += spec.c1_hat()[std::size_t(j + d)] * pure[std::size_t(std::labs(n - j))];
    out[std::size_t(half_width + n)] = acc;
    out[std::size_t(half_width - n)] = std::conj(acc);
  }
  return FourierTable(half_width, std::move(out));
}

namespace {

// Fourier coefficients of a smooth positive grid function, by FFT.
// values[k] = f(2 pi k / P); returns f-hat(n) for n = 0..P-1 (wrapped).
std::vector<cplx> grid_coefficients(std::vector<cplx> values) {
  fft(values, false);
  const double s = 1.0 / double(values.size());
  for (auto& v : values) v *= s;
  return values;
}

std::vector<cplx> sample_c1(const SymbolSpec& spec, std::size_t grid) {
  std::vector<cplx> v(grid);
  for (std::size_t k = 0; k < grid; ++k)
    v[k] = spec.c1(2.0 * std::numbers::pi * double(k) / double(grid));
  return v;
}

}  // namespace

FourierTable fourier_of_inverse_symbol(const SymbolSpec& spec, int half_width) {
  if (!(spec.alpha() < 0.5))
    throw std::domain_error("fourier_of_inverse_symbol: requires alpha < 1/2");
  const std::size_t grid = next_pow2(std::size_t(std::max(4096, 64 * half_width)));
  auto samples = sample_c1(spec, grid);
  for (auto& v : samples) v = 1.0 / v;
  const auto inv_c1 = grid_coefficients(std::move(samples));

  // 1/c1 is analytic in an annulus, so its coefficients decay geometrically;
  // truncate the convolution window where they fall below 1e-18 of the peak.
  const long half = long(grid / 2);
  double peak = 0.0;
  for (const auto& c : inv_c1) peak = std::max(peak, std::abs(c));
  long window = 1;
  for (long j = half - 1; j >= 1; --j) {
    const double mag = std::max(std::abs(inv_c1[std::size_t(j)]),
                                std::abs(inv_c1[grid - std::size_t(j)]));
    if (mag > 1e-18 * peak) {
      window = j;
      break;
    }
  }

  std::vector<double> pure(std::size_t(half_width) + std::size_t(window) + 1);
  for (std::size_t m = 0; m < pure.size(); ++m)
    pure[m] = fourier_fh_pure(-spec.alpha(), long(m));

  std::vector<cplx> out(std::size_t(2 * half_width + 1));
  for (long n = 0; n <= half_width; ++n) {
    cplx acc{};
    for (long j = -window; j <= window; ++j) {
      const cplx cj = inv_c1[std::size_t((j + long(grid)) % long(grid))];
      acc += cj * pure[std::size_t(std::labs(n - j))];
    }
    out[std::size_t(half_width + n)] = acc;
    out[std::size_t(half_width - n)] = std::conj(acc);
  }
  return FourierTable(half_width, std::move(out));
}

namespace {

// Coefficients of log g1 (analytic part of log c1, zero mode halved).
std::vector<cplx> log_outer_coeffs(const SymbolSpec& spec, std::size_t grid) {
  auto v = sample_c1(spec, grid);
  for (auto& x : v) x = std::log(x.real());
  auto lhat = grid_coefficients(std::move(v));
  std::vector<cplx> a(grid / 2, cplx{});
  a[0] = 0.5 * lhat[0];
  for (std::size_t n = 1; n < grid / 2; ++n) a[n] = lhat[n];
  return a;
}

}  // namespace

BetaSeries wiener_hopf_beta(const SymbolSpec& spec, int length) {
  if (length < 1) throw std::invalid_argument("wiener_hopf_beta: length >= 1");
  const std::size_t grid =
      next_pow2(std::size_t(std::max(4096, 8 * std::max(length, 64 * spec.degree()))));
  const auto a = log_outer_coeffs(spec, grid);

  // boundary values of g1^{-1} = exp(-sum a_n z^n), then Taylor coefficients
  std::vector<cplx> boundary(grid, cplx{});
  for (std::size_t n = 0; n < a.size(); ++n) boundary[n] = -a[n];
  fft(boundary, true);                     // sum_n (-a_n) e^{i n theta} / grid
  for (auto& b : boundary) b = std::exp(b * double(grid));
  auto taylor = grid_coefficients(std::move(boundary));

  // binomial series of (1-z)^{-alpha}
  std::vector<double> binom(std::size_t(length), 0.0);
  binom[0] = 1.0;
  for (int u = 1; u < length; ++u)
    binom[std::size_t(u)] = binom[std::size_t(u - 1)] * (double(u) - 1.0 + spec.alpha()) / double(u);

  BetaSeries beta;
  beta.alpha = spec.alpha();
  beta.values.resize(std::size_t(length));
  for (int u = 0; u < length; ++u) {
    cplx acc{};
    for (int v = 0; v <= u; ++v)
      acc += binom[std::size_t(v)] * taylor[std::size_t(u - v)];
    beta.values[std::size_t(u)] = acc;
  }
  const cplx b0 = beta.values[0];
  if (std::abs(b0) == 0.0) throw std::runtime_error("wiener_hopf_beta: vanishing beta_0");
  for (auto& b : beta.values) b /= b0;
  return beta;
}

cplx g1_at_one(const SymbolSpec& spec) {
  const std::size_t grid = next_pow2(std::size_t(std::max(4096, 64 * spec.degree())));
  const auto a = log_outer_coeffs(spec, grid);
  cplx s{};
  for (const auto& an : a) s += an;
  return std::exp(s);
}

double g1_at_zero(const SymbolSpec& spec) {
  const std::size_t grid = next_pow2(std::size_t(std::max(4096, 64 * spec.degree())));
  const auto a = log_outer_coeffs(spec, grid);
  return std::exp(a[0].real());
}

long beta_asymptotic_onset(const SymbolSpec& spec, const BetaSeries& beta, double eps) {
  const double ga = gamma_fn(beta.alpha);
  const double scale = std::abs(g1_at_one(spec)) / g1_at_zero(spec) * ga;
  long onset = -1;
  for (long u = long(beta.values.size()) - 1; u >= 1; --u) {
    const double ratio =
        std::abs(beta.values[std::size_t(u)]) * scale * std::pow(double(u), 1.0 - beta.alpha);
    if (std::abs(ratio - 1.0) >= eps) {
      onset = u + 1;
      break;
    }
  }
  if (onset < 0) onset = 1;
  return onset < long(beta.values.size()) ? onset : -1;
}

}  // namespace tfh
