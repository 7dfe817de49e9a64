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

#include "tfh/toeplitz.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tfh/fft.hpp"

namespace tfh {

LevinsonBreakdown::LevinsonBreakdown(int step, double variance)
    : std::runtime_error("Levinson breakdown at step " + std::to_string(step) +
                         ": prediction-error variance " + std::to_string(variance)),
      step_(step),
      variance_(variance) {}

double PredictorPoly::min_modulus_on_circle() const {
  const int samples = 8 * std::max(degree, 1);
  double mn = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double th = 2.0 * std::numbers::pi * k / samples;
    cplx p{};
    // Horner in e^{i th}
    const cplx z = std::polar(1.0, th);
    for (int u = degree; u >= 0; --u) p = p * z + gamma[std::size_t(u)];
    mn = std::min(mn, std::abs(p));
  }
  return mn;
}

ToeplitzSystem::ToeplitzSystem(FourierTable table, int order)
    : table_(std::move(table)), order_(order) {
  if (order_ < 0) throw std::invalid_argument("ToeplitzSystem: negative order");
  if (table_.half_width() < order_)
    throw std::invalid_argument("ToeplitzSystem: table half_width below order");
}

CMatrix ToeplitzSystem::dense() const {
  const int n = order_ + 1;
  CMatrix T{std::size_t(n), std::size_t(n)};
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) T(std::size_t(k), std::size_t(l)) = entry(k, l);
  return T;
}

const PredictorPoly& ToeplitzSystem::predictor() const {
  std::call_once(predictor_once_, [this] {
    predictor_ = std::make_unique<PredictorPoly>(levinson_predictor(*this));
  });
  return *predictor_;
}

ToeplitzSystem build_toeplitz(FourierTable table, int order) {
  return ToeplitzSystem(std::move(table), order);
}

ToeplitzSystem build_toeplitz(const SymbolSpec& spec, int order) {
  return ToeplitzSystem(fourier_of_symbol(spec, order), order);
}

PredictorPoly levinson_predictor(const ToeplitzSystem& system) {
  const int N = system.order();
  const auto h = [&](long j) { return system.coeff(j); };

  // minimize int |A|^2 h over A(z) = sum_u c_u z^u with c_0 = 1;
  // then gamma_u = conj(c_u) / sqrt(E_N).
  std::vector<cplx> c(std::size_t(N) + 1, cplx{});
  c[0] = 1.0;
  double E = h(0).real();
  if (!(E > 0.0)) throw LevinsonBreakdown(0, E);

  std::vector<cplx> prev(std::size_t(N) + 1);
  for (int n = 0; n < N; ++n) {
    cplx acc{};
    for (int u = 0; u <= n; ++u) acc += c[std::size_t(u)] * h(long(n) + 1 - u);
    const cplx k = -acc / E;
    for (int u = 0; u <= n + 1; ++u) prev[std::size_t(u)] = c[std::size_t(u)];
    for (int u = 0; u <= n + 1; ++u)
      c[std::size_t(u)] = prev[std::size_t(u)] + k * std::conj(prev[std::size_t(n + 1 - u)]);
    E *= (1.0 - std::norm(k));
    if (!(E > 0.0)) throw LevinsonBreakdown(n + 1, E);
  }

  PredictorPoly pred;
  pred.degree = N;
  pred.gamma.resize(std::size_t(N) + 1);
  const double s = 1.0 / std::sqrt(E);
  for (int u = 0; u <= N; ++u) pred.gamma[std::size_t(u)] = std::conj(c[std::size_t(u)]) * s;
  return pred;
}

std::vector<cplx> orthogonal_poly(const PredictorPoly& pred) {
  std::vector<cplx> q(pred.gamma.size());
  for (std::size_t u = 0; u < q.size(); ++u)
    q[u] = std::conj(pred.gamma[std::size_t(pred.degree) - u]);
  return q;
}

cplx gs_inverse_entry(const PredictorPoly& pred, int k, int l) {
  const int N = pred.degree;
  if (k < 0 || l < 0 || k > N || l > N)
    throw std::out_of_range("gs_inverse_entry: index outside [0, N]");
  const auto& g = pred.gamma;
  const int m = std::min(k, l);
  cplx s1{}, s2{};
  for (int u = 0; u <= m; ++u) s1 += g[std::size_t(k - u)] * std::conj(g[std::size_t(l - u)]);
  for (int u = 0; u < m; ++u)
    s2 += std::conj(g[std::size_t(N + 1 - k + u)]) * g[std::size_t(N + 1 - l + u)];
  return s1 - s2;
}

CMatrix gs_inverse_dense(const PredictorPoly& pred) {
  const int N = pred.degree;
  const auto& g = pred.gamma;
  CMatrix T(std::size_t(N) + 1, std::size_t(N) + 1);
  // along each diagonal l-k = m the two Gohberg-Semencul sums grow by one
  // term per step, so the whole inverse assembles in O(N^2)
  for (int m = 0; m <= N; ++m) {
    cplx acc{};
    for (int k = 0; k + m <= N; ++k) {
      const int l = k + m;
      acc += g[std::size_t(k)] * std::conj(g[std::size_t(l)]);
      if (k >= 1)
        acc -= std::conj(g[std::size_t(N + 1 - k)]) * g[std::size_t(N + 1 - l)];
      T(std::size_t(k), std::size_t(l)) = acc;
      T(std::size_t(l), std::size_t(k)) = std::conj(acc);
    }
  }
  return T;
}

GsSolver::GsSolver(const PredictorPoly& pred) : order_(pred.degree) {
  const std::size_t n = std::size_t(order_) + 1;
  fft_size_ = next_pow2(2 * n);
  std::vector<cplx> fwd(fft_size_, cplx{});
  std::vector<cplx> corner(fft_size_, cplx{});
  for (std::size_t u = 0; u < n; ++u) fwd[u] = pred.gamma[u];
  for (std::size_t u = 1; u < n; ++u) corner[u] = std::conj(pred.gamma[n - u]);
  fft(fwd, false);
  fft(corner, false);
  fwd_ = std::move(fwd);
  corner_ = std::move(corner);
}

std::vector<cplx> GsSolver::apply(const std::vector<cplx>& rhs) const {
  const std::size_t n = std::size_t(order_) + 1;
  if (rhs.size() != n) throw std::invalid_argument("GsSolver::apply: length mismatch");

  // T^{-1} = L L^H - B B^H with L, B lower-triangular Toeplitz built from
  // gamma and the reversed conjugate tail; each factor is one convolution.
  auto tri_pair = [&](const std::vector<cplx>& spec_fft) {
    std::vector<cplx> x(fft_size_, cplx{});
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i];
    fft(x, false);
    std::vector<cplx> y(fft_size_);
    for (std::size_t i = 0; i < fft_size_; ++i) y[i] = std::conj(spec_fft[i]) * x[i];
    fft(y, true);  // y = adjoint factor applied to rhs (correlation)
    std::vector<cplx> z(fft_size_, cplx{});
    for (std::size_t i = 0; i < n; ++i) z[i] = y[i];
    fft(z, false);
    for (std::size_t i = 0; i < fft_size_; ++i) z[i] *= spec_fft[i];
    fft(z, true);
    z.resize(n);
    return z;
  };

  auto a = tri_pair(fwd_);
  const auto b = tri_pair(corner_);
  for (std::size_t i = 0; i < n; ++i) a[i] -= b[i];
  return a;
}

std::vector<cplx> toeplitz_solve(const ToeplitzSystem& system, const std::vector<cplx>& rhs) {
  GsSolver solver(system.predictor());
  return solver.apply(rhs);
}

std::vector<cplx> matvec(const ToeplitzSystem& system, const std::vector<cplx>& x) {
  const std::size_t n = std::size_t(system.order()) + 1;
  if (x.size() != n) throw std::invalid_argument("matvec: length mismatch");
  const std::size_t p = next_pow2(2 * n);
  // circulant first column: (h(0), h(-1), .., h(-N), 0.., h(N), .., h(1))
  std::vector<cplx> col(p, cplx{});
  for (std::size_t k = 0; k < n; ++k) col[k] = system.coeff(-long(k));
  for (std::size_t k = 1; k < n; ++k) col[p - k] = system.coeff(long(k));
  std::vector<cplx> xx(p, cplx{});
  for (std::size_t i = 0; i < n; ++i) xx[i] = x[i];
  auto y = cyclic_convolve(std::move(col), std::move(xx));
  y.resize(n);
  return y;
}

}  // namespace tfh
