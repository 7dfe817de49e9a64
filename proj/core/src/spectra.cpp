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

#include "tfh/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace tfh {

PowerIterationFailure::PowerIterationFailure(int iterations, double residual)
    : std::runtime_error("power iteration: no convergence after " +
                         std::to_string(iterations) +
                         " iterations (residual " + std::to_string(residual) + ")"),
      residual_(residual) {}

namespace {

using Apply = std::function<std::vector<cplx>(const std::vector<cplx>&)>;

std::vector<cplx> random_start(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> v(dim);
  for (auto& x : v) x = cplx(u(rng), u(rng));
  const double s = 1.0 / norm2(v);
  for (auto& x : v) x *= s;
  return v;
}

struct PowerResult {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;
  std::vector<cplx> vec;
};

// One run: v normalized, w = A v, Rayleigh lam = Re<w, v>. Stops once the
// Rayleigh increments stay below tol * |lam| for three consecutive
// iterations AND the relative residual ||A v - lam v|| / |lam| is below
// sqrt(tol). The residual guard blocks false convergence on oscillating
// iterates (paired +-lambda); its sqrt scale keeps edge-clustered spectra
// reachable, where the residual shrinks like the cluster gap itself.
PowerResult power_run(const Apply& apply, std::size_t dim, double tol,
                      int max_iters, std::uint64_t seed) {
  const double res_gate = std::sqrt(tol);
  auto v = random_start(dim, seed);
  double lam = 0.0;
  double rel_res = 0.0;
  int streak = 0;
  bool done = false;
  int it = 0;
  for (; it < max_iters; ++it) {
    auto w = apply(v);
    const double next = dot(w, v).real();
    const double nw = norm2(w);
    if (nw == 0.0) {  // start annihilated: zero eigenvalue, exact
      lam = 0.0;
      rel_res = 0.0;
      done = true;
      break;
    }
    double rss = 0.0;
    for (std::size_t i = 0; i < dim; ++i) rss += std::norm(w[i] - next * v[i]);
    rel_res = std::sqrt(rss) / std::max(std::abs(next), 1e-300);
    const bool small_step =
        it > 0 && std::abs(next - lam) <= tol * std::max(std::abs(next), 1e-300);
    streak = small_step ? streak + 1 : 0;
    lam = next;
    for (auto& x : w) x /= nw;
    std::swap(v, w);
    if (streak >= 3 && rel_res <= res_gate) {
      done = true;
      break;
    }
  }
  PowerResult res;
  res.value = lam;
  res.iterations = std::min(it + 1, max_iters);
  res.residual = rel_res;
  res.vec = std::move(v);
  if (!done) throw PowerIterationFailure(max_iters, rel_res);
  return res;
}

PowerResult power_best(const Apply& apply, std::size_t dim, double tol,
                       int max_iters, std::uint64_t seed, int restarts) {
  PowerResult best;
  bool have = false;
  for (int r = 0; r < restarts; ++r) {
    auto res = power_run(apply, dim, tol, max_iters,
                         seed + std::uint64_t(r) * 0x9E3779B97F4A7C15ull);
    if (!have || std::abs(res.value) > std::abs(best.value)) {
      best = std::move(res);
      have = true;
    }
  }
  return best;
}

}  // namespace

EigenEstimate power_iteration(const Apply& apply, std::size_t dim, double tol,
                              int max_iters, std::uint64_t seed, int restarts) {
  auto res = power_best(apply, dim, tol, max_iters, seed, restarts);
  return {res.value, res.iterations, res.residual};
}

EigenEstimate lambda_min_toeplitz(const ToeplitzSystem& system, double tol,
                                  int max_iters, std::uint64_t seed) {
  if (!(tol > 0.0)) throw std::invalid_argument("lambda_min_toeplitz: tol > 0 required");
  GsSolver solver(system.predictor());
  const std::size_t dim = std::size_t(system.order()) + 1;
  auto res = power_best([&](const std::vector<cplx>& v) { return solver.apply(v); },
                        dim, tol, max_iters, seed, 1);
  EigenEstimate out;
  out.value = 1.0 / res.value;
  out.iterations = res.iterations;
  // report the residual against T itself with the converged vector
  auto tv = matvec(system, res.vec);
  double rss = 0.0;
  for (std::size_t i = 0; i < dim; ++i) rss += std::norm(tv[i] - out.value * res.vec[i]);
  out.residual = std::sqrt(rss) / (norm2(res.vec) * std::max(std::abs(out.value), 1e-300));
  return out;
}

EigenEstimate lambda_max_matrix(const CMatrix& A, double tol, int max_iters,
                                std::uint64_t seed) {
  if (A.rows() != A.cols()) throw std::invalid_argument("lambda_max_matrix: square input required");
  return power_iteration(
      [&](const std::vector<cplx>& v) { return matmul_vec(A, v); }, A.rows(),
      tol, max_iters, seed, 3);
}

EigenEstimate lambda_max_matrix(const RMatrix& A, double tol, int max_iters,
                                std::uint64_t seed) {
  if (A.rows() != A.cols()) throw std::invalid_argument("lambda_max_matrix: square input required");
  const std::size_t n = A.rows();
  return power_iteration(
      [&](const std::vector<cplx>& v) {
        std::vector<cplx> y(n, cplx{});
        for (std::size_t i = 0; i < n; ++i) {
          cplx acc{};
          const double* row = A.data().data() + i * n;
          for (std::size_t j = 0; j < n; ++j) acc += row[j] * v[j];
          y[i] = acc;
        }
        return y;
      },
      n, tol, max_iters, seed, 3);
}

namespace {

std::vector<double> jacobi_eigenvalues(CMatrix A) {
  const std::size_t n = A.rows();
  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += std::norm(A(i, j));
  const double target = 1e-12 * std::sqrt(frob);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * std::norm(A(i, j));
    if (std::sqrt(off) <= target) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = A(p, q);
        if (std::abs(apq) == 0.0) continue;
        const double app = A(p, p).real();
        const double aqq = A(q, q).real();
        // phase out apq, then the classical real rotation
        const cplx phase = apq / std::abs(apq);
        const double tau = (aqq - app) / (2.0 * std::abs(apq));
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - std::conj(s) * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = std::conj(s) * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = A(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

std::vector<double> dense_eig_oracle(const CMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("dense_eig_oracle: square input required");
  if (A.rows() > 512) throw std::invalid_argument("dense_eig_oracle: order capped at 512");
  return jacobi_eigenvalues(A);
}

std::vector<double> dense_eig_oracle(const RMatrix& A) {
  CMatrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  return dense_eig_oracle(C);
}

double operator_norm_matrix(const CMatrix& A, double tol) {
  if (A.rows() == 0 || A.cols() == 0) return 0.0;
  auto est = power_iteration(
      [&](const std::vector<cplx>& v) { return adjoint_matmul_vec(A, matmul_vec(A, v)); },
      A.cols(), tol, 20000, kDefaultSeed, 3);
  return std::sqrt(std::max(0.0, est.value));
}

double operator_norm_matrix(const RMatrix& A, double tol) {
  CMatrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
  return operator_norm_matrix(C, tol);
}

}  // namespace tfh
