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

#ifndef TFH_EXPERIMENTS_HPP
#define TFH_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tfh/kernels.hpp"
#include "tfh/spectra.hpp"
#include "tfh/symbols.hpp"

namespace tfh {

enum class Theorem {
  principal,
  prod,
  inverse1,
  inverse2,
  noyau,
  predictor,
  rappel,
  morphos,
  half_lemma,
  widom,
  bounds,
};

enum class Verdict { pass, fail, inconclusive };

const char* theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);
const char* verdict_name(Verdict v);

/// residual = |measured - predicted| / max(|predicted|, 1e-300)
double report_residual(double measured, double predicted);

struct ReportRow {
  std::vector<double> keys;
  double measured = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
};

/// One theorem's convergence study: keyed rows plus a verdict produced by
/// a pure rule over the rows (spelled out in `criterion`).
struct VerificationReport {
  Theorem theorem = Theorem::principal;
  std::string params;
  std::vector<std::string> key_names;
  std::vector<ReportRow> rows;
  Verdict verdict = Verdict::inconclusive;
  std::string criterion;
};

using Grid = std::vector<std::pair<double, double>>;

/// Off-diagonal sample points {0.25, 0.4, 0.6, 0.75}^2.
Grid default_offdiag_grid();

/// lambda_min(T_N) * N^{2a} / c1(1) against the Nystrom 1/||G~_a||.
/// Pass: residual at max N below 5% and residuals decreasing over the
/// last three N. alpha = 0 is the classical regular case; the prediction
/// is then min c1 / c1(1).
VerificationReport verify_principal(const SymbolSpec& spec, std::vector<int> N_list,
                                    int M, std::uint64_t seed = kDefaultSeed);

/// Nystrom 1/||G~_a|| against the closed-form sandwich. Pass: the lower
/// bound holds for every alpha and at least one of the two upper-bound
/// candidates holds for every alpha.
VerificationReport verify_bounds(std::vector<double> alpha_list, int M);

/// Product minimal eigenvalue: lambda_min(T_N(phi1) T_N(phi2)) scaled by
/// N^{2a1+2a2}/(c1(1)c2(1)) against the star-kernel prediction under both
/// Gamma-scaling conventions (rows carry convention 0: no Gamma factors,
/// 1: Gamma(a1)^2 Gamma(a2)^2). Pass: the better convention fits within
/// 7% at max N.
VerificationReport verify_prod(const SymbolSpec& spec1, const SymbolSpec& spec2,
                               std::vector<int> N_list, int M,
                               std::uint64_t seed = kDefaultSeed);

/// Entrywise correction T_N^{-1} - T_N(phi^{-1}) against N^{2a-1} h_a under
/// both Gamma-scaling conventions; both fits are recorded. Pass: one
/// convention fits within 10% at max N.
VerificationReport verify_inverse1(const SymbolSpec& spec, std::vector<int> N_list,
                                   Grid sample_grid = default_offdiag_grid());

/// c1(1) N^{1-2a} (T_N^{-1})_{[Nx],[Ny]} against G_a(x,y) on the grid.
/// Pass: max residual at max N below 5%, per-point residuals decreasing
/// over octaves (10% slack per step).
VerificationReport verify_noyau(const SymbolSpec& spec, std::vector<int> N_list,
                                Grid sample_grid = default_offdiag_grid());

/// Border-region bound |T_N^{-1}|_{k,l} <= C |l-k|^{a-1} (N delta)^a:
/// C is fitted at N/2 (plus 5% headroom) and frozen, then verified at N.
VerificationReport verify_inverse2(const SymbolSpec& spec, int N, double delta);

/// Predictor coefficients against beta asymptotics: bulk rows (group 0)
/// gamma_{k,N} vs beta_k (1-k/N)^a, edge rows (group 1) gamma_{N-k,N} vs
/// beta_k^{(a+1)} a/N. Pass: bulk within 5% at max N mid-range, edge
/// within 10% at max N.
VerificationReport verify_predictor(const SymbolSpec& spec, std::vector<int> N_list);

/// Scaled entrywise gap N^{1-2a} max_{k,l} |T_N^{-1} - T_N(phi^{-1})|.
/// Pass: last value at most 1.5 x median of the previous values.
VerificationReport verify_morphos(const SymbolSpec& spec, std::vector<int> N_list);

/// ||T_N(phi_a) - T_N(phi_1/2)|| / (N (1/2-a) |ln(1/2-a)|) over the
/// (alpha, N) grid. Pass: max ratio <= 3 x median ratio.
VerificationReport verify_half_lemma(const std::vector<cplx>& c1_hat,
                                     std::vector<double> alpha_list,
                                     std::vector<int> N_list);

/// ||A|| = N ||G_N|| for the piecewise-constant kernel of a random matrix,
/// both sides from the same power iteration. Pass: equal to 1e-12.
VerificationReport verify_widom(std::vector<int> sizes, std::uint64_t seed = kDefaultSeed);

}  // namespace tfh

#endif  // TFH_EXPERIMENTS_HPP
