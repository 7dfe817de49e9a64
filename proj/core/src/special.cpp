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

#include "tfh/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tfh {

SignedLogGamma signed_log_gamma(double x) {
  if (x > 0.0) return {std::lgamma(x), 1};

  // reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1-x))
  const double m = std::floor(x);
  if (x == m)  // pole
    return {std::numeric_limits<double>::infinity(), 0};
  // sin(pi x) = (-1)^m sin(pi frac), frac = x - m in (0,1); the subtraction is exact
  const double frac = x - m;
  const double s = std::sin(std::numbers::pi * frac);
  const int par = (std::fmod(m, 2.0) == 0.0) ? 1 : -1;
  const double log_abs =
      std::log(std::numbers::pi) - std::log(s) - std::lgamma(1.0 - x);
  return {log_abs, par};
}

double gamma_fn(double x) {
  const auto [la, sg] = signed_log_gamma(x);
  if (sg == 0) return std::numeric_limits<double>::infinity();
  return sg * std::exp(la);
}

}  // namespace tfh
