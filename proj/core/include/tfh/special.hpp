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

#ifndef TFH_SPECIAL_HPP
#define TFH_SPECIAL_HPP

namespace tfh {

/// log|Gamma(x)| together with the sign of Gamma(x).
/// Negative arguments go through the reflection formula with exact
/// argument reduction, so the result stays accurate for x ~ -1e6.
/// At nonpositive integers sign is 0 and the log is +inf.
struct SignedLogGamma {
  double log_abs;
  int sign;
};
SignedLogGamma signed_log_gamma(double x);

/// Gamma(x) for moderate arguments, sign included.
double gamma_fn(double x);

}  // namespace tfh

#endif  // TFH_SPECIAL_HPP
