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

#ifndef TFH_CLI_HPP
#define TFH_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "tfh/experiments.hpp"
#include "tfh/symbols.hpp"

namespace tfh::cli {

enum class Command { coeffs, eig, kernel_norm, verify, sweep };

/// Parsed invocation. Invalid combinations are rejected by validate()
/// before any computation starts.
struct RunConfig {
  Command command = Command::coeffs;
  std::vector<double> alphas;       // one or more exponents
  double alpha2 = -1.0;             // second exponent (prod), < 0 when unset
  std::string c1 = "one";           // preset name or comma list of real coefficients
  std::string c2;                   // regular part of the second symbol (prod)
  std::vector<int> N_list;
  int M = 1000;
  int half_width = 16;
  int s_max = 0;                    // > 0: also emit iterated-trace rows
  double delta = 0.02;
  double tol = 1e-10;
  std::uint64_t seed = 0x5EED;
  std::string theorem;              // verify subcommand argument
  std::string output;               // CSV path
};

/// exit codes: 0 pass/success, 1 fail verdict, 2 usage error, 3 numerical error
enum ExitCode : int { kOk = 0, kFailVerdict = 1, kUsage = 2, kNumerical = 3 };

/// c1 coefficient vector (indices -d..d) from a preset name ("one",
/// "shifted-cos") or a comma list a0,a1,..,ad meaning c1-hat(|n|) = a_n.
std::vector<cplx> parse_c1(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

/// Serializes doubles with 17 significant digits, '.' decimal separator,
/// LF line endings.
std::string format_double(double v);

void write_report_csv(std::ostream& os, const VerificationReport& rep,
                      const std::vector<std::pair<std::string, double>>& leading);

/// Executes the configured command, writes the CSV, prints the one-line
/// summary on stderr; returns the exit code.
int run(const RunConfig& config);

/// Full argv entry point (parses flags, then run()).
int main_with_args(int argc, char** argv);

}  // namespace tfh::cli

#endif  // TFH_CLI_HPP
