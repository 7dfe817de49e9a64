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

#ifndef TFH_FFT_HPP
#define TFH_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace tfh {

using cplx = std::complex<double>;

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// In-place radix-2 FFT; size must be a power of two.
/// inverse = true applies the conjugate transform and divides by the size.
void fft(std::vector<cplx>& a, bool inverse);

/// Cyclic convolution of two equal-length power-of-two vectors.
std::vector<cplx> cyclic_convolve(std::vector<cplx> a, std::vector<cplx> b);

}  // namespace tfh

#endif  // TFH_FFT_HPP
