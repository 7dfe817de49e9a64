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

#ifndef TFH_PARALLEL_HPP
#define TFH_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace tfh {

/// Worker count: hardware concurrency, capped by the TOEPLITZ_FH_THREADS
/// environment variable when set.
unsigned thread_count();

/// Static block split of [begin, end) over thread_count() workers.
/// Bodies must write to disjoint locations; results are then independent
/// of the worker count.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace tfh

#endif  // TFH_PARALLEL_HPP
