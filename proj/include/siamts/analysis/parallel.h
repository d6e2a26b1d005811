// Copyright 2026 The SiamTS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIAMTS_ANALYSIS_PARALLEL_H_
#define SIAMTS_ANALYSIS_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace siamts::analysis {

// Worker budget: SIAMTS_THREADS when set (>= 1), else the hardware
// concurrency.
int thread_budget();

// Calls job(i) for i in [0, n) on min(threads, n) workers. Jobs must not
// throw; results are expected to be written to per-index slots.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& job);

}  // namespace siamts::analysis

#endif  // SIAMTS_ANALYSIS_PARALLEL_H_
