// Copyright 2026 The Cycle Prefix Authors
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

#ifndef CPD_PARALLEL_H_
#define CPD_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace cpd {

// Environment variable capping the number of worker threads.
inline constexpr const char kMaxThreadsEnv[] = "CPD_MAX_THREADS";

// Worker count to use when `requested` is 0: hardware concurrency, capped by
// CPD_MAX_THREADS when set. A positive `requested` is still capped by the
// environment variable. Always at least 1.
int WorkerCount(int requested = 0);

// Calls body(i) for every i in [0, count), distributing indices dynamically
// over `workers` threads. Each index runs exactly once; the first exception
// thrown by any body is rethrown after all workers join.
void ParallelFor(std::size_t count, int workers,
                 const std::function<void(std::size_t)>& body);

}  // namespace cpd

#endif  // CPD_PARALLEL_H_
