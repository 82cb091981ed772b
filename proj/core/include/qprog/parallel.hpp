// Copyright 2026 The qprog Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace qprog {

/// Worker count for parallel loops. Reads QPROG_THREADS when set, otherwise
/// the hardware concurrency; always at least 1.
int configured_threads();

/// Runs body(i) for every i in [0, count). Work is split into contiguous
/// chunks across configured_threads() workers. Callers must make body(i)
/// depend only on i so results do not depend on the chunking.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Per-sample seed for sample `index` of a run seeded with `seed`. Any thread
/// partition of a Monte-Carlo loop sees the same per-sample streams.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace qprog
