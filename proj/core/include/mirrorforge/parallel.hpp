// Copyright 2026 The MirrorForge Authors
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
#include <functional>

namespace mirrorforge {

/// Worker count: `requested` when positive, otherwise the hardware
/// concurrency, capped by MIRRORFORGE_THREADS when that is a positive integer.
int resolve_threads(int requested = 0);

/// Runs body(begin, end) over a static partition of [0, count). Every index
/// is visited exactly once; callers write results into per-index slots so the
/// output does not depend on the thread count. The first exception thrown by
/// any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace mirrorforge
