// Copyright 2026 The noclick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOCLICK_PARALLEL_H
#define NOCLICK_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace noclick {

/// Runs task(i) for i in [0, n) on up to `threads` workers. Results land in
/// index order, so output does not depend on scheduling. The first exception
/// by index is rethrown after all workers finish.
template <class Result>
std::vector<Result> parallel_map(int n, int threads, const std::function<Result(int)> &task) {
    std::vector<Result> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < n; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    int count = std::clamp(threads, 1, std::max(1, n));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

}  // namespace noclick

#endif
