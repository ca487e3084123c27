// Copyright 2026 The colorz Authors
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

#ifndef COLORZ_SRC_SHARDS_H
#define COLORZ_SRC_SHARDS_H

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace colorz::internal {

/// Evaluates fn(i) for every shard i in [0, shards) on up to `threads`
/// workers. Output slot i always holds fn(i), so callers that reduce in
/// index order get the same answer for any worker count.
template <typename T, typename Fn>
std::vector<T> run_shards(uint64_t shards, size_t threads, Fn &&fn) {
    std::vector<T> out(shards);
    size_t workers = std::min<uint64_t>(std::max<size_t>(threads, 1), shards);
    if (workers <= 1) {
        for (uint64_t i = 0; i < shards; i++) {
            out[i] = fn(i);
        }
        return out;
    }
    std::atomic<uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (uint64_t i = next++; i < shards; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = shards;
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

}  // namespace colorz::internal

#endif
