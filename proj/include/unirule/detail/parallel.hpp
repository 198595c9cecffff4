/*
   Copyright 2026 The unirule Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UNIRULE_DETAIL_PARALLEL_HPP
#define UNIRULE_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace unirule::detail {

inline unsigned resolve_workers(unsigned requested) noexcept {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, total) into contiguous chunks, one per worker.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total, unsigned workers) {
    workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, total)));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    chunks.reserve(workers);
    const std::uint64_t base = total / workers, extra = total % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t len = base + (w < extra ? 1 : 0);
        chunks.emplace_back(begin, begin + len);
        begin += len;
    }
    return chunks;
}

/// Runs fn(begin, end) on each chunk and returns the per-chunk results in
/// chunk order. Exceptions thrown by a worker are rethrown on the caller.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::uint64_t total, unsigned workers, Fn&& fn) {
    const auto chunks = split_range(total, resolve_workers(workers));
    std::vector<Result> results(chunks.size());
    if (chunks.size() == 1) {
        results[0] = fn(chunks[0].first, chunks[0].second);
        return results;
    }
    std::vector<std::exception_ptr> errors(chunks.size());
    std::vector<std::thread> threads;
    threads.reserve(chunks.size());
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        threads.emplace_back([&, i] {
            try {
                results[i] = fn(chunks[i].first, chunks[i].second);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

template <class Fn>
std::uint64_t parallel_sum(std::uint64_t total, unsigned workers, Fn&& fn) {
    std::uint64_t sum = 0;
    for (auto v : map_chunks<std::uint64_t>(total, workers, fn)) sum += v;
    return sum;
}

/// Lowest index found by any worker; fn returns the first hit in its chunk.
template <class Fn>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, unsigned workers, Fn&& fn) {
    for (auto& hit : map_chunks<std::optional<std::uint64_t>>(total, workers, fn)) {
        if (hit) return hit;
    }
    return std::nullopt;
}

}  // namespace unirule::detail

#endif
