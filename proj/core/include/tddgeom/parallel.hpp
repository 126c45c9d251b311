// Copyright 2026 The tddgeom Authors
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

#ifndef TDDGEOM_PARALLEL_HPP
#define TDDGEOM_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tddgeom {

/// Number of workers used when a caller passes 0.
inline unsigned default_workers() noexcept
{
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, n) on up to `workers` threads (0 = hardware).
///
/// Indices are handed out in fixed-size chunks. fn must only write to
/// per-index storage; the first exception thrown is rethrown on the caller.
template<class F>
void parallel_for(std::size_t n, unsigned workers, F&& fn)
{
    if (workers == 0)
        workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }

    constexpr std::size_t chunk = 64;
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto work = [&] {
        try
        {
            for (;;)
            {
                std::size_t const begin = next.fetch_add(chunk);
                if (begin >= n)
                    return;
                std::size_t const end = std::min(n, begin + chunk);
                for (std::size_t i = begin; i < end; ++i)
                    fn(i);
            }
        }
        catch (...)
        {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
            next.store(n);
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace tddgeom

#endif  // TDDGEOM_PARALLEL_HPP
