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

#ifndef TDDGEOM_RNG_HPP
#define TDDGEOM_RNG_HPP

#include <array>
#include <cstdint>
#include <limits>

namespace tddgeom {

/// Philox4x32-10 block function (Salmon et al., SC'11).
struct Philox4x32
{
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key) noexcept;
};

/// Counter-based stream: key = seed, counter = (block index, stream index).
///
/// Every (seed, stream) pair addresses an independent sequence, so a Monte
/// Carlo draw can own its stream and results do not depend on scheduling.
class StreamRng
{
public:
    using result_type = std::uint64_t;

    StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept;

    /// Uniform on the open interval (0, 1).
    double uniform() noexcept;
    /// Exponential with unit mean.
    double exponential() noexcept;
    bool bernoulli(double p) noexcept { return uniform() < p; }

private:
    void refill() noexcept;

    Philox4x32::Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    Philox4x32::Counter buffer_{};
    int next_ = 4;
};

}  // namespace tddgeom

#endif  // TDDGEOM_RNG_HPP
