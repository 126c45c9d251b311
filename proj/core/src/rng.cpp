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

#include "tddgeom/rng.hpp"

#include <cmath>

namespace tddgeom {
namespace {

constexpr std::uint32_t kM0 = 0xD2511F53u;
constexpr std::uint32_t kM1 = 0xCD9E8D57u;
constexpr std::uint32_t kW0 = 0x9E3779B9u;
constexpr std::uint32_t kW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo)
{
    std::uint64_t const p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) noexcept
{
    for (int round = 0; round < 10; ++round)
    {
        if (round > 0)
        {
            key[0] += kW0;
            key[1] += kW1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kM0, ctr[0], hi0, lo0);
        mulhilo(kM1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_(stream)
{}

void StreamRng::refill() noexcept
{
    Philox4x32::Counter const ctr = {static_cast<std::uint32_t>(block_),
                                     static_cast<std::uint32_t>(block_ >> 32),
                                     static_cast<std::uint32_t>(stream_),
                                     static_cast<std::uint32_t>(stream_ >> 32)};
    buffer_ = Philox4x32::block(ctr, key_);
    ++block_;
    next_ = 0;
}

StreamRng::result_type StreamRng::operator()() noexcept
{
    if (next_ >= 4)
        refill();
    std::uint64_t const lo = buffer_[next_];
    std::uint64_t const hi = buffer_[next_ + 1];
    next_ += 2;
    return (hi << 32) | lo;
}

double StreamRng::uniform() noexcept
{
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double StreamRng::exponential() noexcept
{
    return -std::log(uniform());
}

}  // namespace tddgeom
