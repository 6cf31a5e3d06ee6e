// Copyright 2026 The qecgate Authors
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

#ifndef QECGATE_RANDOM_H
#define QECGATE_RANDOM_H

#include <cstdint>
#include <limits>

namespace qecgate {

/// SplitMix64 output function (Steele, Lea, Flood 2014).
constexpr uint64_t splitmix64_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64 generator. Output k (0-based) is mix(state0 + (k + 1) * golden),
/// so the sequence is fixed by the 64-bit state on every platform.
///
/// Satisfies UniformRandomBitGenerator.
class SplitMix64 {
   public:
    using result_type = uint64_t;
    static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    explicit constexpr SplitMix64(uint64_t state) : state_(state) {
    }

    /// Independent stream for (seed, index): state = mix(seed ^ mix(index)).
    static constexpr SplitMix64 substream(uint64_t seed, uint64_t index) {
        return SplitMix64(splitmix64_mix(seed ^ splitmix64_mix(index)));
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()() {
        state_ += kGolden;
        return splitmix64_mix(state_);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    constexpr double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

   private:
    uint64_t state_;
};

}  // namespace qecgate

#endif
