// Copyright 2026 The spinbench developers
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

#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>

namespace spinbench {

// splitmix64; used both as a seed mixer and for deriving independent
// per-task streams from (master seed, task keys...).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic stream id from a master seed and a list of keys.
// derive_seed(s, {a,b}) != derive_seed(s, {b,a}) in general.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t state = master ^ 0xa0761d6478bd642fULL;
    std::uint64_t acc = splitmix64(state);
    for (std::uint64_t k : keys) {
        state ^= k;
        acc ^= splitmix64(state);
        state = acc;
    }
    return acc;
}

// Thin wrapper over mt19937_64 with draw helpers that do not rely on
// distribution classes, so sequences are identical across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("bound must be positive");
        // rejection sampling, unbiased
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    bool next_bool() { return (engine_() >> 63) != 0; }

    // uniform over {-1, +1}
    int next_sign() { return next_bool() ? 1 : -1; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace spinbench
