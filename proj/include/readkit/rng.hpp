// Copyright (c) 2026 readkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

// Deterministic seeding. All output-affecting randomness flows from one
// root seed through named sub-streams, so adding a stage never perturbs
// another stage's samples. std::uniform_*_distribution is
// implementation-defined and must not be used for anything that lands in
// an output artifact; use bounded()/unit_double() instead.

namespace readkit {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Seed for a named sub-stream of a root seed.
constexpr std::uint64_t substream(std::uint64_t root_seed, std::string_view name) {
    return splitmix64(root_seed ^ fnv1a64(name));
}

// Uniform integer in [0, n). Modulo bias is < n / 2^64, irrelevant for the
// pool sizes used here, and the result is identical on every platform.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

// Uniform double in [0, 1), 53 bits, platform-independent.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_double(rng);
}

} // namespace readkit
