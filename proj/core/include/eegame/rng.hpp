// SPDX-License-Identifier: Apache-2.0
//
// eegame - energy-efficiency games on MIMO interference channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace eegame {

// Self-contained generator so that draws are bit-reproducible across
// standard libraries (std::normal_distribution is not pinned by the
// standard). splitmix64 state transition, Box-Muller for normals.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Standard real normal N(0, 1).
    double next_normal() {
        double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Circularly-symmetric complex normal CN(0, 1): E|z|^2 = 1.
    std::complex<double> next_cnormal() {
        double u1 = 1.0 - next_double();
        double u2 = next_double();
        double r = std::sqrt(-std::log(u1));
        double theta = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

  private:
    std::uint64_t state_;
};

/// Derives an independent substream seed from a root seed, a purpose label
/// and up to two integer indices. Fixed labeled splits keep e.g. topology
/// and fading draws independently reproducible from one root seed.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ root;
    for (char c : label) {
        h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
        h *= 0x100000001b3ULL;
    }
    auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    h = mix(h + 0x9e3779b97f4a7c15ULL * (a + 1));
    h = mix(h + 0x9e3779b97f4a7c15ULL * (b + 1));
    return h;
}

}  // namespace eegame
