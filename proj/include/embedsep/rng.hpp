// include/embedsep/rng.hpp

// Copyright 2026  The embedsep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMBEDSEP_RNG_HPP_
#define EMBEDSEP_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

#include "embedsep/types.hpp"

namespace embedsep {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG. Draws are produced from raw mt19937_64 words rather
// than std::*_distribution so that streams are stable across standard
// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream derived from (seed, index, tag); used to give each
  // corpus worker / restart / epoch its own reproducible sequence.
  static Rng stream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag = 0) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= index * 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(s);
    s ^= tag * 0xd1b54a32d192ed03ULL;
    std::uint64_t c = splitmix64(s);
    return Rng(a ^ (b << 1) ^ (c >> 1));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n); n > 0. Multiply-shift, no modulo bias.
  Index uniform_index(Index n) {
    const auto r = static_cast<unsigned __int128>(next_u64());
    return static_cast<Index>((r * static_cast<unsigned __int128>(n)) >> 64);
  }

  // Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace embedsep

#endif  // EMBEDSEP_RNG_HPP_
