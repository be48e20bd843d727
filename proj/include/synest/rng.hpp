// Copyright 2026 The Synest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNEST_RNG_HPP
#define SYNEST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace synest {

// One round of splitmix64. Used only to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic random stream. All floating-point draws are produced by
// explicit arithmetic on raw 64-bit outputs, never by std:: distributions,
// so byte-identical sequences are reproduced on any standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  // Stream derivation scheme: the master seed and stream id are mixed through
  // two splitmix64 rounds. Streams with distinct ids are independent for all
  // practical purposes and reproducible from (master, id) alone.
  static RngStream derive(std::uint64_t master, std::uint64_t stream_id) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (stream_id + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return RngStream(a ^ (b << 1));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1); rejects exact zeros (probability 2^-53 per draw).
  double uniform01_pos() {
    double u = uniform01();
    while (u == 0.0) u = uniform01();
    return u;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [0, n). Rejection sampling keeps the draw unbiased.
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  // Standard normal via Box-Muller; the second deviate is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform01_pos();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace synest

#endif  // SYNEST_RNG_HPP
