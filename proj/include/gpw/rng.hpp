// Copyright 2026 gpwitness contributors
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

#ifndef GPW_RNG_HPP
#define GPW_RNG_HPP

#include <cstdint>
#include <random>

namespace gpw {

// Deterministic per-stream randomness: (seed, stream) pairs give independent,
// reproducible sequences regardless of how much any other stream consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    gen_.seed(seq);
  }

  std::uint64_t bits() { return gen_(); }

  // Uniform value in [0, n) without modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = std::uint64_t(0) - (std::uint64_t(0) - n) % n;  // largest multiple of n
    std::uint64_t v;
    do {
      v = gen_();
    } while (limit != 0 && v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace gpw

#endif  // GPW_RNG_HPP
