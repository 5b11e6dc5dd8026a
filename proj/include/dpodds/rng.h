// Copyright 2026 The dpodds Authors
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

#ifndef DPODDS_RNG_H_
#define DPODDS_RNG_H_

#include <cstdint>

namespace dpodds {

// SplitMix64 generator. The output sequence is a pure function of the seed,
// so draws are reproducible across runs and platforms. Not thread-safe: an
// instance must have a single owner.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : seed_(seed), state_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t NextU64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1); 0 and 1 are never returned.
  double NextOpenUnit() {
    constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
    return (static_cast<double>(NextU64() >> 11) + 0.5) * kTwoPowMinus53;
  }

 private:
  uint64_t seed_;
  uint64_t state_;
};

}  // namespace dpodds

#endif  // DPODDS_RNG_H_
