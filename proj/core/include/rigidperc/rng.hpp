// Copyright 2026 The rigidperc Authors
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

#ifndef RIGIDPERC_RNG_HPP_
#define RIGIDPERC_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace rigidperc {

// Generator identity written into every experiment artifact. Bump the
// suffix whenever the sampling stream for a given seed changes.
inline constexpr std::string_view kRngName = "mt19937_64/splitmix64-v1";

struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Order-sensitive combination of a seed with further 64-bit words.
template <typename... Words>
constexpr RngSeed derive_seed(RngSeed base, Words... words) noexcept {
  std::uint64_t h = splitmix64(base.value);
  ((h = splitmix64(h ^ static_cast<std::uint64_t>(words))), ...);
  return RngSeed{h};
}

// Maps 64 random bits to a double in [0, 1) using the top 53 bits.
constexpr double bits_to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Thin wrapper over std::mt19937_64. The engine's output sequence is fixed
// by the standard; conversions to doubles are done here instead of through
// std::uniform_real_distribution, whose output differs between standard
// library implementations.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(splitmix64(seed.value)) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return bits_to_unit(engine_()); }
  // Uniform in (0, 1]; safe as a logarithm argument.
  double uniform_open_low() { return 1.0 - uniform(); }
  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

inline std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

}  // namespace rigidperc

#endif  // RIGIDPERC_RNG_HPP_
