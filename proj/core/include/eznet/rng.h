// Copyright 2026 The eznet Authors.
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

#ifndef EZNET_RNG_H_
#define EZNET_RNG_H_

#include <array>
#include <cstdint>
#include <limits>

namespace eznet {

struct Seed {
  std::uint64_t value = 0;
};

// Independent streams drawn from one Seed. Each generator consumes a fixed
// set of streams so that adding a new stream never changes existing draws.
enum class Stream : std::uint64_t {
  kLabels = 1,
  kWeights = 2,
  kEdges = 3,
  kEgo = 4,
  kObservations = 5,
};

std::uint64_t SplitMix64(std::uint64_t& state);

// Seed for replicate `index` of a simulation seeded with `base`.
Seed DeriveSeed(Seed base, std::uint64_t index);

// xoshiro256** seeded through SplitMix64. Every derived quantity (uniform,
// normal, bounded int) is computed here rather than by <random>
// distributions, whose output is implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);
  Rng(Seed seed, Stream stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  bool Bernoulli(double p) { return Uniform() < p; }
  // Uniform on [0, bound), bias-free (Lemire).
  std::uint64_t UniformInt(std::uint64_t bound);
  // Standard normal, Marsaglia polar method.
  double Normal();

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace eznet

#endif  // EZNET_RNG_H_
