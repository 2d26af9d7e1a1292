// Copyright 2026 The prepost authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace prepost {

// SplitMix64 output function; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Seed of the engine for one substream (e.g. one Monte-Carlo trial):
// splitmix64(root_seed + GOLDEN_GAMMA * (index + 1)).
std::uint64_t substream_seed(std::uint64_t root_seed, std::uint64_t index);

/// Seedable 64-bit stream. The engine is mt19937_64 (bit-exact across
/// platforms per the standard); uniforms take the top 53 bits of raw output,
/// so every draw is reproducible bit for bit.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    static RandomStream substream(std::uint64_t root_seed, std::uint64_t index) {
        return RandomStream(substream_seed(root_seed, index));
    }

    std::uint64_t raw() { return engine_(); }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (std::normal_distribution is not
    // portable across library implementations).
    double gaussian();

    // Index sampled according to weights; returns -1 with the residual
    // probability 1 - sum(weights) (the rejected branch). Weights summing to
    // one never return -1.
    int sample(std::span<const double> weights);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace prepost
