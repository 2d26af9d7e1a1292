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
#include <vector>

#include "prepost/estimation.hpp"

namespace prepost {

struct GameConfig {
    std::int64_t trials = 10000;
    std::uint64_t seed = 0;
    std::int64_t max_retries = 1000000;  // attempts per trial before giving up
    Scenario scenario = Scenario::PreOnly;
    int threads = 1;  // >1 runs trial chunks in parallel; results identical
};

/// One run of the estimation game. Trial i draws its own RNG substream
/// (substream_seed(seed, i)); within a trial the draw order is: theta sampler
/// first, then one uniform per measurement attempt, plus one uniform for the
/// projective post-selection check in the PrePost scenario. Attempts repeat
/// with theta fixed until the Gate accepts, so statistics are identical for
/// any thread count.
struct GameResult {
    std::int64_t trials = 0;
    double merit_mean = 0.0;
    double merit_stderr = 0.0;  // sample stddev / sqrt(trials)
    std::vector<std::int64_t> outcome_counts;          // accepted outcomes
    std::vector<std::int64_t> pre_gate_outcome_counts; // every attempt's branch
    std::vector<std::int64_t> attempts_histogram;      // index = attempts - 1
    double mean_attempts = 0.0;
};

GameResult run_game(const EstimationProblem& problem, const Instrument& instrument,
                    const Estimator& estimate, const GameConfig& config);

/// The deterministic counterpart every simulation report carries; delegates
/// to average_merit on the given grid.
double analytic_reference(const EstimationProblem& problem, const Instrument& instrument,
                          const Estimator& estimate, Scenario scenario, const ThetaGrid& grid);

}  // namespace prepost
