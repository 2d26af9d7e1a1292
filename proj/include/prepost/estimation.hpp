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

#include <functional>
#include <variant>
#include <vector>

#include "prepost/instruments.hpp"
#include "prepost/rng.hpp"
#include "prepost/state.hpp"

namespace prepost {

// Parameter chosen by Alice; a small vector of reals (a direction is
// {theta, phi}, a discrete label a single entry).
using Theta = std::vector<double>;

// Bob's guess for each outcome index.
using Estimator = std::function<Theta(int)>;

enum class Scenario { PreOnly, FixedPost, PrePost };

// monostate only so aggregates carrying an Instrument stay default
// constructible; every consumer rejects it.
using Instrument = std::variant<std::monostate, Povm, KrausSet>;

/// The estimation game's data: prior sampler over Theta, encoders into pre
/// (and optionally post) states, and the merit function F(theta, guess).
struct EstimationProblem {
    std::function<Theta(RandomStream&)> sample_theta;
    std::function<QuantumState(const Theta&)> encode_pre;
    std::function<QuantumState(const Theta&)> encode_post;  // empty unless PrePost
    std::function<double(const Theta&, const Theta&)> merit;
};

/// Finite quadrature over Theta: weights absorb the prior and sum to one.
struct ThetaGrid {
    std::vector<Theta> points;
    std::vector<double> weights;
};

/// Outcome distribution at a fixed theta under the scenario's rule.
RealVector outcome_distribution(const EstimationProblem& problem, const Instrument& instrument,
                                Scenario scenario, const Theta& theta);

/// integral dtheta p(theta) sum_k P(k|theta) F(theta, estimate(k)) over the
/// given grid. Deterministic for a fixed grid; a ZeroAcceptanceError at a
/// grid point is rethrown with that theta attached.
double average_merit(const EstimationProblem& problem, const Instrument& instrument,
                     const Estimator& estimate, Scenario scenario, const ThetaGrid& grid);

}  // namespace prepost
