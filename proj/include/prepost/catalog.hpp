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

#include <string>

#include <json.hpp>

#include "prepost/game.hpp"

namespace prepost {

/// Everything needed to run one estimation game and its analytic reference.
struct GameSetup {
    std::string name;
    EstimationProblem problem;
    Instrument instrument;
    Estimator estimator;
    Scenario scenario = Scenario::PreOnly;
    ThetaGrid reference_grid;
};

// Product quadrature on the sphere: Gauss-Legendre in cos(theta), uniform in
// phi; weights sum to one. Exact for spherical polynomials of degree
// min(2*polar-1, azimuthal-1).
ThetaGrid sphere_grid(int polar_nodes, int azimuthal_nodes);

// Two orthogonal equiprobable states with a projective measurement; merit 1
// for the correct guess, so the game scores exactly 1.
GameSetup make_orthogonal_pair();

// The three-outcome unambiguous discrimination game on the pre/post ensemble
// pair; outcome order (+, -, 0).
GameSetup make_use_pair(double alpha_squared, double epsilon);

// Direction encoded in N parallel spins, estimated with a finite covariant
// POVM: the tetrahedral POVM at N = 1 (exactly optimal), a whitened
// direction-grid covariant design for N >= 2.
GameSetup make_parallel_spins(int spins);

// Direction encoded in N/2 up + N/2 down spins with a fixed post-selection;
// the instrument discretizes the optimal covariant seed and stays
// subnormalized, so the Gate genuinely rejects.
GameSetup make_antiparallel_spins(int spins);

struct LoadedGame {
    GameSetup setup;
    GameConfig config;
    nlohmann::json echo;  // the config document as parsed, for the manifest
};

/// Declarative problem description: a named catalog entry
/// ("orthogonal-pair", "use-pair", "parallel-spins", "antiparallel-spins")
/// with parameters, or "literal" with explicit state lists and instrument
/// matrices. Schema violations throw ValidationError with a field path.
LoadedGame load_game_config(const nlohmann::json& config);

}  // namespace prepost
