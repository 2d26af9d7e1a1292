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

#include "prepost/instruments.hpp"
#include "prepost/rng.hpp"
#include "prepost/state.hpp"

namespace prepost {

// Random instances for property suites. Everything is driven by the caller's
// RandomStream, so suites reproduce exactly from a seed.

Direction random_direction(RandomStream& rng);

QuantumState random_state(int dim, RandomStream& rng);

Matrix random_gaussian_matrix(int rows, int cols, RandomStream& rng);

// Haar-distributed via QR with phase correction.
Matrix random_unitary(int dim, RandomStream& rng);

// Exact mode: rows of a random isometry (needs outcomes >= dim).
// Subnormalized: random vectors scaled so the element sum stays below the
// identity with margin `fill`.
Povm random_rank_one_povm(int dim, int outcomes, NormalizationMode mode, RandomStream& rng,
                          double fill = 0.9);

// General-rank POVM: random PSD pieces whitened to resolve the identity
// (Exact) or scaled below it (Subnormalized).
Povm random_povm(int dim, int outcomes, NormalizationMode mode, RandomStream& rng,
                 double fill = 0.9);

KrausSet random_kraus_set(int rows, int cols, int outcomes, NormalizationMode mode,
                          RandomStream& rng, double fill = 0.9);

PrePostEnsemble random_ensemble(int post_dim, int pre_dim, RandomStream& rng);

}  // namespace prepost
