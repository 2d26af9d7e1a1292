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

#include "prepost/linalg.hpp"
#include "prepost/state.hpp"

namespace prepost {

/// Rotation of a spin 1/2 taking +z to the given direction:
/// U = exp(-i theta (-sin(phi) sigma_x + cos(phi) sigma_y) / 2),
/// the rotation by theta about the axis z x Omega. det U = 1 and
/// U|up_z> has Bloch vector equal to the direction.
Matrix su2_rotation(const Direction& d);

/// U^(x n_plain) (x) conj(U)^(x n_conj) for U = su2_rotation(d).
/// Requires n_plain + n_conj >= 1.
Matrix covariant_rotation(const Direction& d, int n_plain, int n_conj);

/// Coefficients of the N-spin coherent state pointing along d in the
/// spin-(N/2) S_z eigenbasis, ordered ascending in m (index i <-> m = i-N/2):
///   c_m = cos^(N/2+m)(theta/2) sin^(N/2-m)(theta/2) e^{+i(N/2-m)phi}
///         sqrt(binom(N, N/2-m)).
/// Equals the symmetric-subspace coordinates of su2_rotation(d)^(x N)
/// applied to |up_z>^(x N); unit norm.
Vector spin_coherent_expansion(int spins, const Direction& d);

/// Symmetric coherent coefficients of an arbitrary spinor (a|up> + b|down>)
/// raised to the N-th tensor power; same basis order as above.
Vector symmetric_power(int spins, Complex a, Complex b);

/// Isometry from the spin-(N/2) symmetric basis (dim N+1, ascending m)
/// into the N-qubit product space (dim 2^N).
Matrix symmetric_embedding(int spins);

double binomial(int n, int k);

}  // namespace prepost
