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

#include <array>

#include "prepost/linalg.hpp"

namespace prepost {

enum class SpinPattern { Parallel, Antiparallel };
enum class Representation { Symmetric, Full };

/// Direction estimation with covariant measurements: the seed state is
/// either N parallel spins or N/2 up + N/2 down (N even), optimized over
/// rank-one covariant POVM seeds via the C/D generalized eigenproblem.
struct CovariantProblem {
    int spins = 1;
    SpinPattern pattern = SpinPattern::Parallel;
    int quadrature_order = 0;  // nodes per Euler angle; 0 picks 2N+4 (exact)
    Representation representation = Representation::Symmetric;

    static CovariantProblem parallel(int spins, int order = 0,
                                     Representation rep = Representation::Symmetric);
    static CovariantProblem antiparallel(int spins, int order = 0);

    int order() const { return quadrature_order > 0 ? quadrature_order : 2 * spins + 4; }
    int dimension() const;
};

/// C carries the cos^2(Phi/2) fidelity weight, D the plain Haar average of
/// the rotated seed projector; the optimal covariant fidelity is the largest
/// lambda with det(C - lambda D) = 0.
struct FidelityPair {
    Matrix C;
    Matrix D;
};

/// Closed form for N parallel spins in the symmetric basis (ascending m):
/// C = diag((m + N/2 + 1) / ((N+1)(N+2))), D = 1/(N+1).
FidelityPair build_CD_parallel(int spins);

/// Euler-angle quadrature over SU(2) with Haar weight sin(beta)/(8 pi^2):
/// Gauss-Legendre in cos(beta), trapezoid in alpha and gamma. The integrands
/// are trigonometric polynomials of degree <= 2N+2, so the default order is
/// exact up to roundoff. Too low an order is not detected here; compare
/// against a doubled order (optimal_fidelity reports the delta).
FidelityPair build_CD_quadrature(const CovariantProblem& problem);

/// Same integrals for an arbitrary product-space seed state under U^(x spins),
/// with the fidelity weight cos^2(Phi/2) measured about an arbitrary axis
/// (unit vector; +z by default). Rotating seed and axis together must leave
/// the optimum unchanged, which probes the quadrature's equivariance.
FidelityPair build_CD_full_from_seed(const Vector& seed, int spins, int order,
                                     const std::array<double, 3>& axis = {0.0, 0.0, 1.0});

struct GeneralizedEigenResult {
    double lambda = 0.0;
    Vector vector;  // unit norm, lifted back to the full space
};

/// Largest lambda of C|m> = lambda D|m> for PSD D: restricts to range(D)
/// (relative cutoff tol::kRangeCutoff), whitens, and solves the symmetric
/// problem. Throws SingularMatrixError when D is numerically zero.
GeneralizedEigenResult max_generalized_eigen(const FidelityPair& pair);

struct ConvergenceReport {
    int order = 0;
    int doubled_order = 0;
    double lambda_delta = 0.0;
    double entry_delta = 0.0;  // max |C,D entry change| when doubling the order
};

struct OptimalFidelityResult {
    double fidelity = 0.0;
    Vector seed;  // optimal rank-one POVM seed at guess +z
    ConvergenceReport convergence;
    // Largest c with c^2 * avg_U U|seed><seed|U^dag <= 1; the ratio objective
    // is scale invariant, so this never changes the fidelity.
    double seed_scale = 0.0;
};

OptimalFidelityResult optimal_fidelity(const CovariantProblem& problem);

/// Haar average of U|seed><seed|U^dag over the problem's rotation family
/// (Schur shortcut in the irreducible symmetric representation).
Matrix haar_average_projector(const CovariantProblem& problem, const Vector& seed);

double covariant_seed_scale(const CovariantProblem& problem, const Vector& seed);

}  // namespace prepost
