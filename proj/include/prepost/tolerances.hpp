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

namespace prepost::tol {

// State norms at construction.
inline constexpr double kStateNorm = 1e-12;

// Hermiticity defect accepted for symmetrization on ingestion; larger defects
// are rejected.
inline constexpr double kHermitian = 1e-10;

// Positive semidefiniteness: smallest eigenvalue may dip this far below zero.
inline constexpr double kPsd = 1e-10;

// Completeness of instruments (sum to identity / bounded by identity).
inline constexpr double kCompleteness = 1e-10;

// Derived equalities between independently computed quantities.
inline constexpr double kDerived = 1e-10;

// Denominator threshold below which a conditional rule has zero acceptance.
inline constexpr double kZeroAcceptance = 1e-14;

// Eigenvalue cutoff (relative to the largest) for dropping numerical-noise
// ranks when refining POVMs or detecting rank one.
inline constexpr double kRankCutoff = 1e-12;

// Relative cutoff for restricting a generalized eigenproblem to range(D).
inline constexpr double kRangeCutoff = 1e-10;

}  // namespace prepost::tol
