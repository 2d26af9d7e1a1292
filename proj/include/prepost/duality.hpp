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

#include <span>

#include "prepost/instruments.hpp"
#include "prepost/state.hpp"

namespace prepost {

/// Factorization H^{post_dim} (x) H^{pre_dim} used by the mappings. The
/// conjugation basis is the computational basis of the post factor, fixed
/// globally. Vectorization is row index alpha (post side), column index
/// beta (pre side): m^k_{ab} = <m_k| (|a> (x) |b>).
struct DualityInstance {
    int post_dim;  // d,  dimension of <phi|
    int pre_dim;   // d', dimension of |psi>

    DualityInstance(int post_dim, int pre_dim);
};

/// Rank-one POVM on H^d (x) H^d' -> Kraus set H^d' -> H^d via
/// A^k_{ab} = m^k_{ab} / sqrt(d). Probabilities transport as
/// P_A(k | phi, psi) = P_M(k | conj(phi) (x) psi) for every ensemble, and the
/// normalization mode transports Exact -> Exact, Subnormalized -> Subnormalized.
KrausSet povm_to_kraus(const Povm& p, const DualityInstance& inst);

struct KrausToPovmResult {
    Povm povm;  // rank-one elements, Subnormalized
    double c;   // the scale in m^k_{ab} = c A^k_{ab}; probabilities are c-invariant
};

/// Kraus set -> rank-one POVM via m^k_{ab} = c A^k_{ab} with the largest
/// admissible c = 1/sqrt(lambda_max(sum_k |a_k><a_k|)) over the vectorized
/// operators, so sum_k M_k <= 1 holds tightly.
KrausToPovmResult kraus_to_povm(const KrausSet& a, const DualityInstance& inst);

/// Spin pattern of the covariant families: a POVM seed lives on n + m spins
/// (n rotating as U, m as conj(U)); the matching Kraus seed maps
/// (n-l) + (m-k) input spins to k + l output spins.
struct CovariantPattern {
    int n, m, k, l;

    CovariantPattern(int n, int m, int k, int l);

    int post_dim() const { return 1 << (k + l); }
    int pre_dim() const { return 1 << ((n - l) + (m - k)); }
};

struct CommutationReport {
    double max_deviation = 0.0;
    int directions_checked = 0;
};

/// Checks that mapping a covariant POVM seed to a Kraus operator commutes
/// with rotating the family: rotate-then-map equals map-then-rotate at each
/// direction.
CommutationReport covariant_duality_check(const Vector& povm_seed, const CovariantPattern& pat,
                                          std::span<const Direction> directions);

/// Same check in the Kraus -> POVM direction.
CommutationReport covariant_duality_check(const Matrix& kraus_seed, const CovariantPattern& pat,
                                          std::span<const Direction> directions);

struct EquivalenceReport {
    double max_deviation = 0.0;
};

/// Verifies the entangled-post-selection realization: outcome probabilities
/// over <phi||psi> with operators A_k equal those over the pre-selected
/// product conj(phi) (x) psi post-selected on the maximally entangled
/// functional, with operators 1 (x) A_k. Requires post and pre dimensions to
/// match the square operators.
EquivalenceReport aptv_equivalence(const PrePostEnsemble& e, const KrausSet& a);

struct DualitySuiteReport {
    int instances = 0;
    double max_probability_deviation = 0.0;
    double max_mode_violation = 0.0;  // PSD defect of 1 - sum over mapped sets
    bool pass = false;
    double tolerance = 0.0;
};

/// Random-instance property suite for the mappings: subnormalized rank-one
/// POVMs one way, subnormalized Kraus sets the other, exact rank-one POVMs
/// for the normalized transport, each checked on a random ensemble plus a
/// probability round trip. fault_scale != 1 multiplies one mapped operator
/// (negative control).
DualitySuiteReport run_duality_suite(std::uint64_t seed, int instances, int max_dim,
                                     double tolerance = 1e-10, double fault_scale = 1.0);

}  // namespace prepost
