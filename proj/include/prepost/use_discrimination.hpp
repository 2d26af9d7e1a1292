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
#include <vector>

#include "prepost/instruments.hpp"
#include "prepost/state.hpp"

namespace prepost {

/// Unambiguous discrimination between the product pairs
/// |psi_+>|phi_+> vs |psi_->|phi_-> (no post-selection) and the ensembles
/// <phi_+||psi_+> vs <phi_-||psi_-> (information from the future), with
/// psi_+- = alpha|0> +- beta|1> and phi_+- = sqrt(1-eps^2)|0> +- eps|1>.
struct UseParams {
    double alpha;
    double beta;
    double epsilon;

    UseParams(double alpha, double beta, double epsilon);
    static UseParams from_alpha_squared(double alpha_squared, double epsilon);
};

QuantumState use_pre_state(const UseParams& p, int sign);   // |psi_+->
QuantumState use_post_state(const UseParams& p, int sign);  // |phi_+->

struct UseNoPostResult {
    double p_success;       // P_M(+|+) = P_M(-|-)
    double p_inconclusive;  // P_M(0|+) = P_M(0|-)
};

/// Optimal no-post-selection unambiguous discrimination of the product pair:
/// P_success = sqrt(1 - (alpha^2-beta^2)^2 (1-2 eps^2)^2).
UseNoPostResult use_optimal_no_post(const UseParams& p);

/// The three-outcome Kraus instrument {A_+, A_-, A_0} with
/// A_+ = |0><psi_-^perp| / sqrt(2 alpha^2), A_- = |0><psi_+^perp| / sqrt(2 alpha^2),
/// A_0 = |1><0| sqrt(1 - beta^2/alpha^2); Exact normalization. Outcome order
/// is (+, -, 0).
KrausSet use_prepost_instrument(const UseParams& p);

/// Closed form for the inconclusive rate of the instrument above on the
/// matching ensemble: P_A(0|+) = P_A(0|-) =
/// eps^2 (alpha^2-beta^2) / (eps^2 (alpha^2-beta^2) + 2 beta^2 (1-eps^2)).
double use_prepost_inconclusive(const UseParams& p);

// Limit of P_A(0|+)/eps^2 as eps -> 0.
double use_gap_ratio_limit(const UseParams& p);

struct UseGapRow {
    double epsilon;
    double pm_inconclusive;  // no-post-selection closed form
    double pa_inconclusive;  // pre/post instrument closed form
    double ratio;            // pa_inconclusive / eps^2 (the eps->0 limit at eps = 0)
};

std::vector<UseGapRow> use_gap_report(double alpha_squared, std::span<const double> epsilons);

}  // namespace prepost
