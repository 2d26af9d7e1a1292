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

#include "prepost/use_discrimination.hpp"

#include <cmath>

#include "prepost/errors.hpp"
#include "prepost/tolerances.hpp"

namespace prepost {

UseParams::UseParams(double alpha, double beta, double epsilon)
    : alpha(alpha), beta(beta), epsilon(epsilon) {
    if (!(alpha > beta && beta > 0.0))
        throw ValidationError("UseParams: requires alpha > beta > 0");
    if (std::abs(alpha * alpha + beta * beta - 1.0) > tol::kStateNorm)
        throw ValidationError("UseParams: alpha^2 + beta^2 must be 1");
    if (!(epsilon >= 0.0 && epsilon < 1.0))
        throw ValidationError("UseParams: epsilon must lie in [0, 1)");
}

UseParams UseParams::from_alpha_squared(double alpha_squared, double epsilon) {
    if (!(alpha_squared > 0.5 && alpha_squared < 1.0))
        throw ValidationError("UseParams: alpha^2 must lie in (0.5, 1)");
    return UseParams(std::sqrt(alpha_squared), std::sqrt(1.0 - alpha_squared), epsilon);
}

QuantumState use_pre_state(const UseParams& p, int sign) {
    double s = sign >= 0 ? 1.0 : -1.0;
    return QuantumState{Complex(p.alpha), Complex(s * p.beta)};
}

QuantumState use_post_state(const UseParams& p, int sign) {
    double s = sign >= 0 ? 1.0 : -1.0;
    return QuantumState{Complex(std::sqrt(1.0 - p.epsilon * p.epsilon)),
                        Complex(s * p.epsilon)};
}

UseNoPostResult use_optimal_no_post(const UseParams& p) {
    double overlap = (p.alpha * p.alpha - p.beta * p.beta) *
                     (1.0 - 2.0 * p.epsilon * p.epsilon);
    double p_success = std::sqrt(1.0 - overlap * overlap);
    return UseNoPostResult{p_success, 1.0 - p_success};
}

KrausSet use_prepost_instrument(const UseParams& p) {
    // |psi_+-^perp> = beta|0> -+ alpha|1>.
    Vector perp_minus(2), perp_plus(2), zero(2), one(2);
    perp_minus << p.beta, p.alpha;
    perp_plus << p.beta, -p.alpha;
    zero << 1.0, 0.0;
    one << 0.0, 1.0;
    double inv = 1.0 / std::sqrt(2.0 * p.alpha * p.alpha);
    double dump = std::sqrt(1.0 - p.beta * p.beta / (p.alpha * p.alpha));
    std::vector<Matrix> ops;
    ops.emplace_back(inv * zero * perp_minus.adjoint());  // A_+
    ops.emplace_back(inv * zero * perp_plus.adjoint());   // A_-
    ops.emplace_back(dump * one * zero.adjoint());        // A_0
    return KrausSet(std::move(ops), NormalizationMode::Exact);
}

double use_prepost_inconclusive(const UseParams& p) {
    double e2 = p.epsilon * p.epsilon;
    double gap = p.alpha * p.alpha - p.beta * p.beta;
    double num = e2 * gap;
    return num / (num + 2.0 * p.beta * p.beta * (1.0 - e2));
}

double use_gap_ratio_limit(const UseParams& p) {
    double gap = p.alpha * p.alpha - p.beta * p.beta;
    return gap / (2.0 * p.beta * p.beta);
}

std::vector<UseGapRow> use_gap_report(double alpha_squared, std::span<const double> epsilons) {
    std::vector<UseGapRow> rows;
    rows.reserve(epsilons.size());
    for (double eps : epsilons) {
        UseParams p = UseParams::from_alpha_squared(alpha_squared, eps);
        UseGapRow row;
        row.epsilon = eps;
        row.pm_inconclusive = use_optimal_no_post(p).p_inconclusive;
        row.pa_inconclusive = use_prepost_inconclusive(p);
        row.ratio = eps > 0.0 ? row.pa_inconclusive / (eps * eps) : use_gap_ratio_limit(p);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace prepost
