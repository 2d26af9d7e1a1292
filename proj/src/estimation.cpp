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

#include "prepost/estimation.hpp"

#include "prepost/errors.hpp"

namespace prepost {

RealVector outcome_distribution(const EstimationProblem& problem, const Instrument& instrument,
                                Scenario scenario, const Theta& theta) {
    QuantumState pre = problem.encode_pre(theta);
    switch (scenario) {
        case Scenario::PreOnly: {
            const auto* povm = std::get_if<Povm>(&instrument);
            if (!povm) throw ValidationError("PreOnly scenario requires a POVM");
            return born_probability(*povm, pre);
        }
        case Scenario::FixedPost: {
            const auto* povm = std::get_if<Povm>(&instrument);
            if (!povm) throw ValidationError("FixedPost scenario requires a POVM");
            return conditional_prob_fixed_post(*povm, pre);
        }
        case Scenario::PrePost: {
            const auto* kraus = std::get_if<KrausSet>(&instrument);
            if (!kraus) throw ValidationError("PrePost scenario requires a Kraus set");
            if (!problem.encode_post)
                throw ValidationError("PrePost scenario requires a post encoder");
            PrePostEnsemble ensemble(pre, problem.encode_post(theta));
            return conditional_prob_prepost(*kraus, ensemble);
        }
    }
    throw ValidationError("outcome_distribution: unknown scenario");
}

double average_merit(const EstimationProblem& problem, const Instrument& instrument,
                     const Estimator& estimate, Scenario scenario, const ThetaGrid& grid) {
    if (grid.points.size() != grid.weights.size() || grid.points.empty())
        throw ValidationError("average_merit: malformed theta grid");
    double value = 0.0;
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        const Theta& theta = grid.points[i];
        RealVector dist;
        try {
            dist = outcome_distribution(problem, instrument, scenario, theta);
        } catch (const ZeroAcceptanceError& err) {
            throw ZeroAcceptanceError(err.what(), theta);
        }
        double conditional = 0.0;
        for (int k = 0; k < dist.size(); ++k)
            conditional += dist(k) * problem.merit(theta, estimate(k));
        value += grid.weights[i] * conditional;
    }
    return value;
}

}  // namespace prepost
