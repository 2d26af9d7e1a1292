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

#include "prepost/game.hpp"

#include <cmath>
#include <thread>

#include "prepost/errors.hpp"

namespace prepost {

namespace {

constexpr std::int64_t kChunk = 4096;  // fixed chunk size keeps merges deterministic

struct ChunkStats {
    double merit_sum = 0.0;
    double merit_sumsq = 0.0;
    std::int64_t attempts_sum = 0;
    std::vector<std::int64_t> outcome_counts;
    std::vector<std::int64_t> pre_gate_counts;
    std::vector<std::int64_t> attempts_histogram;
    bool failed = false;
    Theta failed_theta;

    void bump(std::vector<std::int64_t>& hist, std::size_t index) {
        if (hist.size() <= index) hist.resize(index + 1, 0);
        ++hist[index];
    }
};

struct TrialOutcome {
    int k = 0;
    std::int64_t attempts = 0;
};

class GameRunner {
  public:
    GameRunner(const EstimationProblem& problem, const Instrument& instrument,
               const GameConfig& config)
        : problem_(problem), config_(config) {
        switch (config.scenario) {
            case Scenario::PreOnly:
            case Scenario::FixedPost: {
                povm_ = std::get_if<Povm>(&instrument);
                if (!povm_) throw ValidationError("run_game: scenario requires a POVM");
                if (config.scenario == Scenario::PreOnly &&
                    povm_->mode() != NormalizationMode::Exact)
                    throw ValidationError("run_game: PreOnly requires an Exact POVM");
                outcomes_ = povm_->size();
                break;
            }
            case Scenario::PrePost: {
                kraus_ = std::get_if<KrausSet>(&instrument);
                if (!kraus_) throw ValidationError("run_game: PrePost requires a Kraus set");
                if (!problem_.encode_post)
                    throw ValidationError("run_game: PrePost requires a post encoder");
                outcomes_ = kraus_->size();
                break;
            }
        }
    }

    int outcomes() const { return outcomes_; }

    TrialOutcome run_trial(const Theta& theta, RandomStream& rng, ChunkStats& stats) const {
        // Exact instruments never reject; clamping the last branch keeps the
        // Exact/Subnormalized sampling paths draw-for-draw identical.
        const bool exact = povm_ ? povm_->mode() == NormalizationMode::Exact
                                 : kraus_->mode() == NormalizationMode::Exact;
        QuantumState pre = problem_.encode_pre(theta);
        std::vector<double> weights(outcomes_);
        std::vector<Vector> branches;

        if (povm_) {
            for (int k = 0; k < outcomes_; ++k)
                weights[k] = std::real(pre.vec().dot(povm_->element(k) * pre.vec()));
        } else {
            branches.reserve(outcomes_);
            for (int k = 0; k < outcomes_; ++k) {
                branches.push_back(kraus_->op(k) * pre.vec());
                weights[k] = branches.back().squaredNorm();
            }
        }

        Vector post;
        if (config_.scenario == Scenario::PrePost)
            post = problem_.encode_post(theta).vec();

        for (std::int64_t attempt = 1; attempt <= config_.max_retries; ++attempt) {
            int k = rng.sample(weights);
            if (k < 0) {
                if (!exact) continue;  // dumped into the failed fixed post-selection
                k = outcomes_ - 1;     // roundoff residue on an exact instrument
            }
            stats.bump(stats.pre_gate_counts, static_cast<std::size_t>(k));
            if (config_.scenario == Scenario::PrePost) {
                // Two-outcome projective check {|psi_f><psi_f|, 1 - ...} on the
                // post-measurement state of the sampled branch.
                double norm2 = weights[k];
                if (norm2 <= 0.0) continue;
                double accept = std::norm(post.dot(branches[k])) / norm2;
                if (rng.uniform() >= accept) continue;
            }
            return TrialOutcome{k, attempt};
        }
        throw RetryExhaustedError("run_game: max_retries exhausted", theta);
    }

  private:
    const EstimationProblem& problem_;
    const GameConfig& config_;
    const Povm* povm_ = nullptr;
    const KrausSet* kraus_ = nullptr;
    int outcomes_ = 0;
};

}  // namespace

GameResult run_game(const EstimationProblem& problem, const Instrument& instrument,
                    const Estimator& estimate, const GameConfig& config) {
    if (config.trials < 1) throw ValidationError("run_game: trials must be >= 1");
    if (config.max_retries < 1) throw ValidationError("run_game: max_retries must be >= 1");
    GameRunner runner(problem, instrument, config);

    const std::int64_t n_chunks = (config.trials + kChunk - 1) / kChunk;
    std::vector<ChunkStats> chunks(static_cast<std::size_t>(n_chunks));

    auto run_chunk = [&](std::int64_t chunk_index) {
        ChunkStats& stats = chunks[static_cast<std::size_t>(chunk_index)];
        const std::int64_t begin = chunk_index * kChunk;
        const std::int64_t end = std::min(begin + kChunk, config.trials);
        for (std::int64_t trial = begin; trial < end; ++trial) {
            RandomStream rng =
                RandomStream::substream(config.seed, static_cast<std::uint64_t>(trial));
            Theta theta = problem.sample_theta(rng);
            TrialOutcome outcome;
            try {
                outcome = runner.run_trial(theta, rng, stats);
            } catch (const RetryExhaustedError&) {
                stats.failed = true;
                stats.failed_theta = theta;
                return;
            }
            double f = problem.merit(theta, estimate(outcome.k));
            stats.merit_sum += f;
            stats.merit_sumsq += f * f;
            stats.attempts_sum += outcome.attempts;
            stats.bump(stats.outcome_counts, static_cast<std::size_t>(outcome.k));
            stats.bump(stats.attempts_histogram, static_cast<std::size_t>(outcome.attempts - 1));
        }
    };

    const int threads = std::max(1, config.threads);
    if (threads == 1 || n_chunks == 1) {
        for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::int64_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::int64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    // Merge in chunk order; the reduction tree is fixed, so the result is
    // bit-identical for any thread count.
    GameResult result;
    result.trials = config.trials;
    result.outcome_counts.assign(static_cast<std::size_t>(runner.outcomes()), 0);
    result.pre_gate_outcome_counts.assign(static_cast<std::size_t>(runner.outcomes()), 0);
    double sum = 0.0, sumsq = 0.0;
    std::int64_t attempts = 0;
    for (const auto& stats : chunks) {
        if (stats.failed)
            throw RetryExhaustedError("run_game: max_retries exhausted", stats.failed_theta);
        sum += stats.merit_sum;
        sumsq += stats.merit_sumsq;
        attempts += stats.attempts_sum;
        for (std::size_t k = 0; k < stats.outcome_counts.size(); ++k)
            result.outcome_counts[k] += stats.outcome_counts[k];
        for (std::size_t k = 0; k < stats.pre_gate_counts.size(); ++k)
            result.pre_gate_outcome_counts[k] += stats.pre_gate_counts[k];
        if (stats.attempts_histogram.size() > result.attempts_histogram.size())
            result.attempts_histogram.resize(stats.attempts_histogram.size(), 0);
        for (std::size_t a = 0; a < stats.attempts_histogram.size(); ++a)
            result.attempts_histogram[a] += stats.attempts_histogram[a];
    }
    const double n = static_cast<double>(config.trials);
    result.merit_mean = sum / n;
    double variance = config.trials > 1
                          ? std::max(0.0, (sumsq - n * result.merit_mean * result.merit_mean) /
                                              (n - 1.0))
                          : 0.0;
    result.merit_stderr = std::sqrt(variance / n);
    result.mean_attempts = static_cast<double>(attempts) / n;
    return result;
}

double analytic_reference(const EstimationProblem& problem, const Instrument& instrument,
                          const Estimator& estimate, Scenario scenario, const ThetaGrid& grid) {
    return average_merit(problem, instrument, estimate, scenario, grid);
}

}  // namespace prepost
