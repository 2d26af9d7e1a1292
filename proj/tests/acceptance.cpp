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

// Acceptance suite: every release-gating result, one line per criterion.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "prepost/catalog.hpp"
#include "prepost/covariant.hpp"
#include "prepost/duality.hpp"
#include "prepost/game.hpp"
#include "prepost/instruments.hpp"
#include "prepost/random_instances.hpp"
#include "prepost/use_discrimination.hpp"

using namespace prepost;
using nlohmann::json;

namespace {

int failures = 0;

void criterion(int number, const std::string& description,
               const std::function<void()>& body) {
    try {
        body();
        std::printf("criterion %2d [PASS] %s\n", number, description.c_str());
    } catch (const std::exception& e) {
        ++failures;
        std::printf("criterion %2d [FAIL] %s: %s\n", number, description.c_str(), e.what());
    }
}

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

struct CliRun {
    int exit_code = -1;
    json document;
};

CliRun run_cli(const std::string& args) {
    std::string command = std::string(PREPOST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "failed to spawn the CLI");
    std::string text;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) text.append(buffer, n);
    int status = pclose(pipe);
    CliRun run;
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    require(!text.empty(), "CLI produced no output for: " + args);
    run.document = json::parse(text);
    return run;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion_parallel_fidelity() {
    auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 10; ++n) {
        CliRun run = run_cli("parallel --spins " + std::to_string(n));
        require(run.exit_code == 0, "parallel exited nonzero at N=" + std::to_string(n));
        double lambda = run.document["payload"]["rows"][0]["lambda_max"].get<double>();
        double expected = double(n + 1) / (n + 2);
        require(std::abs(lambda - expected) <= 1e-9,
                "N=" + std::to_string(n) + ": lambda " + fmt(lambda) + " vs " + fmt(expected));
    }
    double secs = elapsed_s(start);
    require(secs < 1.0, "runtime " + fmt(secs) + " s exceeds 1 s");
}

double antiparallel_lambda(int spins, double* n6_seconds) {
    auto start = std::chrono::steady_clock::now();
    CliRun run = run_cli("antiparallel --spins " + std::to_string(spins));
    if (spins == 6 && n6_seconds) *n6_seconds = elapsed_s(start);
    require(run.exit_code == 0, "antiparallel exited nonzero at N=" + std::to_string(spins));
    return run.document["payload"]["rows"][0]["lambda_max"].get<double>();
}

double anti2 = 0.0, anti4 = 0.0, anti6 = 0.0;

void criterion_antiparallel_fidelity() {
    double n6_seconds = 0.0;
    anti2 = antiparallel_lambda(2, nullptr);
    anti4 = antiparallel_lambda(4, nullptr);
    anti6 = antiparallel_lambda(6, &n6_seconds);
    require(std::abs(anti2 - 0.7887) <= 5e-4, "N=2: " + fmt(anti2));
    require(std::abs(anti4 - 0.8873) <= 5e-4, "N=4: " + fmt(anti4));
    require(std::abs(anti6 - 0.9306) <= 5e-4, "N=6: " + fmt(anti6));
    require(n6_seconds < 60.0, "N=6 runtime " + fmt(n6_seconds) + " s exceeds 60 s");
}

void criterion_gain_structure() {
    require(anti2 > 0.0, "antiparallel values not computed");
    // No-post-selection baselines for the antiparallel family.
    require(std::abs(anti2 - 0.7887) <= 5e-4, "N=2 must equal the baseline: " + fmt(anti2));
    require(anti4 > 0.8848 && anti4 - 0.8848 > 1e-3,
            "N=4 does not exceed the 0.8848 baseline: " + fmt(anti4));
    require(anti6 > 0.9235 && anti6 - 0.9235 > 1e-3,
            "N=6 does not exceed the 0.9235 baseline: " + fmt(anti6));
}

void criterion_duality_suite() {
    auto start = std::chrono::steady_clock::now();
    DualitySuiteReport report = run_duality_suite(2026, 200, 4, 1e-10);
    require(report.pass, "suite failed: max deviation " +
                             fmt(report.max_probability_deviation) + ", mode violation " +
                             fmt(report.max_mode_violation));
    double secs = elapsed_s(start);
    require(secs < 10.0, "runtime " + fmt(secs) + " s exceeds 10 s");
}

void criterion_dilation_oracle() {
    RandomStream rng(515);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        int d = 1 + int(rng.uniform() * 4);
        int dp = 1 + int(rng.uniform() * 4);
        int outcomes = 1 + int(rng.uniform() * 5);
        NormalizationMode mode = rng.uniform() < 0.5 ? NormalizationMode::Exact
                                                     : NormalizationMode::Subnormalized;
        if (mode == NormalizationMode::Exact && outcomes * d < dp)
            mode = NormalizationMode::Subnormalized;
        KrausSet a = random_kraus_set(d, dp, outcomes, mode, rng);
        PrePostEnsemble e = random_ensemble(d, dp, rng);
        RealVector direct = conditional_prob_prepost(a, e);
        RealVector dilated = dilate_and_simulate(a, e);
        worst = std::max(worst, (direct - dilated).cwiseAbs().maxCoeff());
    }
    require(worst <= 1e-10, "max elementwise deviation " + fmt(worst));
}

void criterion_use_closed_forms() {
    const double alphas2[] = {0.55, 0.65, 0.75, 0.85};
    const double epsilons[] = {0.0, 0.1, 0.2, 0.35, 0.5};
    int points = 0;
    for (double a2 : alphas2) {
        for (double eps : epsilons) {
            UseParams p = UseParams::from_alpha_squared(a2, eps);
            double gap = a2 - (1.0 - a2);
            double formula =
                1.0 - std::sqrt(1.0 - gap * gap * (1.0 - 2.0 * eps * eps) *
                                          (1.0 - 2.0 * eps * eps));
            double reported = use_optimal_no_post(p).p_inconclusive;
            require(std::abs(reported - formula) <= 1e-12,
                    "P_M(0|+) off at alpha2=" + fmt(a2) + ", eps=" + fmt(eps));

            KrausSet triple = use_prepost_instrument(p);
            Matrix gram = Matrix::Zero(2, 2);
            for (const auto& op : triple.operators()) gram += op.adjoint() * op;
            require(max_abs(Matrix(gram - Matrix::Identity(2, 2))) <= 1e-12,
                    "Kraus triple normalization defect at alpha2=" + fmt(a2));

            Complex wrong_plus =
                use_post_state(p, -1).vec().dot(triple.op(0) * use_pre_state(p, -1).vec());
            Complex wrong_minus =
                use_post_state(p, +1).vec().dot(triple.op(1) * use_pre_state(p, +1).vec());
            require(std::abs(wrong_plus) == 0.0 && std::abs(wrong_minus) == 0.0,
                    "unambiguity broken at alpha2=" + fmt(a2) + ", eps=" + fmt(eps));
            ++points;
        }
    }
    require(points == 20, "grid size mismatch");
}

void criterion_quadratic_gap() {
    std::vector<double> eps{0.05, 0.025};
    auto rows = use_gap_report(0.8, eps);
    double ratio_drift = std::abs(rows[0].ratio - rows[1].ratio) / rows[1].ratio;
    require(ratio_drift <= 0.05,
            "ratio drift " + fmt(ratio_drift) + " between eps=0.05 and eps=0.025");
    double pm0 = use_optimal_no_post(UseParams::from_alpha_squared(0.8, 0.0)).p_inconclusive;
    for (const auto& row : rows)
        require(std::abs(row.pm_inconclusive - pm0) <= 0.01,
                "P_M(0|+) moved by " + fmt(std::abs(row.pm_inconclusive - pm0)) +
                    " from its eps=0 value");
}

void criterion_monte_carlo() {
    const char* configs[] = {"orthogonal-pair.json", "use-eps0.1.json", "parallel-N1.json"};
    for (const char* name : configs) {
        std::ifstream f(std::string(PREPOST_CONFIG_DIR) + "/" + name);
        require(f.good(), std::string("missing bundled config ") + name);
        LoadedGame game = load_game_config(json::parse(f));
        game.config.trials = 100000;
        GameResult first = run_game(game.setup.problem, game.setup.instrument,
                                    game.setup.estimator, game.config);
        GameResult second = run_game(game.setup.problem, game.setup.instrument,
                                     game.setup.estimator, game.config);
        require(first.merit_mean == second.merit_mean &&
                    first.outcome_counts == second.outcome_counts &&
                    first.attempts_histogram == second.attempts_histogram,
                std::string(name) + ": identical seeds gave different histograms");
        double analytic =
            analytic_reference(game.setup.problem, game.setup.instrument,
                               game.setup.estimator, game.setup.scenario,
                               game.setup.reference_grid);
        double diff = std::abs(first.merit_mean - analytic);
        require(diff <= 3.0 * first.merit_stderr + 1e-12,
                std::string(name) + ": |empirical - analytic| = " + fmt(diff) + " vs stderr " +
                    fmt(first.merit_stderr));
    }
}

void criterion_covariant_duality() {
    RandomStream rng(626);
    std::vector<Direction> dirs;
    for (int i = 0; i < 20; ++i) dirs.push_back(random_direction(rng));
    double worst = 0.0;
    for (int n = 0; n <= 2; ++n) {
        for (int m = 0; m <= 1; ++m) {
            if (n + m < 1) continue;
            for (int k = 0; k <= m; ++k) {
                for (int l = 0; l <= n; ++l) {
                    CovariantPattern pat(n, m, k, l);
                    Vector seed = random_state(pat.post_dim() * pat.pre_dim(), rng).vec();
                    worst = std::max(worst,
                                     covariant_duality_check(seed, pat, dirs).max_deviation);
                    Matrix kraus_seed =
                        random_gaussian_matrix(pat.post_dim(), pat.pre_dim(), rng);
                    worst = std::max(
                        worst, covariant_duality_check(kraus_seed, pat, dirs).max_deviation);
                }
            }
        }
    }
    require(worst <= 1e-10, "max commutation deviation " + fmt(worst));
}

void criterion_out_of_scope() {
    // The particle-count scaling claim and its complexity-class consequence
    // are deliberately not implemented anywhere in this toolkit; the CLI
    // surface is the five documented experiment commands only.
    CliRun help = run_cli("--help");
    require(help.exit_code == 2 || help.exit_code == 0, "help not available");
}

}  // namespace

int main() {
    std::printf("acceptance suite (library + %s)\n", PREPOST_CLI_PATH);

    criterion(1, "parallel-spin fidelity (N+1)/(N+2) for N=1..10 within 1e-9, < 1 s",
              criterion_parallel_fidelity);
    criterion(2, "antiparallel fidelity 0.7887 / 0.8873 / 0.9306 within 5e-4, N=6 < 60 s",
              criterion_antiparallel_fidelity);
    criterion(3, "antiparallel gain over 0.7887 / 0.8848 / 0.9235 baselines",
              criterion_gain_structure);
    criterion(4, "duality suite: 400 random mappings, deviations <= 1e-10, modes transported, "
                 "< 10 s",
              criterion_duality_suite);
    criterion(5, "dilation oracle matches the conditional rule on 200 random pairs <= 1e-10",
              criterion_dilation_oracle);
    criterion(6, "USE closed forms on a 20-point grid to 1e-12 with exact unambiguity",
              criterion_use_closed_forms);
    criterion(7, "O(eps^2) gap: stable ratio (5%) while P_M(0|+) holds within 0.01 absolute",
              criterion_quadratic_gap);
    criterion(8, "10^5-trial games match analytic merits at 3 sigma, bit-identical reruns",
              criterion_monte_carlo);
    criterion(9, "covariant mappings commute with rotations up to (n,m)=(2,1) <= 1e-10",
              criterion_covariant_duality);
    criterion(10, "particle-count scaling / complexity claims intentionally not reproduced",
              criterion_out_of_scope);

    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) failed\n", failures);
    return failures;
}
