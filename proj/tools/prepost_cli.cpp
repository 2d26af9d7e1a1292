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

// Command-line front end: every experiment of the toolkit as a subcommand,
// emitting versioned result documents (JSON or CSV).
//
// Exit codes: 0 success, 2 validation error, 3 tolerance/acceptance failure,
// 4 runtime failure (zero acceptance, retries exhausted, singular matrices).

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prepost/catalog.hpp"
#include "prepost/covariant.hpp"
#include "prepost/duality.hpp"
#include "prepost/errors.hpp"
#include "prepost/game.hpp"
#include "prepost/report.hpp"
#include "prepost/use_discrimination.hpp"
#include "prepost/version.hpp"

namespace {

using nlohmann::json;
using namespace prepost;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitRuntime = 4;

struct OutputOptions {
    std::string format = "json";
    std::string file;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", out.file, "Write the document to a file instead of stdout");
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back({v(i).real(), v(i).imag()});
    return out;
}

class Timer {
  public:
    double elapsed_ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const RunManifest& manifest, json payload, const OutputOptions& out) {
    json doc = result_document(manifest, std::move(payload));
    std::string text =
        out.format == "csv" ? payload_csv(doc["payload"]) : doc.dump(2) + "\n";
    if (out.file.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.file);
        if (!f) throw ValidationError("cannot open output file '" + out.file + "'");
        f << text;
    }
}

int run_parallel(int spins, int quadrature_order, double tolerance, const OutputOptions& out) {
    if (spins < 1 || spins > 12)
        throw ValidationError("parallel: spins must lie in [1, 12]");
    Timer timer;
    double analytic = double(spins + 1) / (spins + 2);
    json details;
    double lambda = 0.0;
    Vector seed;
    if (quadrature_order > 0) {
        CovariantProblem problem = CovariantProblem::parallel(spins, quadrature_order);
        OptimalFidelityResult res = optimal_fidelity(problem);
        lambda = res.fidelity;
        seed = res.seed;
        details["convergence"] = {{"order", res.convergence.order},
                                  {"doubled_order", res.convergence.doubled_order},
                                  {"lambda_delta", res.convergence.lambda_delta},
                                  {"entry_delta", res.convergence.entry_delta}};
        details["seed_scale"] = res.seed_scale;
    } else {
        GeneralizedEigenResult res = max_generalized_eigen(build_CD_parallel(spins));
        lambda = res.lambda;
        seed = res.vector;
        CovariantProblem problem = CovariantProblem::parallel(spins);
        details["seed_scale"] = covariant_seed_scale(problem, seed);
    }
    details["seed_vector"] = vector_json(seed);
    double difference = std::abs(lambda - analytic);

    RunManifest manifest{"parallel",
                         {{"spins", spins}, {"quadrature_order", quadrature_order},
                          {"tolerance", tolerance}},
                         0,
                         kVersion,
                         0.0};
    json payload;
    payload["rows"] = json::array({{{"spins", spins},
                                    {"lambda_max", lambda},
                                    {"analytic", analytic},
                                    {"difference", difference}}});
    payload["details"] = details;
    manifest.duration_ms = timer.elapsed_ms();
    emit(manifest, payload, out);
    if (difference > tolerance) {
        std::cerr << "parallel: |lambda - analytic| = " << difference << " exceeds tolerance "
                  << tolerance << "\n";
        return kExitTolerance;
    }
    return kExitOk;
}

int run_antiparallel(int spins, int quadrature_order, double tolerance,
                     const OutputOptions& out) {
    if (spins < 2 || spins % 2 != 0)
        throw ValidationError("antiparallel: spins must be even and >= 2");
    if (spins > 6)
        std::cerr << "antiparallel: spins = " << spins
                  << " runs in the full 2^N space; expect a long integration\n";
    Timer timer;
    CovariantProblem problem = CovariantProblem::antiparallel(spins, quadrature_order);
    OptimalFidelityResult res = optimal_fidelity(problem);

    RunManifest manifest{"antiparallel",
                         {{"spins", spins}, {"quadrature_order", quadrature_order},
                          {"tolerance", tolerance}},
                         0,
                         kVersion,
                         0.0};
    json payload;
    payload["rows"] = json::array({{{"spins", spins},
                                    {"lambda_max", res.fidelity},
                                    {"convergence_delta", res.convergence.lambda_delta}}});
    payload["details"] = {{"order", res.convergence.order},
                          {"doubled_order", res.convergence.doubled_order},
                          {"entry_delta", res.convergence.entry_delta},
                          {"seed_scale", res.seed_scale},
                          {"seed_vector", vector_json(res.seed)}};
    manifest.duration_ms = timer.elapsed_ms();
    emit(manifest, payload, out);
    if (res.convergence.lambda_delta > tolerance) {
        std::cerr << "antiparallel: quadrature-doubling delta "
                  << res.convergence.lambda_delta << " exceeds tolerance " << tolerance << "\n";
        return kExitTolerance;
    }
    return kExitOk;
}

int run_use(double alpha2, std::vector<double> epsilons, const OutputOptions& out) {
    if (epsilons.empty()) epsilons = {0.0, 0.1, 0.05, 0.025};
    Timer timer;
    auto rows = use_gap_report(alpha2, epsilons);
    RunManifest manifest{"use",
                         {{"alpha2", alpha2}, {"epsilons", epsilons}},
                         0,
                         kVersion,
                         0.0};
    json payload;
    payload["rows"] = json::array();
    for (const auto& row : rows) {
        UseParams p = UseParams::from_alpha_squared(alpha2, row.epsilon);
        payload["rows"].push_back({{"epsilon", row.epsilon},
                                   {"pm_success", use_optimal_no_post(p).p_success},
                                   {"pm_inconclusive", row.pm_inconclusive},
                                   {"pa_inconclusive", row.pa_inconclusive},
                                   {"ratio_pa_eps2", row.ratio}});
    }
    manifest.duration_ms = timer.elapsed_ms();
    emit(manifest, payload, out);
    return kExitOk;
}

int run_duality_suite_cmd(std::uint64_t seed, int instances, int max_dim, double tolerance,
                          bool inject_fault, const OutputOptions& out) {
    Timer timer;
    DualitySuiteReport report =
        run_duality_suite(seed, instances, max_dim, tolerance, inject_fault ? 1.01 : 1.0);
    RunManifest manifest{"duality-suite",
                         {{"instances", instances}, {"max_dim", max_dim},
                          {"tolerance", tolerance}, {"inject_fault", inject_fault}},
                         seed,
                         kVersion,
                         0.0};
    json payload;
    payload["rows"] = json::array(
        {{{"instances", report.instances},
          {"max_probability_deviation", report.max_probability_deviation},
          {"max_mode_violation", report.max_mode_violation},
          {"pass", report.pass}}});
    manifest.duration_ms = timer.elapsed_ms();
    emit(manifest, payload, out);
    if (!report.pass) {
        std::cerr << "duality-suite: max deviation " << report.max_probability_deviation
                  << " (mode violation " << report.max_mode_violation << ") exceeds tolerance "
                  << report.tolerance << "\n";
        return kExitTolerance;
    }
    return kExitOk;
}

json counts_json(const std::vector<std::int64_t>& counts) {
    json out = json::array();
    for (auto c : counts) out.push_back(c);
    return out;
}

int run_game_cmd(const std::string& config_path, std::int64_t trials_override,
                 std::int64_t seed_override, bool seed_given, double sigmas,
                 const OutputOptions& out) {
    std::ifstream f(config_path);
    if (!f) throw ValidationError("game: cannot open config file '" + config_path + "'");
    json config;
    try {
        config = json::parse(f);
    } catch (const json::parse_error& err) {
        throw ValidationError(std::string("game: config is not valid JSON: ") + err.what());
    }
    LoadedGame loaded = load_game_config(config);
    if (trials_override > 0) loaded.config.trials = trials_override;
    if (seed_given) loaded.config.seed = static_cast<std::uint64_t>(seed_override);

    Timer timer;
    GameResult result =
        run_game(loaded.setup.problem, loaded.setup.instrument, loaded.setup.estimator,
                 loaded.config);
    double analytic =
        analytic_reference(loaded.setup.problem, loaded.setup.instrument,
                           loaded.setup.estimator, loaded.setup.scenario,
                           loaded.setup.reference_grid);
    double difference = std::abs(result.merit_mean - analytic);

    RunManifest manifest{"game",
                         {{"config", loaded.echo}, {"trials", loaded.config.trials},
                          {"max_retries", loaded.config.max_retries}, {"sigmas", sigmas}},
                         loaded.config.seed,
                         kVersion,
                         0.0};
    json payload;
    payload["rows"] = json::array({{{"problem", loaded.setup.name},
                                    {"trials", loaded.config.trials},
                                    {"empirical_merit", result.merit_mean},
                                    {"merit_stderr", result.merit_stderr},
                                    {"analytic_merit", analytic},
                                    {"difference", difference},
                                    {"mean_attempts", result.mean_attempts}}});
    payload["details"] = {{"outcome_counts", counts_json(result.outcome_counts)},
                          {"pre_gate_outcome_counts",
                           counts_json(result.pre_gate_outcome_counts)},
                          {"attempts_histogram", counts_json(result.attempts_histogram)}};
    manifest.duration_ms = timer.elapsed_ms();
    emit(manifest, payload, out);
    if (sigmas > 0.0 && difference > sigmas * result.merit_stderr + 1e-12) {
        std::cerr << "game: empirical merit deviates from the analytic value by " << difference
                  << " (> " << sigmas << " standard errors)\n";
        return kExitTolerance;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Estimation toolkit for pre- and post-selected ensembles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // parallel
    int par_spins = 2, par_order = 0;
    double par_tol = 1e-9;
    OutputOptions par_out;
    auto* par = app.add_subcommand(
        "parallel", "Optimal covariant fidelity for N parallel spins (analytic C and D; "
                    "--quadrature-order switches to the numeric build)");
    par->add_option("-N,--spins", par_spins, "Number of spins (1..12)")->required();
    par->add_option("--quadrature-order", par_order, "Nodes per Euler angle (0 = analytic)");
    par->add_option("--tolerance", par_tol, "Allowed |lambda - (N+1)/(N+2)|")
        ->capture_default_str();
    add_output_options(par, par_out);

    // antiparallel
    int anti_spins = 2, anti_order = 0;
    double anti_tol = 1e-8;
    OutputOptions anti_out;
    auto* anti = app.add_subcommand(
        "antiparallel", "Optimal covariant fidelity for N/2 up + N/2 down spins "
                        "(numeric C' and D' in the full product space)");
    anti->add_option("-N,--spins", anti_spins, "Even number of spins")->required();
    anti->add_option("--quadrature-order", anti_order,
                     "Nodes per Euler angle (0 = exact order 2N+4)");
    anti->add_option("--tolerance", anti_tol, "Allowed quadrature-doubling delta")
        ->capture_default_str();
    add_output_options(anti, anti_out);

    // use
    double use_alpha2 = 0.8;
    std::vector<double> use_eps;
    OutputOptions use_out;
    auto* use = app.add_subcommand(
        "use", "Unambiguous-discrimination gap table: no-post-selection closed form vs the "
               "pre/post instrument");
    use->add_option("--alpha2", use_alpha2, "alpha^2 of the signal pair, in (0.5, 1)")
        ->capture_default_str();
    use->add_option("--epsilon", use_eps,
                    "Post-state epsilon values (repeatable; default 0, 0.1, 0.05, 0.025)");
    add_output_options(use, use_out);

    // duality-suite
    std::uint64_t duality_seed = 1;
    int duality_instances = 200, duality_dim = 4;
    double duality_tol = 1e-10;
    bool duality_fault = false;
    OutputOptions duality_out;
    auto* duality = app.add_subcommand(
        "duality-suite", "Random-instance equivalence suite for the POVM <-> Kraus mappings");
    duality->add_option("--seed", duality_seed, "Root seed")->capture_default_str();
    duality->add_option("--instances", duality_instances, "Random instances per direction")
        ->capture_default_str();
    duality->add_option("--max-dim", duality_dim, "Largest pre/post dimension")
        ->capture_default_str();
    duality->add_option("--tolerance", duality_tol, "Allowed probability deviation")
        ->capture_default_str();
    duality->add_flag("--inject-fault", duality_fault,
                      "Scale one mapped operator by 1.01 (negative control; must fail)");
    add_output_options(duality, duality_out);

    // game
    std::string game_config;
    std::int64_t game_trials = 0, game_seed = 0;
    double game_sigmas = 3.0;
    OutputOptions game_out;
    auto* game = app.add_subcommand("game", "Monte-Carlo run of the estimation game from a "
                                            "declarative config file");
    game->add_option("--config", game_config, "Problem config (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    game->add_option("--trials", game_trials, "Override the config's trial count");
    auto* seed_opt = game->add_option("--seed", game_seed, "Override the config's seed");
    game->add_option("--sigmas", game_sigmas,
                     "Fail (exit 3) when |empirical - analytic| exceeds this many standard "
                     "errors; 0 disables")
        ->capture_default_str();
    add_output_options(game, game_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (par->parsed()) return run_parallel(par_spins, par_order, par_tol, par_out);
        if (anti->parsed())
            return run_antiparallel(anti_spins, anti_order, anti_tol, anti_out);
        if (use->parsed()) return run_use(use_alpha2, use_eps, use_out);
        if (duality->parsed())
            return run_duality_suite_cmd(duality_seed, duality_instances, duality_dim,
                                         duality_tol, duality_fault, duality_out);
        if (game->parsed())
            return run_game_cmd(game_config, game_trials, game_seed, seed_opt->count() > 0,
                                game_sigmas, game_out);
    } catch (const RetryExhaustedError& e) {
        std::cerr << "runtime error: " << e.what() << " at theta = [";
        for (std::size_t i = 0; i < e.theta.size(); ++i)
            std::cerr << (i ? ", " : "") << e.theta[i];
        std::cerr << "]\n";
        return kExitRuntime;
    } catch (const ZeroAcceptanceError& e) {
        std::cerr << "runtime error: " << e.what();
        if (e.theta) {
            std::cerr << " at theta = [";
            for (std::size_t i = 0; i < e.theta->size(); ++i)
                std::cerr << (i ? ", " : "") << (*e.theta)[i];
            std::cerr << "]";
        }
        std::cerr << "\n";
        return kExitRuntime;
    } catch (const SingularMatrixError& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const ZeroInstrumentError& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DimensionError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
