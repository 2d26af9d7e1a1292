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

#include "prepost/catalog.hpp"

#include <cmath>
#include <numbers>

#include "prepost/covariant.hpp"
#include "prepost/errors.hpp"
#include "prepost/random_instances.hpp"
#include "prepost/rotations.hpp"
#include "prepost/use_discrimination.hpp"

namespace prepost {

namespace {

Theta direction_theta(const Direction& d) { return Theta{d.theta, d.phi}; }

Direction theta_direction(const Theta& t) {
    if (t.size() != 2) throw ValidationError("direction theta must have two entries");
    return Direction(t[0], t[1]);
}

Theta sample_uniform_sphere(RandomStream& rng) {
    return direction_theta(random_direction(rng));
}

double indicator_merit(const Theta& a, const Theta& b) {
    return a == b ? 1.0 : 0.0;
}

double fidelity_merit(const Theta& a, const Theta& b) {
    return direction_fidelity(theta_direction(a), theta_direction(b));
}

struct DirectionalDesign {
    std::vector<Direction> directions;
    std::vector<double> weights;  // sum to one
};

DirectionalDesign directional_design(int polar_nodes, int azimuthal_nodes) {
    auto [nodes, gl_weights] = gauss_legendre(polar_nodes);
    DirectionalDesign design;
    for (int i = 0; i < polar_nodes; ++i) {
        double theta = std::acos(std::clamp(nodes[i], -1.0, 1.0));
        for (int j = 0; j < azimuthal_nodes; ++j) {
            design.directions.emplace_back(theta,
                                           2.0 * std::numbers::pi * j / azimuthal_nodes);
            design.weights.push_back(0.5 * gl_weights[i] / azimuthal_nodes);
        }
    }
    return design;
}

Estimator direction_estimator(std::vector<Direction> directions) {
    return [dirs = std::move(directions)](int k) {
        return direction_theta(dirs.at(static_cast<std::size_t>(k)));
    };
}

}  // namespace

ThetaGrid sphere_grid(int polar_nodes, int azimuthal_nodes) {
    DirectionalDesign design = directional_design(polar_nodes, azimuthal_nodes);
    ThetaGrid grid;
    for (std::size_t i = 0; i < design.directions.size(); ++i) {
        grid.points.push_back(direction_theta(design.directions[i]));
        grid.weights.push_back(design.weights[i]);
    }
    return grid;
}

GameSetup make_orthogonal_pair() {
    GameSetup setup;
    setup.name = "orthogonal-pair";
    setup.scenario = Scenario::PreOnly;
    setup.problem.sample_theta = [](RandomStream& rng) {
        return Theta{rng.uniform() < 0.5 ? 0.0 : 1.0};
    };
    setup.problem.encode_pre = [](const Theta& t) {
        return QuantumState::basis(2, static_cast<int>(t.at(0)));
    };
    setup.problem.merit = indicator_merit;
    std::vector<Matrix> elements;
    Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    elements.push_back(p0);
    elements.push_back(p1);
    setup.instrument = Povm(std::move(elements), NormalizationMode::Exact);
    setup.estimator = [](int k) { return Theta{static_cast<double>(k)}; };
    setup.reference_grid = ThetaGrid{{Theta{0.0}, Theta{1.0}}, {0.5, 0.5}};
    return setup;
}

GameSetup make_use_pair(double alpha_squared, double epsilon) {
    UseParams params = UseParams::from_alpha_squared(alpha_squared, epsilon);
    GameSetup setup;
    setup.name = "use-pair";
    setup.scenario = Scenario::PrePost;
    setup.problem.sample_theta = [](RandomStream& rng) {
        return Theta{rng.uniform() < 0.5 ? 1.0 : -1.0};
    };
    setup.problem.encode_pre = [params](const Theta& t) {
        return use_pre_state(params, t.at(0) > 0 ? 1 : -1);
    };
    setup.problem.encode_post = [params](const Theta& t) {
        return use_post_state(params, t.at(0) > 0 ? 1 : -1);
    };
    setup.problem.merit = indicator_merit;
    setup.instrument = use_prepost_instrument(params);
    // Outcomes (+, -, 0); the inconclusive guess 0 never matches a label.
    setup.estimator = [](int k) {
        return Theta{k == 0 ? 1.0 : (k == 1 ? -1.0 : 0.0)};
    };
    setup.reference_grid = ThetaGrid{{Theta{1.0}, Theta{-1.0}}, {0.5, 0.5}};
    return setup;
}

namespace {

GameSetup direction_game_base(const std::string& name) {
    GameSetup setup;
    setup.name = name;
    setup.problem.sample_theta = sample_uniform_sphere;
    setup.problem.merit = fidelity_merit;
    return setup;
}

Povm tetrahedral_povm(std::vector<Direction>& directions_out) {
    const double s = 1.0 / std::sqrt(3.0);
    const std::array<std::array<double, 3>, 4> verts{{
        {s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}}};
    std::vector<Matrix> elements;
    for (const auto& v : verts) {
        Direction dir = Direction::from_cartesian(v[0], v[1], v[2]);
        directions_out.push_back(dir);
        Vector spin = su2_rotation(dir).col(0);
        elements.emplace_back(0.5 * spin * spin.adjoint());
    }
    return Povm(std::move(elements), NormalizationMode::Exact);
}

}  // namespace

GameSetup make_parallel_spins(int spins) {
    if (spins < 1) throw ValidationError("parallel-spins: spins must be >= 1");
    GameSetup setup = direction_game_base("parallel-spins");
    setup.scenario = Scenario::PreOnly;
    setup.problem.encode_pre = [spins](const Theta& t) {
        return QuantumState(spin_coherent_expansion(spins, theta_direction(t)));
    };
    std::vector<Direction> directions;
    if (spins == 1) {
        setup.instrument = tetrahedral_povm(directions);
    } else {
        // Covariant design: w_j (N+1) |coh(Omega_j)><coh(Omega_j)|, whitened
        // so the elements resolve the identity exactly.
        DirectionalDesign design = directional_design(spins + 2, 2 * spins + 3);
        const int dim = spins + 1;
        std::vector<Matrix> elements;
        Matrix sum = Matrix::Zero(dim, dim);
        for (std::size_t j = 0; j < design.directions.size(); ++j) {
            Vector coh = spin_coherent_expansion(spins, design.directions[j]);
            Matrix el = design.weights[j] * dim * (coh * coh.adjoint());
            sum += el;
            elements.push_back(std::move(el));
            directions.push_back(design.directions[j]);
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(sum, 1e-8));
        Matrix inv_sqrt = es.eigenvectors() *
                          es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal().toDenseMatrix() *
                          es.eigenvectors().adjoint();
        for (auto& el : elements) el = inv_sqrt * el * inv_sqrt;
        setup.instrument = Povm(std::move(elements), NormalizationMode::Exact);
    }
    setup.estimator = direction_estimator(directions);
    setup.reference_grid = sphere_grid(spins + 2, 2 * spins + 3);
    return setup;
}

GameSetup make_antiparallel_spins(int spins) {
    CovariantProblem problem = CovariantProblem::antiparallel(spins);
    GameSetup setup = direction_game_base("antiparallel-spins");
    setup.scenario = Scenario::FixedPost;
    setup.problem.encode_pre = [spins](const Theta& t) {
        Matrix u = su2_rotation(theta_direction(t));
        Vector v = Vector::Ones(1);
        for (int i = 0; i < spins / 2; ++i) v = kron(v, Vector(u.col(0)));
        for (int i = 0; i < spins / 2; ++i) v = kron(v, Vector(u.col(1)));
        return QuantumState(std::move(v));
    };
    Vector seed = optimal_fidelity(problem).seed;
    DirectionalDesign design = directional_design(2 * spins + 2, 4 * spins + 5);
    std::vector<Direction> directions = design.directions;
    std::vector<Matrix> elements;
    Matrix sum = Matrix::Zero(seed.size(), seed.size());
    for (std::size_t j = 0; j < design.directions.size(); ++j) {
        Vector rotated = covariant_rotation(design.directions[j], spins, 0) * seed;
        Matrix el = design.weights[j] * (rotated * rotated.adjoint());
        sum += el;
        elements.push_back(std::move(el));
    }
    double scale = 1.0 / max_eigenvalue(sum);
    for (auto& el : elements) el *= scale;
    setup.instrument = Povm(std::move(elements), NormalizationMode::Subnormalized);
    setup.estimator = direction_estimator(directions);
    setup.reference_grid = sphere_grid(2 * spins + 2, 4 * spins + 5);
    return setup;
}

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& path, const std::string& what) {
    throw ValidationError("config field '" + path + "': " + what);
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) config_error(path, "expected a number");
    return j.get<double>();
}

Complex complex_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        config_error(path, "expected [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

Vector state_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) config_error(path, "expected a non-empty amplitude list");
    Vector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = complex_at(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Matrix matrix_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) config_error(path, "expected a non-empty matrix");
    std::size_t cols = 0;
    Matrix m;
    for (std::size_t r = 0; r < j.size(); ++r) {
        std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].empty()) config_error(row_path, "expected a matrix row");
        if (r == 0) {
            cols = j[r].size();
            m = Matrix(j.size(), cols);
        } else if (j[r].size() != cols) {
            config_error(row_path, "ragged matrix");
        }
        for (std::size_t c = 0; c < cols; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                complex_at(j[r][c], row_path + "[" + std::to_string(c) + "]");
    }
    return m;
}

Scenario scenario_at(const json& j, const std::string& path) {
    if (!j.is_string()) config_error(path, "expected a scenario string");
    std::string s = j.get<std::string>();
    if (s == "pre_only") return Scenario::PreOnly;
    if (s == "fixed_post") return Scenario::FixedPost;
    if (s == "pre_post") return Scenario::PrePost;
    config_error(path, "unknown scenario '" + s + "'");
}

NormalizationMode mode_at(const json& j, const std::string& path) {
    if (!j.is_string()) config_error(path, "expected a mode string");
    std::string s = j.get<std::string>();
    if (s == "exact") return NormalizationMode::Exact;
    if (s == "subnormalized") return NormalizationMode::Subnormalized;
    config_error(path, "unknown mode '" + s + "'");
}

GameSetup literal_setup(const json& params) {
    GameSetup setup;
    setup.name = "literal";
    setup.scenario = scenario_at(params.value("scenario", json("pre_only")), "params.scenario");

    if (!params.contains("pre_states")) config_error("params.pre_states", "missing");
    std::vector<QuantumState> pre;
    for (std::size_t i = 0; i < params["pre_states"].size(); ++i)
        pre.emplace_back(state_at(params["pre_states"][i],
                                  "params.pre_states[" + std::to_string(i) + "]"));
    if (pre.empty()) config_error("params.pre_states", "needs at least one state");

    std::vector<QuantumState> post;
    if (params.contains("post_states")) {
        for (std::size_t i = 0; i < params["post_states"].size(); ++i)
            post.emplace_back(state_at(params["post_states"][i],
                                       "params.post_states[" + std::to_string(i) + "]"));
        if (post.size() != pre.size())
            config_error("params.post_states", "must match pre_states in length");
    } else if (setup.scenario == Scenario::PrePost) {
        config_error("params.post_states", "required for the pre_post scenario");
    }

    std::vector<double> prior(pre.size(), 1.0 / double(pre.size()));
    if (params.contains("prior")) {
        const json& jp = params["prior"];
        if (!jp.is_array() || jp.size() != pre.size())
            config_error("params.prior", "must match pre_states in length");
        double total = 0.0;
        for (std::size_t i = 0; i < jp.size(); ++i) {
            prior[i] = number_at(jp[i], "params.prior[" + std::to_string(i) + "]");
            if (prior[i] < 0.0) config_error("params.prior", "negative weight");
            total += prior[i];
        }
        if (std::abs(total - 1.0) > 1e-9) config_error("params.prior", "must sum to 1");
    }

    if (!params.contains("instrument")) config_error("params.instrument", "missing");
    const json& ji = params["instrument"];
    NormalizationMode mode = mode_at(ji.value("mode", json("exact")), "params.instrument.mode");
    std::string type = ji.value("type", std::string("povm"));
    if (!ji.contains("elements")) config_error("params.instrument.elements", "missing");
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < ji["elements"].size(); ++i)
        mats.push_back(matrix_at(ji["elements"][i],
                                 "params.instrument.elements[" + std::to_string(i) + "]"));
    if (mats.empty()) config_error("params.instrument.elements", "needs at least one");
    std::size_t outcomes = mats.size();
    if (type == "povm")
        setup.instrument = Povm(std::move(mats), mode);
    else if (type == "kraus")
        setup.instrument = KrausSet(std::move(mats), mode);
    else
        config_error("params.instrument.type", "expected 'povm' or 'kraus'");

    std::vector<double> estimate_labels(outcomes);
    if (params.contains("estimator")) {
        const json& je = params["estimator"];
        if (!je.is_array() || je.size() != outcomes)
            config_error("params.estimator", "must list one guess per outcome");
        for (std::size_t i = 0; i < je.size(); ++i)
            estimate_labels[i] = number_at(je[i], "params.estimator[" + std::to_string(i) + "]");
    } else {
        if (outcomes != pre.size())
            config_error("params.estimator",
                         "required when outcomes do not match pre_states one-to-one");
        for (std::size_t i = 0; i < outcomes; ++i) estimate_labels[i] = double(i);
    }

    setup.problem.sample_theta = [prior](RandomStream& rng) {
        int k = rng.sample(prior);
        if (k < 0) k = static_cast<int>(prior.size()) - 1;
        return Theta{double(k)};
    };
    setup.problem.encode_pre = [pre](const Theta& t) {
        return pre.at(static_cast<std::size_t>(t.at(0)));
    };
    if (!post.empty())
        setup.problem.encode_post = [post](const Theta& t) {
            return post.at(static_cast<std::size_t>(t.at(0)));
        };
    setup.problem.merit = indicator_merit;
    setup.estimator = [estimate_labels](int k) {
        return Theta{estimate_labels.at(static_cast<std::size_t>(k))};
    };
    ThetaGrid grid;
    for (std::size_t i = 0; i < pre.size(); ++i) {
        grid.points.push_back(Theta{double(i)});
        grid.weights.push_back(prior[i]);
    }
    setup.reference_grid = std::move(grid);
    return setup;
}

}  // namespace

LoadedGame load_game_config(const nlohmann::json& config) {
    if (!config.is_object()) throw ValidationError("config: expected a JSON object");
    if (!config.contains("problem") || !config["problem"].is_string())
        throw ValidationError("config field 'problem': expected a catalog name string");
    std::string name = config["problem"].get<std::string>();
    json params = config.value("params", json::object());

    LoadedGame loaded;
    if (name == "orthogonal-pair") {
        loaded.setup = make_orthogonal_pair();
    } else if (name == "use-pair") {
        loaded.setup = make_use_pair(number_at(params.value("alpha2", json(0.8)), "params.alpha2"),
                                     number_at(params.value("epsilon", json(0.1)), "params.epsilon"));
    } else if (name == "parallel-spins") {
        loaded.setup =
            make_parallel_spins(static_cast<int>(number_at(params.value("spins", json(1)),
                                                           "params.spins")));
    } else if (name == "antiparallel-spins") {
        loaded.setup =
            make_antiparallel_spins(static_cast<int>(number_at(params.value("spins", json(2)),
                                                               "params.spins")));
    } else if (name == "literal") {
        loaded.setup = literal_setup(params);
    } else {
        throw ValidationError("config field 'problem': unknown catalog entry '" + name + "'");
    }

    loaded.config.scenario = loaded.setup.scenario;
    loaded.config.trials = config.value("trials", std::int64_t(10000));
    loaded.config.seed = config.value("seed", std::uint64_t(0));
    loaded.config.max_retries = config.value("max_retries", std::int64_t(1000000));
    loaded.config.threads = config.value("threads", 1);
    if (loaded.config.trials < 1) throw ValidationError("config field 'trials': must be >= 1");
    if (loaded.config.max_retries < 1)
        throw ValidationError("config field 'max_retries': must be >= 1");
    loaded.echo = config;
    return loaded;
}

}  // namespace prepost
