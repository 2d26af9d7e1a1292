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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string stdout_text;
};

CommandResult run_cli(const std::string& args) {
    std::string command = std::string(PREPOST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.stdout_text.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

json parse_document(const CommandResult& result) {
    REQUIRE_FALSE(result.stdout_text.empty());
    json doc = json::parse(result.stdout_text);
    // Structural contract of every result document.
    REQUIRE(doc.contains("schema"));
    CHECK(doc["schema"] == "prepost-result/1");
    REQUIRE(doc.contains("manifest"));
    for (const char* field : {"command", "parameters", "seed", "version", "duration_ms"})
        CHECK(doc["manifest"].contains(field));
    REQUIRE(doc.contains("payload"));
    REQUIRE(doc["payload"].contains("rows"));
    REQUIRE(doc["payload"]["rows"].is_array());
    REQUIRE_FALSE(doc["payload"]["rows"].empty());
    return doc;
}

std::string config_path(const std::string& name) {
    return std::string(PREPOST_CONFIG_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("parallel command reports the closed form") {
    CommandResult result = run_cli("parallel --spins 3");
    CHECK(result.exit_code == 0);
    json doc = parse_document(result);
    const json& row = doc["payload"]["rows"][0];
    CHECK(row["spins"] == 3);
    CHECK(std::abs(row["lambda_max"].get<double>() - 0.8) < 1e-10);
    CHECK(row["difference"].get<double>() < 1e-10);
    CHECK(doc["payload"]["details"].contains("seed_vector"));
}

TEST_CASE("parallel command with explicit quadrature") {
    CommandResult result = run_cli("parallel --spins 2 --quadrature-order 8");
    CHECK(result.exit_code == 0);
    json doc = parse_document(result);
    CHECK(std::abs(doc["payload"]["rows"][0]["lambda_max"].get<double>() - 0.75) < 1e-9);
    CHECK(doc["payload"]["details"]["convergence"]["lambda_delta"].get<double>() < 1e-9);
}

TEST_CASE("invalid spin counts exit with the validation code") {
    CHECK(run_cli("parallel --spins 0").exit_code == 2);
    CHECK(run_cli("parallel --spins 42").exit_code == 2);
    CHECK(run_cli("antiparallel --spins 3").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("antiparallel command reproduces the reported value at n=2") {
    CommandResult result = run_cli("antiparallel --spins 2");
    CHECK(result.exit_code == 0);
    json doc = parse_document(result);
    CHECK(std::abs(doc["payload"]["rows"][0]["lambda_max"].get<double>() - 0.7887) < 5e-4);
    CHECK(doc["payload"]["rows"][0]["convergence_delta"].get<double>() < 1e-8);
}

TEST_CASE("use command emits matching csv and json payloads") {
    std::string args = "use --alpha2 0.8 --epsilon 0 --epsilon 0.1";
    CommandResult as_json = run_cli(args);
    CommandResult as_csv = run_cli(args + " --out csv");
    CHECK(as_json.exit_code == 0);
    CHECK(as_csv.exit_code == 0);

    json doc = parse_document(as_json);
    const json& rows = doc["payload"]["rows"];
    CHECK(std::abs(rows[0]["pm_inconclusive"].get<double>() - 0.2) < 1e-12);

    std::istringstream csv(as_csv.stdout_text);
    std::string header;
    std::getline(csv, header);
    std::vector<std::string> columns;
    {
        std::istringstream hs(header);
        std::string cell;
        while (std::getline(hs, cell, ',')) columns.push_back(cell);
    }
    std::size_t row_index = 0;
    std::string line;
    while (std::getline(csv, line)) {
        REQUIRE(row_index < rows.size());
        std::istringstream ls(line);
        std::string cell;
        std::size_t col = 0;
        while (std::getline(ls, cell, ',')) {
            REQUIRE(col < columns.size());
            CHECK(cell == rows[row_index][columns[col]].dump());
            ++col;
        }
        CHECK(col == columns.size());
        ++row_index;
    }
    CHECK(row_index == rows.size());
}

TEST_CASE("duality suite passes and the fault injection trips it") {
    CommandResult ok = run_cli("duality-suite --instances 25 --seed 4");
    CHECK(ok.exit_code == 0);
    json doc = parse_document(ok);
    CHECK(doc["payload"]["rows"][0]["pass"] == true);

    CommandResult faulted = run_cli("duality-suite --instances 25 --seed 4 --inject-fault");
    CHECK(faulted.exit_code == 3);
}

TEST_CASE("game command runs the bundled configs") {
    CommandResult result =
        run_cli("game --config " + config_path("orthogonal-pair.json") + " --trials 2000");
    CHECK(result.exit_code == 0);
    json doc = parse_document(result);
    const json& row = doc["payload"]["rows"][0];
    CHECK(row["empirical_merit"] == 1.0);
    CHECK(row["analytic_merit"] == 1.0);
    CHECK(doc["payload"]["details"].contains("outcome_counts"));

    CHECK(run_cli("game --config /nonexistent.json").exit_code == 2);
}

TEST_CASE("identical manifests reproduce identical payloads") {
    std::string args = "game --config " + config_path("use-eps0.1.json") +
                       " --trials 5000 --seed 123";
    CommandResult first = run_cli(args);
    CommandResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    json a = json::parse(first.stdout_text);
    json b = json::parse(second.stdout_text);
    CHECK(a["payload"].dump() == b["payload"].dump());
}
