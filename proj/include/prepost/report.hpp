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

#include <cstdint>
#include <string>

#include <json.hpp>

namespace prepost {

inline constexpr const char* kResultSchema = "prepost-result/1";

/// Echo of one command invocation. Every result document embeds one;
/// re-running with the same manifest reproduces the payload bit for bit
/// (duration_ms is the only field allowed to vary).
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::string version;
    double duration_ms = 0.0;
};

/// { "schema": ..., "manifest": {...}, "payload": {...} }. The payload's
/// tabular part lives under payload["rows"] (array of flat objects); extras
/// live under payload["details"].
nlohmann::json result_document(const RunManifest& manifest, nlohmann::json payload);

/// CSV rendering of payload["rows"]: header row from the first row's keys,
/// one line per row, cells serialized exactly as JSON would print them (so
/// the two formats agree field for field).
std::string payload_csv(const nlohmann::json& payload);

}  // namespace prepost
