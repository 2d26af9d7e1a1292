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

#include "prepost/report.hpp"

#include "prepost/errors.hpp"

namespace prepost {

nlohmann::json result_document(const RunManifest& manifest, nlohmann::json payload) {
    nlohmann::json doc;
    doc["schema"] = kResultSchema;
    doc["manifest"] = {{"command", manifest.command},
                       {"parameters", manifest.parameters},
                       {"seed", manifest.seed},
                       {"version", manifest.version},
                       {"duration_ms", manifest.duration_ms}};
    doc["payload"] = std::move(payload);
    return doc;
}

std::string payload_csv(const nlohmann::json& payload) {
    if (!payload.contains("rows") || !payload["rows"].is_array() || payload["rows"].empty())
        throw ValidationError("payload_csv: payload has no rows");
    const auto& rows = payload["rows"];
    std::string out;
    bool first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        if (!first) out += ",";
        out += it.key();
        first = false;
    }
    out += "\n";
    for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!first) out += ",";
            // Numbers print exactly as in the JSON payload; strings lose the
            // quotes but keep the same characters.
            if (it.value().is_string())
                out += it.value().get<std::string>();
            else
                out += it.value().dump();
            first = false;
        }
        out += "\n";
    }
    return out;
}

}  // namespace prepost
