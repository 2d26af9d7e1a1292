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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prepost {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction-time invariant violations (bad norms, non-PSD elements, ...).
struct ValidationError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

// Every outcome was rejected: the conditional rule's denominator underflowed
// and the Gate would loop forever.
struct ZeroAcceptanceError : Error {
    explicit ZeroAcceptanceError(const std::string& what,
                                 std::optional<std::vector<double>> theta = std::nullopt)
        : Error(what), theta(std::move(theta)) {}
    std::optional<std::vector<double>> theta;
};

struct NonRankOneError : Error {
    using Error::Error;
};

struct ZeroInstrumentError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct RetryExhaustedError : Error {
    RetryExhaustedError(const std::string& what, std::vector<double> theta)
        : Error(what), theta(std::move(theta)) {}
    std::vector<double> theta;
};

}  // namespace prepost
