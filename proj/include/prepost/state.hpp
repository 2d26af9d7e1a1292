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

#include <array>
#include <initializer_list>

#include "prepost/linalg.hpp"

namespace prepost {

/// Unit vector of complex amplitudes in a fixed computational basis.
/// Construction rejects vectors whose norm deviates from 1 by more than
/// tol::kStateNorm; unnormalized data travels as a plain Vector instead.
class QuantumState {
  public:
    explicit QuantumState(Vector amplitudes);
    QuantumState(std::initializer_list<Complex> amplitudes);

    static QuantumState basis(int dim, int index);
    // Normalizes explicitly; throws on the zero vector.
    static QuantumState normalized(const Vector& raw);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const Vector& vec() const { return amplitudes_; }
    Complex operator[](int i) const { return amplitudes_(i); }

    // Complex conjugation of every amplitude in the computational basis.
    QuantumState conjugated() const;

  private:
    Vector amplitudes_;
};

QuantumState conjugate_in_basis(const QuantumState& s);

Complex inner(const QuantumState& a, const QuantumState& b);

QuantumState tensor(const QuantumState& a, const QuantumState& b);
Matrix tensor(const Matrix& a, const Matrix& b);

/// Point on the unit sphere, polar angle theta in [0, pi], azimuth phi
/// in [0, 2*pi).
struct Direction {
    double theta = 0.0;
    double phi = 0.0;

    Direction() = default;
    Direction(double theta, double phi);

    static Direction from_cartesian(double x, double y, double z);

    std::array<double, 3> unit_vector() const;
};

// cos^2(Phi/2) with Phi the angle between the two directions.
double direction_fidelity(const Direction& a, const Direction& b);

// <s|sigma|s> for a qubit state.
std::array<double, 3> bloch_vector(const QuantumState& s);

}  // namespace prepost
