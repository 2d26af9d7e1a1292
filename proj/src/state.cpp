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

#include "prepost/state.hpp"

#include <cmath>
#include <numbers>

#include "prepost/errors.hpp"
#include "prepost/tolerances.hpp"

namespace prepost {

QuantumState::QuantumState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) throw ValidationError("QuantumState: empty amplitude vector");
    double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > tol::kStateNorm)
        throw ValidationError("QuantumState: norm deviates from 1 beyond tolerance");
}

QuantumState::QuantumState(std::initializer_list<Complex> amplitudes)
    : QuantumState([&] {
          Vector v(static_cast<Eigen::Index>(amplitudes.size()));
          Eigen::Index i = 0;
          for (const auto& a : amplitudes) v(i++) = a;
          return v;
      }()) {}

QuantumState QuantumState::basis(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim)
        throw DimensionError("QuantumState::basis: index out of range");
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return QuantumState(std::move(v));
}

QuantumState QuantumState::normalized(const Vector& raw) {
    double norm = raw.norm();
    if (norm <= 0.0) throw ValidationError("QuantumState::normalized: zero vector");
    return QuantumState(Vector(raw / norm));
}

QuantumState QuantumState::conjugated() const { return QuantumState(amplitudes_.conjugate()); }

QuantumState conjugate_in_basis(const QuantumState& s) { return s.conjugated(); }

Complex inner(const QuantumState& a, const QuantumState& b) {
    if (a.dim() != b.dim()) throw DimensionError("inner: dimension mismatch");
    return a.vec().dot(b.vec());
}

QuantumState tensor(const QuantumState& a, const QuantumState& b) {
    return QuantumState(kron(a.vec(), b.vec()));
}

Matrix tensor(const Matrix& a, const Matrix& b) { return kron(a, b); }

Direction::Direction(double theta, double phi) : theta(theta), phi(phi) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
        throw ValidationError("Direction: theta outside [0, pi]");
    if (!(phi >= 0.0 && phi < 2.0 * std::numbers::pi))
        throw ValidationError("Direction: phi outside [0, 2*pi)");
}

Direction Direction::from_cartesian(double x, double y, double z) {
    double r = std::sqrt(x * x + y * y + z * z);
    if (r <= 0.0) throw ValidationError("Direction::from_cartesian: zero vector");
    double theta = std::acos(std::clamp(z / r, -1.0, 1.0));
    double phi = std::atan2(y, x);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
    return Direction(theta, phi);
}

std::array<double, 3> Direction::unit_vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double direction_fidelity(const Direction& a, const Direction& b) {
    auto u = a.unit_vector();
    auto v = b.unit_vector();
    double c = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    return 0.5 * (1.0 + std::clamp(c, -1.0, 1.0));
}

std::array<double, 3> bloch_vector(const QuantumState& s) {
    if (s.dim() != 2) throw DimensionError("bloch_vector: qubit expected");
    Complex a = s[0], b = s[1];
    Complex cross = std::conj(a) * b;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(a) - std::norm(b)};
}

}  // namespace prepost
