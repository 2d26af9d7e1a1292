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

#include "prepost/rotations.hpp"

#include <cmath>

#include "prepost/errors.hpp"

namespace prepost {

Matrix su2_rotation(const Direction& d) {
    // cos(t/2) I - i sin(t/2) n.sigma with n = (-sin phi, cos phi, 0).
    double c = std::cos(0.5 * d.theta);
    double s = std::sin(0.5 * d.theta);
    Complex phase(std::cos(d.phi), std::sin(d.phi));
    Matrix u(2, 2);
    u(0, 0) = c;
    u(0, 1) = -s * std::conj(phase);
    u(1, 0) = s * phase;
    u(1, 1) = c;
    return u;
}

Matrix covariant_rotation(const Direction& d, int n_plain, int n_conj) {
    if (n_plain < 0 || n_conj < 0 || n_plain + n_conj < 1)
        throw ValidationError("covariant_rotation: need n_plain + n_conj >= 1");
    Matrix u = su2_rotation(d);
    return kron(kron_power(u, n_plain), kron_power(u.conjugate(), n_conj));
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double out = 1.0;
    for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

Vector symmetric_power(int spins, Complex a, Complex b) {
    if (spins < 1) throw ValidationError("symmetric_power: need at least one spin");
    Vector out(spins + 1);
    for (int i = 0; i <= spins; ++i) {
        int down = spins - i;  // m = i - N/2, number of down factors = N/2 - m
        out(i) = std::pow(a, i) * std::pow(b, down) * std::sqrt(binomial(spins, down));
    }
    return out;
}

Vector spin_coherent_expansion(int spins, const Direction& d) {
    if (spins < 1) throw ValidationError("spin_coherent_expansion: need at least one spin");
    Complex a = std::cos(0.5 * d.theta);
    Complex b = std::sin(0.5 * d.theta) * Complex(std::cos(d.phi), std::sin(d.phi));
    return symmetric_power(spins, a, b);
}

Matrix symmetric_embedding(int spins) {
    if (spins < 1) throw ValidationError("symmetric_embedding: need at least one spin");
    const int dim = 1 << spins;
    Matrix e = Matrix::Zero(dim, spins + 1);
    for (int idx = 0; idx < dim; ++idx) {
        int down = 0;
        for (int q = 0; q < spins; ++q)
            if (idx & (1 << q)) ++down;
        int col = spins - down;  // ascending m
        e(idx, col) = 1.0;
    }
    for (int col = 0; col <= spins; ++col) e.col(col) /= e.col(col).norm();
    return e;
}

}  // namespace prepost
