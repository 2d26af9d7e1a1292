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

#include <cmath>
#include <numbers>

#include "prepost/errors.hpp"
#include "prepost/random_instances.hpp"
#include "prepost/state.hpp"
#include "test_support.hpp"

using namespace prepost;
using prepost::testing::check_close;
using prepost::testing::check_vector_close;

TEST_CASE("quantum state construction enforces the unit norm") {
    CHECK_NOTHROW(QuantumState({1.0, 0.0}));
    CHECK_THROWS_AS(QuantumState({1.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(QuantumState(Vector{}), ValidationError);
    QuantumState s = QuantumState::normalized(Vector::Ones(4));
    check_close(s.vec().norm(), 1.0, 1e-15);
}

TEST_CASE("conjugation fixes real states and conjugates phases") {
    QuantumState real({1.0, 0.0});
    check_vector_close(conjugate_in_basis(real).vec(), real.vec(), 0.0);

    double r = 1.0 / std::sqrt(2.0);
    QuantumState s({Complex(r, 0.0), Complex(0.0, r)});
    Vector expected(2);
    expected << Complex(r, 0.0), Complex(0.0, -r);
    check_vector_close(conjugate_in_basis(s).vec(), expected, 0.0);
}

TEST_CASE("conjugation is an involution on random states") {
    RandomStream rng(42);
    for (int i = 0; i < 50; ++i) {
        QuantumState s = random_state(1 + int(rng.uniform() * 6), rng);
        check_vector_close(conjugate_in_basis(conjugate_in_basis(s)).vec(), s.vec(), 0.0);
    }
}

TEST_CASE("tensor products use the first-factor-major layout") {
    QuantumState a({1.0, 0.0});
    QuantumState b({0.0, 1.0});
    Vector expected(4);
    expected << 0.0, 1.0, 0.0, 0.0;
    check_vector_close(tensor(a, b).vec(), expected, 0.0);

    Matrix id4 = tensor(Matrix::Identity(2, 2), Matrix::Identity(2, 2));
    prepost::testing::check_matrix_close(id4, Matrix::Identity(4, 4), 0.0);
}

TEST_CASE("tensor norm is multiplicative on random states") {
    RandomStream rng(7);
    for (int i = 0; i < 25; ++i) {
        QuantumState a = random_state(2 + int(rng.uniform() * 3), rng);
        QuantumState b = random_state(2 + int(rng.uniform() * 3), rng);
        check_close(tensor(a, b).vec().norm(), 1.0, 1e-12);
    }
}

TEST_CASE("direction validates its ranges") {
    CHECK_THROWS_AS(Direction(-0.1, 0.0), ValidationError);
    CHECK_THROWS_AS(Direction(0.0, -0.1), ValidationError);
    CHECK_THROWS_AS(Direction(0.0, 2.0 * std::numbers::pi), ValidationError);
    Direction d = Direction::from_cartesian(0.0, 0.0, -2.0);
    check_close(d.theta, std::numbers::pi, 1e-15);
}

TEST_CASE("direction fidelity is cos^2 of the half angle") {
    Direction z(0.0, 0.0);
    Direction x(std::numbers::pi / 2.0, 0.0);
    check_close(direction_fidelity(z, z), 1.0, 1e-15);
    check_close(direction_fidelity(z, x), 0.5, 1e-15);
    check_close(direction_fidelity(z, Direction(std::numbers::pi, 0.0)), 0.0, 1e-15);
}

TEST_CASE("bloch vector of basis states") {
    auto up = bloch_vector(QuantumState({1.0, 0.0}));
    CHECK(up[2] == doctest::Approx(1.0));
    auto plus = bloch_vector(QuantumState({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}));
    CHECK(plus[0] == doctest::Approx(1.0));
    CHECK(plus[1] == doctest::Approx(0.0));
}

TEST_CASE("inner product conjugates the left argument") {
    QuantumState a({Complex(0.0, 1.0), 0.0});
    QuantumState b({1.0, 0.0});
    CHECK(inner(a, b) == Complex(0.0, -1.0));
    CHECK_THROWS_AS(inner(a, QuantumState({1.0, 0.0, 0.0})), DimensionError);
}
