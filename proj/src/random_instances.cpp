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

#include "prepost/random_instances.hpp"

#include <cmath>
#include <numbers>

#include "prepost/errors.hpp"
#include "prepost/tolerances.hpp"

namespace prepost {

Direction random_direction(RandomStream& rng) {
    double z = 2.0 * rng.uniform() - 1.0;
    double phi = 2.0 * std::numbers::pi * rng.uniform();
    if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
    return Direction(std::acos(std::clamp(z, -1.0, 1.0)), phi);
}

QuantumState random_state(int dim, RandomStream& rng) {
    Vector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
    return QuantumState::normalized(v);
}

Matrix random_gaussian_matrix(int rows, int cols, RandomStream& rng) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(rng.gaussian(), rng.gaussian());
    return m;
}

Matrix random_unitary(int dim, RandomStream& rng) {
    Matrix g = random_gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        Complex diag = r(i, i);
        q.col(i) *= (diag == Complex(0) ? Complex(1) : diag / std::abs(diag));
    }
    return q;
}

Povm random_rank_one_povm(int dim, int outcomes, NormalizationMode mode, RandomStream& rng,
                          double fill) {
    if (outcomes < 1) throw ValidationError("random_rank_one_povm: outcomes must be >= 1");
    std::vector<Matrix> elements;
    elements.reserve(outcomes);
    if (mode == NormalizationMode::Exact) {
        if (outcomes < dim)
            throw ValidationError("random_rank_one_povm: Exact mode needs outcomes >= dim");
        Matrix g = random_gaussian_matrix(outcomes, dim, rng);
        Eigen::HouseholderQR<Matrix> qr(g);
        Matrix iso = Matrix(qr.householderQ()).leftCols(dim);  // iso^dag iso = 1
        for (int k = 0; k < outcomes; ++k) {
            Vector w = iso.row(k).adjoint();
            elements.emplace_back(w * w.adjoint());
        }
    } else {
        std::vector<Vector> vs;
        Matrix sum = Matrix::Zero(dim, dim);
        for (int k = 0; k < outcomes; ++k) {
            Vector v(dim);
            for (int i = 0; i < dim; ++i) v(i) = Complex(rng.gaussian(), rng.gaussian());
            vs.push_back(v);
            sum += v * v.adjoint();
        }
        double scale = fill / std::sqrt(max_eigenvalue(sum));
        for (auto& v : vs) {
            v *= scale;
            elements.emplace_back(v * v.adjoint());
        }
    }
    return Povm(std::move(elements), mode);
}

Povm random_povm(int dim, int outcomes, NormalizationMode mode, RandomStream& rng, double fill) {
    std::vector<Matrix> pieces;
    Matrix sum = Matrix::Zero(dim, dim);
    for (int k = 0; k < outcomes; ++k) {
        Matrix b = random_gaussian_matrix(dim, dim, rng);
        Matrix p = b.adjoint() * b;
        pieces.push_back(p);
        sum += p;
    }
    if (mode == NormalizationMode::Exact) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(sum, tol::kHermitian));
        Matrix inv_sqrt = es.eigenvectors() *
                          es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal().toDenseMatrix() *
                          es.eigenvectors().adjoint();
        for (auto& p : pieces) p = inv_sqrt * p * inv_sqrt;
    } else {
        double scale = fill * fill / max_eigenvalue(sum);
        for (auto& p : pieces) p *= scale;
    }
    return Povm(std::move(pieces), mode);
}

KrausSet random_kraus_set(int rows, int cols, int outcomes, NormalizationMode mode,
                          RandomStream& rng, double fill) {
    if (outcomes < 1) throw ValidationError("random_kraus_set: outcomes must be >= 1");
    std::vector<Matrix> ops;
    ops.reserve(outcomes);
    if (mode == NormalizationMode::Exact) {
        if (Eigen::Index(outcomes) * rows < cols)
            throw ValidationError("random_kraus_set: stacked shape cannot be an isometry");
        Matrix g = random_gaussian_matrix(outcomes * rows, cols, rng);
        Eigen::HouseholderQR<Matrix> qr(g);
        Matrix iso = Matrix(qr.householderQ()).leftCols(cols);
        for (int k = 0; k < outcomes; ++k) ops.push_back(iso.middleRows(k * rows, rows));
    } else {
        Matrix sum = Matrix::Zero(cols, cols);
        for (int k = 0; k < outcomes; ++k) {
            ops.push_back(random_gaussian_matrix(rows, cols, rng));
            sum += ops.back().adjoint() * ops.back();
        }
        double scale = fill / std::sqrt(max_eigenvalue(sum));
        for (auto& op : ops) op *= scale;
    }
    return KrausSet(std::move(ops), mode);
}

PrePostEnsemble random_ensemble(int post_dim, int pre_dim, RandomStream& rng) {
    QuantumState pre = random_state(pre_dim, rng);
    QuantumState post = random_state(post_dim, rng);
    return PrePostEnsemble(std::move(pre), std::move(post));
}

}  // namespace prepost
