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

#include "prepost/linalg.hpp"

#include <cmath>
#include <numbers>

#include "prepost/errors.hpp"
#include "prepost/tolerances.hpp"

namespace prepost {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Matrix kron_power(const Matrix& a, int n) {
    if (n < 0) throw ValidationError("kron_power: negative power");
    Matrix out = Matrix::Identity(1, 1);
    for (int i = 0; i < n; ++i) out = kron(out, a);
    return out;
}

bool is_hermitian(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    return max_abs(Matrix(m - m.adjoint())) <= tolerance;
}

bool is_unitary(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) return false;
    Matrix defect = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return max_abs(defect) <= tolerance;
}

bool is_positive_semidefinite(const Matrix& m, double tolerance) {
    if (!is_hermitian(m, tol::kHermitian)) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m, tol::kHermitian),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tolerance;
}

Matrix hermitize(const Matrix& m, double tolerance) {
    if (m.rows() != m.cols()) throw DimensionError("hermitize: matrix not square");
    if (max_abs(Matrix(m - m.adjoint())) > tolerance)
        throw ValidationError("hermitize: Hermiticity defect exceeds tolerance");
    return 0.5 * (m + m.adjoint());
}

Matrix sqrt_psd(const Matrix& m, double tolerance) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m, tol::kHermitian));
    RealVector vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
        if (vals(i) < -tolerance)
            throw ValidationError("sqrt_psd: matrix is not positive semidefinite");
        vals(i) = std::sqrt(std::max(vals(i), 0.0));
    }
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

Vector rank_one_vector(const Matrix& m, double relative_cutoff) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m, tol::kHermitian));
    const RealVector& vals = es.eigenvalues();  // ascending
    const Eigen::Index top = vals.size() - 1;
    double lead = vals(top);
    if (lead <= 0.0) throw NonRankOneError("rank_one_vector: matrix is numerically zero");
    if (top > 0 && vals(top - 1) > relative_cutoff * lead)
        throw NonRankOneError("rank_one_vector: second eigenvalue above cutoff");
    Vector v = std::sqrt(lead) * es.eigenvectors().col(top);
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    Complex phase = v(imax) / std::abs(v(imax));
    return v / phase;
}

double max_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(m, tol::kHermitian),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

Vector vectorize(const Matrix& x) {
    Vector v(x.rows() * x.cols());
    for (Eigen::Index a = 0; a < x.rows(); ++a)
        for (Eigen::Index b = 0; b < x.cols(); ++b) v(a * x.cols() + b) = x(a, b);
    return v;
}

Matrix unvectorize(const Vector& v, int rows, int cols) {
    if (v.size() != Eigen::Index(rows) * cols)
        throw DimensionError("unvectorize: size mismatch");
    Matrix x(rows, cols);
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) x(a, b) = v(a * cols + b);
    return x;
}

// Newton iteration on Legendre polynomials; nodes accurate to ~1e-15.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order) {
    if (order < 1) throw ValidationError("gauss_legendre: order must be positive");
    std::vector<double> nodes(order), weights(order);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return {nodes, weights};
}

}  // namespace prepost
