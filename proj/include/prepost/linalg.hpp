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

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace prepost {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Kronecker power; n = 0 gives the 1x1 identity (empty tensor factor).
Matrix kron_power(const Matrix& a, int n);

bool is_hermitian(const Matrix& m, double tolerance);
bool is_unitary(const Matrix& m, double tolerance);
bool is_positive_semidefinite(const Matrix& m, double tolerance);

// (M + M†)/2 if the defect is within tolerance, otherwise throws.
Matrix hermitize(const Matrix& m, double tolerance);

// Hermitian square root of a PSD matrix; eigenvalues in [-tolerance, 0) are
// clipped to zero, anything lower throws.
Matrix sqrt_psd(const Matrix& m, double tolerance);

double max_abs(const Matrix& m);
double max_abs(const Vector& v);

// Extracts |v> with M = |v><v| from a rank-one PSD matrix; throws
// NonRankOneError if a second eigenvalue survives the relative cutoff.
// The phase is fixed so the largest-magnitude component is real positive.
Vector rank_one_vector(const Matrix& m, double relative_cutoff);

// Largest eigenvalue of a Hermitian matrix.
double max_eigenvalue(const Matrix& m);

// Stacks a (rows x cols) matrix as sum_ab X(a,b) |a>|b| (row-major).
Vector vectorize(const Matrix& x);
Matrix unvectorize(const Vector& v, int rows, int cols);

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int order);

}  // namespace prepost
