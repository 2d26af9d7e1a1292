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

#include "prepost/covariant.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "prepost/errors.hpp"
#include "prepost/rotations.hpp"
#include "prepost/tolerances.hpp"

namespace prepost {

CovariantProblem CovariantProblem::parallel(int spins, int order, Representation rep) {
    if (spins < 1) throw ValidationError("CovariantProblem: need at least one spin");
    return CovariantProblem{spins, SpinPattern::Parallel, order, rep};
}

CovariantProblem CovariantProblem::antiparallel(int spins, int order) {
    if (spins < 2 || spins % 2 != 0)
        throw ValidationError("CovariantProblem: antiparallel requires even N >= 2");
    return CovariantProblem{spins, SpinPattern::Antiparallel, order, Representation::Full};
}

int CovariantProblem::dimension() const {
    if (pattern == SpinPattern::Antiparallel && representation == Representation::Symmetric)
        throw ValidationError("CovariantProblem: symmetric representation is parallel-only");
    return representation == Representation::Symmetric ? spins + 1 : (1 << spins);
}

FidelityPair build_CD_parallel(int spins) {
    if (spins < 1) throw ValidationError("build_CD_parallel: need at least one spin");
    const int dim = spins + 1;
    Matrix c = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        double m = i - 0.5 * spins;
        c(i, i) = (m + 0.5 * spins + 1.0) / (double(spins + 1) * (spins + 2));
    }
    Matrix d = Matrix::Identity(dim, dim) / double(spins + 1);
    return FidelityPair{std::move(c), std::move(d)};
}

namespace {

// 2x2 zyz Euler rotation e^{-i a Sz} e^{-i b Sy} e^{-i g Sz}.
Matrix euler_zyz(double a, double b, double g) {
    Complex ea(std::cos(0.5 * a), -std::sin(0.5 * a));
    Complex eg(std::cos(0.5 * g), -std::sin(0.5 * g));
    double c = std::cos(0.5 * b), s = std::sin(0.5 * b);
    Matrix u(2, 2);
    u(0, 0) = ea * c * eg;
    u(0, 1) = -ea * s * std::conj(eg);
    u(1, 0) = std::conj(ea) * s * eg;
    u(1, 1) = std::conj(ea) * c * std::conj(eg);
    return u;
}

// Visits every quadrature node with its Haar weight and cos(beta).
void for_each_haar_node(int order,
                        const std::function<void(const Matrix&, double, double)>& visit) {
    auto [nodes, gl_weights] = gauss_legendre(order);
    const double step = 2.0 * std::numbers::pi / order;
    const double angle_weight = step * step / (8.0 * std::numbers::pi * std::numbers::pi);
    for (int ib = 0; ib < order; ++ib) {
        double cos_beta = nodes[ib];
        double beta = std::acos(std::clamp(cos_beta, -1.0, 1.0));
        for (int ia = 0; ia < order; ++ia) {
            for (int ig = 0; ig < order; ++ig) {
                Matrix u = euler_zyz(ia * step, beta, ig * step);
                visit(u, gl_weights[ib] * angle_weight, cos_beta);
            }
        }
    }
}

// U^dag |chi> for the problem's seed state, in the working representation.
Vector rotated_seed_state(const CovariantProblem& problem, const Matrix& u) {
    const int n = problem.spins;
    if (problem.representation == Representation::Symmetric) {
        // (u^dag |up>)^(x N) collected in the symmetric basis.
        Complex a = std::conj(u(0, 0));
        Complex b = std::conj(u(0, 1));
        return symmetric_power(n, a, b);
    }
    Matrix ud = u.adjoint();
    Vector up = ud.col(0);
    Vector down = ud.col(1);
    Vector v = Vector::Ones(1);
    if (problem.pattern == SpinPattern::Parallel) {
        for (int i = 0; i < n; ++i) v = kron(v, up);
    } else {
        for (int i = 0; i < n / 2; ++i) v = kron(v, up);
        for (int i = 0; i < n / 2; ++i) v = kron(v, down);
    }
    return v;
}

FidelityPair build_CD_at_order(const CovariantProblem& problem, int order) {
    const int dim = problem.dimension();
    Matrix c = Matrix::Zero(dim, dim);
    Matrix d = Matrix::Zero(dim, dim);
    for_each_haar_node(order, [&](const Matrix& u, double w, double cos_beta) {
        Vector v = rotated_seed_state(problem, u);
        Matrix proj = v * v.adjoint();
        c += (w * 0.5 * (1.0 + cos_beta)) * proj;  // cos^2(Phi/2), Phi the z tilt
        d += w * proj;
    });
    return FidelityPair{hermitize(c, tol::kHermitian), hermitize(d, tol::kHermitian)};
}

}  // namespace

FidelityPair build_CD_quadrature(const CovariantProblem& problem) {
    problem.dimension();  // validates pattern/representation
    return build_CD_at_order(problem, problem.order());
}

FidelityPair build_CD_full_from_seed(const Vector& seed, int spins, int order,
                                     const std::array<double, 3>& axis) {
    if (seed.size() != Eigen::Index(1) << spins)
        throw DimensionError("build_CD_full_from_seed: seed must live in the 2^N space");
    const Eigen::Index dim = seed.size();
    // cos(Phi) = a . (R_U a) read off from u (a.sigma) u^dag.
    auto cos_tilt = [&axis](const Matrix& u) {
        Matrix pauli(2, 2);
        pauli(0, 0) = axis[2];
        pauli(0, 1) = Complex(axis[0], -axis[1]);
        pauli(1, 0) = Complex(axis[0], axis[1]);
        pauli(1, 1) = -axis[2];
        Matrix rotated = u * pauli * u.adjoint();
        double x = rotated(1, 0).real();
        double y = rotated(1, 0).imag();
        double z = rotated(0, 0).real();
        return axis[0] * x + axis[1] * y + axis[2] * z;
    };
    Matrix c = Matrix::Zero(dim, dim);
    Matrix d = Matrix::Zero(dim, dim);
    for_each_haar_node(order, [&](const Matrix& u, double w, double) {
        Vector v = kron_power(u, spins).adjoint() * seed;
        Matrix proj = v * v.adjoint();
        c += (w * 0.5 * (1.0 + cos_tilt(u))) * proj;
        d += w * proj;
    });
    return FidelityPair{hermitize(c, tol::kHermitian), hermitize(d, tol::kHermitian)};
}

GeneralizedEigenResult max_generalized_eigen(const FidelityPair& pair) {
    if (pair.C.rows() != pair.D.rows() || pair.C.cols() != pair.D.cols() ||
        pair.C.rows() != pair.C.cols())
        throw DimensionError("max_generalized_eigen: C and D must be square and equal shape");
    Matrix d = hermitize(pair.D, tol::kHermitian);
    Eigen::SelfAdjointEigenSolver<Matrix> es_d(d);
    double lead = es_d.eigenvalues().maxCoeff();
    if (lead <= tol::kZeroAcceptance)
        throw SingularMatrixError("max_generalized_eigen: D is numerically zero");

    const double cutoff = tol::kRangeCutoff * lead;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < es_d.eigenvalues().size(); ++i)
        if (es_d.eigenvalues()(i) > cutoff) keep.push_back(i);

    Matrix whitener(d.rows(), Eigen::Index(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j)
        whitener.col(j) =
            es_d.eigenvectors().col(keep[j]) / std::sqrt(es_d.eigenvalues()(keep[j]));

    Matrix b = hermitize(whitener.adjoint() * pair.C * whitener, tol::kHermitian);
    Eigen::SelfAdjointEigenSolver<Matrix> es_b(b);
    Eigen::Index top = es_b.eigenvalues().size() - 1;
    Vector lifted = whitener * es_b.eigenvectors().col(top);
    lifted /= lifted.norm();
    return GeneralizedEigenResult{es_b.eigenvalues()(top), std::move(lifted)};
}

Matrix haar_average_projector(const CovariantProblem& problem, const Vector& seed) {
    const int dim = problem.dimension();
    if (seed.size() != dim) throw DimensionError("haar_average_projector: seed size mismatch");
    if (problem.representation == Representation::Symmetric) {
        // Irreducible representation: the group average is tr/(N+1) times 1.
        return seed.squaredNorm() / double(dim) * Matrix::Identity(dim, dim);
    }
    Matrix avg = Matrix::Zero(dim, dim);
    for_each_haar_node(problem.order(), [&](const Matrix& u, double w, double) {
        Matrix big = kron_power(u, problem.spins);
        Vector rotated = big * seed;
        avg += w * (rotated * rotated.adjoint());
    });
    return hermitize(avg, tol::kHermitian);
}

double covariant_seed_scale(const CovariantProblem& problem, const Vector& seed) {
    double lead = max_eigenvalue(haar_average_projector(problem, seed));
    if (lead <= tol::kZeroAcceptance)
        throw ZeroInstrumentError("covariant_seed_scale: zero seed");
    return 1.0 / std::sqrt(lead);
}

OptimalFidelityResult optimal_fidelity(const CovariantProblem& problem) {
    const int order = problem.order();
    FidelityPair base = build_CD_at_order(problem, order);
    FidelityPair fine = build_CD_at_order(problem, 2 * order);
    GeneralizedEigenResult coarse = max_generalized_eigen(base);
    GeneralizedEigenResult best = max_generalized_eigen(fine);

    OptimalFidelityResult out;
    out.fidelity = best.lambda;
    out.seed = best.vector;
    out.convergence.order = order;
    out.convergence.doubled_order = 2 * order;
    out.convergence.lambda_delta = std::abs(best.lambda - coarse.lambda);
    out.convergence.entry_delta = std::max(max_abs(Matrix(fine.C - base.C)),
                                           max_abs(Matrix(fine.D - base.D)));
    out.seed_scale = covariant_seed_scale(problem, best.vector);
    return out;
}

}  // namespace prepost
