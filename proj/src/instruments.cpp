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

#include "prepost/instruments.hpp"

#include <cmath>

#include "prepost/errors.hpp"
#include "prepost/tolerances.hpp"

namespace prepost {

namespace {

void check_bounded_by_identity(const Matrix& sum, NormalizationMode mode, const char* who) {
    Matrix deficit = Matrix::Identity(sum.rows(), sum.cols()) - sum;
    if (mode == NormalizationMode::Exact) {
        if (max_abs(deficit) > tol::kCompleteness)
            throw ValidationError(std::string(who) + ": elements do not resolve the identity");
    } else {
        if (!is_positive_semidefinite(deficit, tol::kPsd))
            throw ValidationError(std::string(who) + ": elements exceed the identity");
    }
}

}  // namespace

Povm::Povm(std::vector<Matrix> elements, NormalizationMode mode)
    : elements_(std::move(elements)), mode_(mode) {
    if (elements_.empty()) throw ValidationError("Povm: no elements");
    dim_ = static_cast<int>(elements_.front().rows());
    Matrix sum = Matrix::Zero(dim_, dim_);
    for (auto& m : elements_) {
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionError("Povm: inconsistent element shapes");
        m = hermitize(m, tol::kHermitian);
        if (!is_positive_semidefinite(m, tol::kPsd))
            throw ValidationError("Povm: element is not positive semidefinite");
        sum += m;
    }
    check_bounded_by_identity(sum, mode_, "Povm");
}

KrausSet::KrausSet(std::vector<Matrix> operators, NormalizationMode mode)
    : operators_(std::move(operators)), mode_(mode) {
    if (operators_.empty()) throw ValidationError("KrausSet: no operators");
    rows_ = static_cast<int>(operators_.front().rows());
    cols_ = static_cast<int>(operators_.front().cols());
    Matrix sum = Matrix::Zero(cols_, cols_);
    for (const auto& a : operators_) {
        if (a.rows() != rows_ || a.cols() != cols_)
            throw DimensionError("KrausSet: inconsistent operator shapes");
        sum += a.adjoint() * a;
    }
    check_bounded_by_identity(sum, mode_, "KrausSet");
}

RealVector born_probability(const Povm& p, const QuantumState& s) {
    if (p.mode() != NormalizationMode::Exact)
        throw ValidationError("born_probability: requires an Exact POVM");
    if (p.dim() != s.dim()) throw DimensionError("born_probability: dimension mismatch");
    RealVector out(p.size());
    for (int k = 0; k < p.size(); ++k)
        out(k) = std::real(s.vec().dot(p.element(k) * s.vec()));
    return out;
}

RealVector conditional_prob_fixed_post(const Povm& p, const QuantumState& s) {
    if (p.dim() != s.dim())
        throw DimensionError("conditional_prob_fixed_post: dimension mismatch");
    RealVector raw(p.size());
    for (int k = 0; k < p.size(); ++k)
        raw(k) = std::real(s.vec().dot(p.element(k) * s.vec()));
    double total = raw.sum();
    if (total <= tol::kZeroAcceptance)
        throw ZeroAcceptanceError("conditional_prob_fixed_post: every outcome rejected");
    return raw / total;
}

RealVector conditional_prob_prepost(const KrausSet& a, const PrePostEnsemble& e) {
    if (a.cols() != e.pre.dim() || a.rows() != e.post.dim())
        throw DimensionError("conditional_prob_prepost: dimension mismatch");
    RealVector raw(a.size());
    for (int k = 0; k < a.size(); ++k)
        raw(k) = std::norm(e.post.vec().dot(a.op(k) * e.pre.vec()));
    double total = raw.sum();
    if (total <= tol::kZeroAcceptance)
        throw ZeroAcceptanceError("conditional_prob_prepost: every outcome rejected");
    return raw / total;
}

RefinedPovm refine_to_rank_one(const Povm& p) {
    std::vector<Matrix> refined;
    std::vector<int> parent;
    for (int k = 0; k < p.size(); ++k) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(p.element(k));
        const RealVector& vals = es.eigenvalues();
        double lead = std::max(vals.maxCoeff(), 0.0);
        double cutoff = tol::kRankCutoff * std::max(lead, 1.0);
        for (Eigen::Index j = 0; j < vals.size(); ++j) {
            if (vals(j) <= cutoff) continue;
            Vector v = std::sqrt(vals(j)) * es.eigenvectors().col(j);
            refined.emplace_back(v * v.adjoint());
            parent.push_back(k);
        }
    }
    if (refined.empty()) throw ValidationError("refine_to_rank_one: POVM is numerically zero");
    return RefinedPovm{Povm(std::move(refined), p.mode()), std::move(parent)};
}

RealVector dilate_and_simulate(const KrausSet& a, const PrePostEnsemble& e) {
    if (a.cols() != e.pre.dim() || a.rows() != e.post.dim())
        throw DimensionError("dilate_and_simulate: dimension mismatch");
    const int n_ops = a.size();
    const int sys = std::max(a.rows(), a.cols());  // shared embedding space
    const int reg = n_ops + 1;                     // extra register slot for the deficit branch

    // Deficit operator B with B^dag B = 1 - sum A^dag A.
    Matrix gram = Matrix::Zero(a.cols(), a.cols());
    for (const auto& op : a.operators()) gram += op.adjoint() * op;
    Matrix deficit = sqrt_psd(Matrix(Matrix::Identity(a.cols(), a.cols()) - gram), tol::kPsd);

    auto embed = [sys](const Vector& v) {
        Vector out = Vector::Zero(sys);
        out.head(v.size()) = v;
        return out;
    };
    auto reg_basis = [reg](int k) {
        Vector out = Vector::Zero(reg);
        out(k) = 1.0;
        return out;
    };
    Vector p0(2), p1(2);
    p0 << 1.0, 0.0;
    p1 << 0.0, 1.0;

    // Dilated state on H_sys (x) H_R (x) H_P.
    Vector dilated = Vector::Zero(Eigen::Index(sys) * reg * 2);
    for (int k = 0; k < n_ops; ++k)
        dilated += kron(kron(embed(a.op(k) * e.pre.vec()), reg_basis(k)), p0);
    dilated += kron(kron(embed(deficit * e.pre.vec()), reg_basis(n_ops)), p1);

    RealVector raw(n_ops);
    for (int k = 0; k < n_ops; ++k) {
        Vector bra = kron(kron(embed(e.post.vec()), reg_basis(k)), p0);
        raw(k) = std::norm(bra.dot(dilated));
    }
    double total = raw.sum();
    if (total <= tol::kZeroAcceptance)
        throw ZeroAcceptanceError("dilate_and_simulate: every outcome rejected");
    return raw / total;
}

}  // namespace prepost
