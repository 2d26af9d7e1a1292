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

#include "prepost/duality.hpp"

#include <cmath>

#include "prepost/errors.hpp"
#include "prepost/random_instances.hpp"
#include "prepost/rng.hpp"
#include "prepost/rotations.hpp"
#include "prepost/tolerances.hpp"

namespace prepost {

namespace {

// A(a,b) = m_{ab} / sqrt(d) where m_{ab} = <m|(|a>|b>) = conj of the seed
// amplitude; the seed is stored post-index major, matching vectorize().
Matrix kraus_from_seed(const Vector& seed, int post_dim, int pre_dim) {
    return unvectorize(seed.conjugate(), post_dim, pre_dim) / std::sqrt(double(post_dim));
}

// Inverse map without the scale: |m> amplitudes are c * conj(A_{ab}).
Vector seed_from_kraus(const Matrix& a) { return vectorize(a.conjugate()); }

}  // namespace

DualityInstance::DualityInstance(int post_dim, int pre_dim)
    : post_dim(post_dim), pre_dim(pre_dim) {
    if (post_dim < 1 || pre_dim < 1)
        throw ValidationError("DualityInstance: dimensions must be >= 1");
}

KrausSet povm_to_kraus(const Povm& p, const DualityInstance& inst) {
    if (p.dim() != inst.post_dim * inst.pre_dim)
        throw DimensionError("povm_to_kraus: POVM does not factor as d * d'");
    std::vector<Matrix> ops;
    ops.reserve(p.size());
    for (int k = 0; k < p.size(); ++k) {
        Vector mk = rank_one_vector(p.element(k), tol::kRankCutoff);
        ops.push_back(kraus_from_seed(mk, inst.post_dim, inst.pre_dim));
    }
    return KrausSet(std::move(ops), p.mode());
}

KrausToPovmResult kraus_to_povm(const KrausSet& a, const DualityInstance& inst) {
    if (a.rows() != inst.post_dim || a.cols() != inst.pre_dim)
        throw DimensionError("kraus_to_povm: operator shape does not match the instance");
    const int dim = inst.post_dim * inst.pre_dim;
    Matrix gram = Matrix::Zero(dim, dim);
    std::vector<Vector> seeds;
    seeds.reserve(a.size());
    for (int k = 0; k < a.size(); ++k) {
        seeds.push_back(seed_from_kraus(a.op(k)));
        gram += seeds.back() * seeds.back().adjoint();
    }
    double lead = max_eigenvalue(gram);
    if (lead <= tol::kZeroAcceptance)
        throw ZeroInstrumentError("kraus_to_povm: all operators are numerically zero");
    double c = 1.0 / std::sqrt(lead);
    std::vector<Matrix> elements;
    elements.reserve(seeds.size());
    for (const auto& s : seeds) elements.emplace_back((c * s) * (c * s).adjoint());
    return KrausToPovmResult{Povm(std::move(elements), NormalizationMode::Subnormalized), c};
}

CovariantPattern::CovariantPattern(int n, int m, int k, int l) : n(n), m(m), k(k), l(l) {
    if (n < 0 || m < 0 || k < 0 || l < 0)
        throw ValidationError("CovariantPattern: negative entry");
    if (l > n || k > m)
        throw ValidationError("CovariantPattern: requires l <= n and k <= m");
    if (n + m < 1) throw ValidationError("CovariantPattern: empty pattern");
}

namespace {

// Output-side rotation of the Kraus family: U^(x k) (x) conj(U)^(x l).
Matrix rotation_out(const CovariantPattern& pat, const Direction& d) {
    Matrix u = su2_rotation(d);
    return kron(kron_power(u, pat.k), kron_power(u.conjugate(), pat.l));
}

// Input-side rotation: U^(x (n-l)) (x) conj(U)^(x (m-k)).
Matrix rotation_in(const CovariantPattern& pat, const Direction& d) {
    Matrix u = su2_rotation(d);
    return kron(kron_power(u, pat.n - pat.l), kron_power(u.conjugate(), pat.m - pat.k));
}

}  // namespace

CommutationReport covariant_duality_check(const Vector& povm_seed, const CovariantPattern& pat,
                                          std::span<const Direction> directions) {
    const int d = pat.post_dim();
    const int dp = pat.pre_dim();
    if (povm_seed.size() != Eigen::Index(d) * dp)
        throw DimensionError("covariant_duality_check: seed does not match the pattern");
    Matrix a0 = kraus_from_seed(povm_seed, d, dp);
    CommutationReport report;
    for (const auto& dir : directions) {
        Matrix w_out = rotation_out(pat, dir);
        Matrix w_in = rotation_in(pat, dir);
        Matrix mapped_then_rotated = w_out * a0 * w_in.adjoint();
        Vector rotated_seed = kron(w_out.conjugate(), w_in) * povm_seed;
        Matrix rotated_then_mapped = kraus_from_seed(rotated_seed, d, dp);
        report.max_deviation = std::max(report.max_deviation,
                                        max_abs(Matrix(mapped_then_rotated - rotated_then_mapped)));
        ++report.directions_checked;
    }
    return report;
}

CommutationReport covariant_duality_check(const Matrix& kraus_seed, const CovariantPattern& pat,
                                          std::span<const Direction> directions) {
    const int d = pat.post_dim();
    const int dp = pat.pre_dim();
    if (kraus_seed.rows() != d || kraus_seed.cols() != dp)
        throw DimensionError("covariant_duality_check: seed does not match the pattern");
    double norm = kraus_seed.norm();
    if (norm <= 0.0) throw ZeroInstrumentError("covariant_duality_check: zero seed");
    double c = 1.0 / norm;  // rotation-invariant, so both routes share it
    Vector m0 = c * seed_from_kraus(kraus_seed);
    CommutationReport report;
    for (const auto& dir : directions) {
        Matrix w_out = rotation_out(pat, dir);
        Matrix w_in = rotation_in(pat, dir);
        Vector mapped_then_rotated = kron(w_out.conjugate(), w_in) * m0;
        Vector rotated_then_mapped =
            c * seed_from_kraus(Matrix(w_out * kraus_seed * w_in.adjoint()));
        report.max_deviation = std::max(report.max_deviation,
                                        max_abs(Vector(mapped_then_rotated - rotated_then_mapped)));
        ++report.directions_checked;
    }
    return report;
}

EquivalenceReport aptv_equivalence(const PrePostEnsemble& e, const KrausSet& a) {
    if (a.rows() != a.cols())
        throw DimensionError("aptv_equivalence: operators must be square");
    const int d = a.rows();
    if (e.pre.dim() != d || e.post.dim() != d)
        throw DimensionError("aptv_equivalence: requires matching dimensions d = d'");

    RealVector direct = conditional_prob_prepost(a, e);

    Vector entangled = Vector::Zero(Eigen::Index(d) * d);
    for (int j = 0; j < d; ++j) entangled(Eigen::Index(j) * d + j) = 1.0 / std::sqrt(double(d));
    QuantumState big_post(entangled);
    QuantumState big_pre = tensor(e.post.conjugated(), e.pre);

    std::vector<Matrix> lifted;
    lifted.reserve(a.size());
    for (const auto& op : a.operators()) lifted.push_back(kron(Matrix::Identity(d, d), op));
    KrausSet big(std::move(lifted), a.mode());

    RealVector realized = conditional_prob_prepost(big, PrePostEnsemble(big_pre, big_post));
    return EquivalenceReport{(direct - realized).cwiseAbs().maxCoeff()};
}

namespace {

RealVector prepost_probs_raw(const std::vector<Matrix>& ops, const PrePostEnsemble& e) {
    RealVector raw(Eigen::Index(ops.size()));
    for (std::size_t k = 0; k < ops.size(); ++k)
        raw(k) = std::norm(e.post.vec().dot(ops[k] * e.pre.vec()));
    double total = raw.sum();
    if (total <= tol::kZeroAcceptance)
        throw ZeroAcceptanceError("duality suite: zero acceptance");
    return raw / total;
}

double completeness_defect(const std::vector<Matrix>& gram_terms, NormalizationMode mode) {
    Matrix sum = Matrix::Zero(gram_terms.front().rows(), gram_terms.front().cols());
    for (const auto& t : gram_terms) sum += t;
    Matrix deficit = Matrix::Identity(sum.rows(), sum.cols()) - sum;
    if (mode == NormalizationMode::Exact) return max_abs(deficit);
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(deficit, tol::kHermitian),
                                             Eigen::EigenvaluesOnly);
    return std::max(0.0, -es.eigenvalues().minCoeff());
}

}  // namespace

DualitySuiteReport run_duality_suite(std::uint64_t seed, int instances, int max_dim,
                                     double tolerance, double fault_scale) {
    if (instances < 1) throw ValidationError("run_duality_suite: instances must be >= 1");
    if (max_dim < 1) throw ValidationError("run_duality_suite: max_dim must be >= 1");
    DualitySuiteReport report;
    report.instances = instances;
    report.tolerance = tolerance;

    for (int i = 0; i < instances; ++i) {
        RandomStream rng = RandomStream::substream(seed, static_cast<std::uint64_t>(i));
        int d = 1 + static_cast<int>(rng.uniform() * max_dim);
        int dp = 1 + static_cast<int>(rng.uniform() * max_dim);
        d = std::min(d, max_dim);
        dp = std::min(dp, max_dim);
        DualityInstance inst(d, dp);
        int outcomes = d * dp + 1;
        PrePostEnsemble ensemble(random_state(dp, rng), random_state(d, rng));
        QuantumState conj_pair = tensor(ensemble.post.conjugated(), ensemble.pre);

        // Subnormalized rank-one POVM -> Kraus (Theorem 1, part 1).
        Povm sub_povm =
            random_rank_one_povm(d * dp, outcomes, NormalizationMode::Subnormalized, rng);
        KrausSet mapped = povm_to_kraus(sub_povm, inst);
        std::vector<Matrix> mapped_ops = mapped.operators();
        if (fault_scale != 1.0 && i == 0) mapped_ops.front() *= fault_scale;
        RealVector pm = conditional_prob_fixed_post(sub_povm, conj_pair);
        RealVector pa = prepost_probs_raw(mapped_ops, ensemble);
        report.max_probability_deviation =
            std::max(report.max_probability_deviation, (pm - pa).cwiseAbs().maxCoeff());
        {
            std::vector<Matrix> grams;
            for (const auto& op : mapped_ops) grams.push_back(op.adjoint() * op);
            report.max_mode_violation = std::max(
                report.max_mode_violation, completeness_defect(grams, NormalizationMode::Subnormalized));
        }

        // Subnormalized Kraus -> rank-one POVM (Theorem 1, part 2) plus the
        // probability round trip.
        KrausSet sub_kraus =
            random_kraus_set(d, dp, outcomes, NormalizationMode::Subnormalized, rng);
        const Povm povm_back = kraus_to_povm(sub_kraus, inst).povm;
        RealVector pa2 = conditional_prob_prepost(sub_kraus, ensemble);
        RealVector pm2 = conditional_prob_fixed_post(povm_back, conj_pair);
        report.max_probability_deviation =
            std::max(report.max_probability_deviation, (pa2 - pm2).cwiseAbs().maxCoeff());
        report.max_mode_violation =
            std::max(report.max_mode_violation,
                     completeness_defect(povm_back.elements(), NormalizationMode::Subnormalized));
        KrausSet round_trip = povm_to_kraus(povm_back, inst);
        RealVector pa3 = conditional_prob_prepost(round_trip, ensemble);
        report.max_probability_deviation =
            std::max(report.max_probability_deviation, (pa3 - pa2).cwiseAbs().maxCoeff());

        // Exact rank-one POVM -> Exact Kraus (Theorem 2).
        Povm exact_povm =
            random_rank_one_povm(d * dp, std::max(outcomes, d * dp), NormalizationMode::Exact, rng);
        KrausSet exact_mapped = povm_to_kraus(exact_povm, inst);
        RealVector pm3 = conditional_prob_fixed_post(exact_povm, conj_pair);
        RealVector pa4 = conditional_prob_prepost(exact_mapped, ensemble);
        report.max_probability_deviation =
            std::max(report.max_probability_deviation, (pm3 - pa4).cwiseAbs().maxCoeff());
        {
            std::vector<Matrix> grams;
            for (const auto& op : exact_mapped.operators()) grams.push_back(op.adjoint() * op);
            report.max_mode_violation = std::max(report.max_mode_violation,
                                                 completeness_defect(grams, NormalizationMode::Exact));
        }
    }
    report.pass = report.max_probability_deviation <= tolerance &&
                  report.max_mode_violation <= tolerance;
    return report;
}

}  // namespace prepost
