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

#include "prepost/duality.hpp"
#include "prepost/errors.hpp"
#include "prepost/random_instances.hpp"
#include "prepost/use_discrimination.hpp"
#include "test_support.hpp"

using namespace prepost;
using prepost::testing::check_close;
using prepost::testing::check_matrix_close;

TEST_CASE("scalar povm maps to the scalar kraus") {
    Povm p({Matrix::Identity(1, 1)}, NormalizationMode::Exact);
    KrausSet a = povm_to_kraus(p, DualityInstance(1, 1));
    CHECK(a.mode() == NormalizationMode::Exact);
    check_matrix_close(a.op(0), Matrix::Identity(1, 1), 1e-15);
}

TEST_CASE("the maximally entangled element maps to the scaled identity") {
    Vector bell(4);
    double r = 1.0 / std::sqrt(2.0);
    bell << r, 0.0, 0.0, r;
    Povm p({Matrix(bell * bell.adjoint())}, NormalizationMode::Subnormalized);
    KrausSet a = povm_to_kraus(p, DualityInstance(2, 2));
    // m_{ab} = delta_ab / sqrt(2), then A = m / sqrt(d) = 1/2.
    check_matrix_close(a.op(0), Matrix(0.5 * Matrix::Identity(2, 2)), 1e-12);
}

TEST_CASE("non-rank-one elements are rejected") {
    Povm p({Matrix(0.5 * Matrix::Identity(4, 4))}, NormalizationMode::Subnormalized);
    CHECK_THROWS_AS(povm_to_kraus(p, DualityInstance(2, 2)), NonRankOneError);
}

TEST_CASE("identity kraus vectorizes with the documented scale") {
    KrausSet a({Matrix::Identity(2, 2)}, NormalizationMode::Exact);
    KrausToPovmResult res = kraus_to_povm(a, DualityInstance(2, 2));
    check_close(res.c, 1.0 / std::sqrt(2.0), 1e-14);
    CHECK(res.povm.mode() == NormalizationMode::Subnormalized);
    // |m> = c vec(1): corners at 1/2.
    check_close(std::abs(res.povm.element(0)(0, 0) - Complex(0.5)), 0.0, 1e-14);
    check_close(std::abs(res.povm.element(0)(0, 3) - Complex(0.5)), 0.0, 1e-14);
    check_close(std::abs(res.povm.element(0)(1, 1)), 0.0, 1e-14);
}

TEST_CASE("zero instruments are rejected") {
    KrausSet zero({Matrix::Zero(2, 2)}, NormalizationMode::Subnormalized);
    CHECK_THROWS_AS(kraus_to_povm(zero, DualityInstance(2, 2)), ZeroInstrumentError);
}

TEST_CASE("probability transport holds on random subnormalized instances") {
    RandomStream rng(61);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        int d = 1 + int(rng.uniform() * 4);
        int dp = 1 + int(rng.uniform() * 4);
        DualityInstance inst(d, dp);
        Povm p = random_rank_one_povm(d * dp, d * dp + 1, NormalizationMode::Subnormalized, rng);
        KrausSet a = povm_to_kraus(p, inst);
        CHECK(a.mode() == NormalizationMode::Subnormalized);
        PrePostEnsemble e = random_ensemble(d, dp, rng);
        QuantumState pair = tensor(e.post.conjugated(), e.pre);
        RealVector pm = conditional_prob_fixed_post(p, pair);
        RealVector pa = conditional_prob_prepost(a, e);
        worst = std::max(worst, (pm - pa).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("probability transport holds kraus-to-povm with round trips") {
    RandomStream rng(67);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        int d = 1 + int(rng.uniform() * 4);
        int dp = 1 + int(rng.uniform() * 4);
        DualityInstance inst(d, dp);
        KrausSet a = random_kraus_set(d, dp, 3, NormalizationMode::Subnormalized, rng);
        KrausToPovmResult mapped = kraus_to_povm(a, inst);
        PrePostEnsemble e = random_ensemble(d, dp, rng);
        QuantumState pair = tensor(e.post.conjugated(), e.pre);
        RealVector pa = conditional_prob_prepost(a, e);
        RealVector pm = conditional_prob_fixed_post(mapped.povm, pair);
        worst = std::max(worst, (pa - pm).cwiseAbs().maxCoeff());
        // Round trip preserves probabilities, not operators.
        KrausSet back = povm_to_kraus(mapped.povm, inst);
        RealVector pa2 = conditional_prob_prepost(back, e);
        worst = std::max(worst, (pa - pa2).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("exact povms map to exact kraus sets") {
    RandomStream rng(71);
    for (int i = 0; i < 50; ++i) {
        int d = 1 + int(rng.uniform() * 3);
        int dp = 1 + int(rng.uniform() * 3);
        Povm p = random_rank_one_povm(d * dp, d * dp + 2, NormalizationMode::Exact, rng);
        KrausSet a = povm_to_kraus(p, DualityInstance(d, dp));
        CHECK(a.mode() == NormalizationMode::Exact);
        Matrix gram = Matrix::Zero(dp, dp);
        for (const auto& op : a.operators()) gram += op.adjoint() * op;
        check_matrix_close(gram, Matrix::Identity(dp, dp), 1e-10);
    }
}

TEST_CASE("the kraus-to-povm scale cancels in conditional probabilities") {
    RandomStream rng(73);
    KrausSet a = random_kraus_set(3, 3, 4, NormalizationMode::Subnormalized, rng);
    DualityInstance inst(3, 3);
    KrausToPovmResult tight = kraus_to_povm(a, inst);
    // Rebuild by hand at half the scale.
    std::vector<Matrix> halved;
    for (const auto& m : tight.povm.elements()) halved.push_back(0.25 * m);
    Povm loose(std::move(halved), NormalizationMode::Subnormalized);
    PrePostEnsemble e = random_ensemble(3, 3, rng);
    QuantumState pair = tensor(e.post.conjugated(), e.pre);
    RealVector p1 = conditional_prob_fixed_post(tight.povm, pair);
    RealVector p2 = conditional_prob_fixed_post(loose, pair);
    CHECK((p1 - p2).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("covariant mappings commute with rotations") {
    RandomStream rng(79);
    std::vector<Direction> dirs;
    for (int i = 0; i < 20; ++i) dirs.push_back(random_direction(rng));

    SUBCASE("pattern (1,0,0,0) with the up seed") {
        CovariantPattern pat(1, 0, 0, 0);
        Vector seed(2);
        seed << 1.0, 0.0;
        CommutationReport rep = covariant_duality_check(seed, pat, dirs);
        CHECK(rep.directions_checked == 20);
        CHECK(rep.max_deviation <= 1e-10);
    }

    SUBCASE("identity direction commutes trivially") {
        CovariantPattern pat(1, 1, 1, 1);
        Vector seed = random_state(4, rng).vec();
        std::vector<Direction> z{Direction(0.0, 0.0)};
        CHECK(covariant_duality_check(seed, pat, z).max_deviation <= 1e-14);
    }

    SUBCASE("random seeds across the small patterns, both mapping directions") {
        for (int n = 0; n <= 2; ++n) {
            for (int m = 0; m <= 1; ++m) {
                if (n + m < 1) continue;
                for (int k = 0; k <= m; ++k) {
                    for (int l = 0; l <= n; ++l) {
                        CovariantPattern pat(n, m, k, l);
                        Vector seed = random_state(pat.post_dim() * pat.pre_dim(), rng).vec();
                        CHECK(covariant_duality_check(seed, pat, dirs).max_deviation <= 1e-10);
                        Matrix kraus_seed =
                            random_gaussian_matrix(pat.post_dim(), pat.pre_dim(), rng);
                        CHECK(covariant_duality_check(kraus_seed, pat, dirs).max_deviation <=
                              1e-10);
                    }
                }
            }
        }
    }

    SUBCASE("shape mismatches are rejected") {
        CovariantPattern pat(2, 1, 1, 0);
        Vector wrong = Vector::Ones(4);
        CHECK_THROWS_AS(covariant_duality_check(wrong, pat, dirs), DimensionError);
        CHECK_THROWS_AS(CovariantPattern(1, 0, 1, 0), ValidationError);
    }
}

TEST_CASE("entangled post-selection realizes the same statistics") {
    SUBCASE("identity instrument") {
        KrausSet a({Matrix::Identity(2, 2)}, NormalizationMode::Exact);
        PrePostEnsemble e(QuantumState({0.6, 0.8}), QuantumState({1.0, 0.0}));
        CHECK(aptv_equivalence(e, a).max_deviation <= 1e-12);
    }

    SUBCASE("projective instrument on a basis ensemble") {
        Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
        p0(0, 0) = 1.0;
        p1(1, 1) = 1.0;
        KrausSet a({p0, p1}, NormalizationMode::Exact);
        PrePostEnsemble e(QuantumState({1.0, 0.0}), QuantumState({1.0, 0.0}));
        CHECK(aptv_equivalence(e, a).max_deviation <= 1e-12);
    }

    SUBCASE("random instances up to dimension 4") {
        RandomStream rng(83);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            int d = 1 + int(rng.uniform() * 4);
            KrausSet a = random_kraus_set(d, d, 3, NormalizationMode::Subnormalized, rng);
            PrePostEnsemble e = random_ensemble(d, d, rng);
            worst = std::max(worst, aptv_equivalence(e, a).max_deviation);
        }
        CHECK(worst <= 1e-10);
    }

    SUBCASE("dimension mismatch is rejected") {
        RandomStream rng(89);
        KrausSet a = random_kraus_set(3, 2, 2, NormalizationMode::Subnormalized, rng);
        PrePostEnsemble e = random_ensemble(3, 2, rng);
        CHECK_THROWS_AS(aptv_equivalence(e, a), DimensionError);
    }
}

TEST_CASE("duality suite passes and the injected fault fails") {
    DualitySuiteReport ok = run_duality_suite(1, 40, 4);
    CHECK(ok.pass);
    CHECK(ok.max_probability_deviation <= 1e-10);

    DualitySuiteReport one = run_duality_suite(5, 1, 1);
    CHECK(one.pass);

    DualitySuiteReport faulted = run_duality_suite(1, 40, 4, 1e-10, 1.01);
    CHECK_FALSE(faulted.pass);
    CHECK(faulted.max_probability_deviation > 1e-10);
}

TEST_CASE("the use instrument beats the printed no-post optimum") {
    // Converse-of-the-normalized-mapping witness: the Exact Kraus triple's
    // inconclusive rate sits far below the no-post-selection closed form.
    for (double eps : {0.1, 0.05}) {
        UseParams p = UseParams::from_alpha_squared(0.8, eps);
        double pa0 = use_prepost_inconclusive(p);
        double pm0 = use_optimal_no_post(p).p_inconclusive;
        CHECK(pa0 < pm0 / 10.0);
    }
}
