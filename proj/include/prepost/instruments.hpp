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

#include <vector>

#include "prepost/linalg.hpp"
#include "prepost/state.hpp"

namespace prepost {

/// Exact: the elements resolve the identity. Subnormalized: they are bounded
/// by it, the deficit being the probability dumped into a failed fixed
/// post-selection. The flag is always explicit, never inferred.
enum class NormalizationMode { Exact, Subnormalized };

/// Positive operators M_k. Exact mode: sum_k M_k = 1; Subnormalized:
/// 1 - sum_k M_k is PSD. Elements are symmetrized on ingestion when the
/// Hermiticity defect is within tolerance and rejected otherwise.
class Povm {
  public:
    Povm(std::vector<Matrix> elements, NormalizationMode mode);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(elements_.size()); }
    NormalizationMode mode() const { return mode_; }
    const Matrix& element(int k) const { return elements_.at(k); }
    const std::vector<Matrix>& elements() const { return elements_; }

  private:
    std::vector<Matrix> elements_;
    NormalizationMode mode_;
    int dim_;
};

/// Kraus operators A_k : H^{cols} -> H^{rows}, all of one shape. Exact mode:
/// sum_k A_k^dag A_k = 1; Subnormalized: 1 - sum A^dag A is PSD.
class KrausSet {
  public:
    KrausSet(std::vector<Matrix> operators, NormalizationMode mode);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int size() const { return static_cast<int>(operators_.size()); }
    NormalizationMode mode() const { return mode_; }
    const Matrix& op(int k) const { return operators_.at(k); }
    const std::vector<Matrix>& operators() const { return operators_; }

  private:
    std::vector<Matrix> operators_;
    NormalizationMode mode_;
    int rows_, cols_;
};

/// The ensemble <post| |pre>. The two states may live in different spaces.
struct PrePostEnsemble {
    QuantumState pre;   // |psi_i>, dimension d'
    QuantumState post;  // <psi_f|, dimension d

    PrePostEnsemble(QuantumState pre, QuantumState post)
        : pre(std::move(pre)), post(std::move(post)) {}
};

/// Born rule for an Exact POVM: P(k) = <s|M_k|s>.
RealVector born_probability(const Povm& p, const QuantumState& s);

/// Conditional rule with a fixed post-selected state:
/// P(k) = <s|M_k|s> / sum_k' <s|M_k'|s>. Throws ZeroAcceptanceError when the
/// denominator underflows.
RealVector conditional_prob_fixed_post(const Povm& p, const QuantumState& s);

/// Conditional rule for a pre- and post-selected ensemble:
/// P(k) = |<post|A_k|pre>|^2 / sum_k' |<post|A_k'|pre>|^2.
RealVector conditional_prob_prepost(const KrausSet& a, const PrePostEnsemble& e);

struct RefinedPovm {
    Povm povm;
    // parent[j] = index of the original element the refined outcome j came from.
    std::vector<int> parent;
};

/// Eigendecomposes every element into rank-one pieces |m_kj><m_kj|, dropping
/// eigenvalues below the cutoff. Sum over j recovers M_k; the relabel map
/// lets an estimator inherit the parent outcome.
RefinedPovm refine_to_rank_one(const Povm& p);

/// Independent oracle for conditional_prob_prepost: realizes the instrument
/// as an isometry |psi> -> sum_k (A_k|psi>) (x) |k>_R (x) |0>_P, completing a
/// subnormalized set onto the |1>_P branch via sqrt(1 - sum A^dag A), applies
/// it to the pre state and projects onto <post| (x) <k|_R (x) <0|_P.
RealVector dilate_and_simulate(const KrausSet& a, const PrePostEnsemble& e);

}  // namespace prepost
