// Copyright 2026 The Cliffred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffred/canonical.h"

#include <fmt/format.h>

#include "cliffred/gf2.h"

namespace cliffred {

NormalizeResult normalize_ops(size_t n, const std::vector<BranchOp> &ops, double weight) {
    CanonicalKraus k;
    k.weight = weight;
    k.clifford = Clifford::identity(n);
    CommutingBasis basis(n);
    for (const auto &op : ops) {
        if (!op.is_projector()) {
            if (op.clifford().num_qubits() != n) {
                throw std::invalid_argument("normalize: Clifford size mismatch");
            }
            k.clifford = Clifford::from_tableau(op.clifford()) * k.clifford;
            continue;
        }
        const PauliOperator &q = op.projector();
        if (q.num_qubits() != n || !q.is_hermitian()) {
            throw std::invalid_argument("normalize: projector " + q.str() + " is not a Hermitian Pauli on " +
                                        std::to_string(n) + " qubits");
        }
        // (1+q)/2 C = C (1+q')/2
        PauliOperator qp = k.clifford.tableau().inverse().conjugate(q);
        if (qp.is_identity_up_to_phase()) {
            if (qp.phase() == 2) {
                return ZeroBranch{"projector onto -I"};
            }
            continue;
        }
        size_t first = k.projector.size();
        for (size_t i = 0; i < k.projector.size(); i++) {
            if (!commutes(k.projector[i], qp)) {
                if (first == k.projector.size()) {
                    first = i;
                } else {
                    k.projector[i] = k.projector[i] * k.projector[first];
                }
            }
        }
        if (first == k.projector.size()) {
            auto t = basis.membership(qp);
            if (t) {
                if (*t == 2) {
                    return ZeroBranch{fmt::format("projector {} contradicts the accumulated group", qp.str())};
                }
                continue;
            }
            k.projector.push_back(qp);
            basis.insert(qp);
            continue;
        }
        // Only projector[first] anticommutes with qp now; the rest commute with
        // both, so the merge Clifford passes through them unchanged.
        k.clifford = k.clifford * Clifford::pauli_sum(qp, k.projector[first]);
        k.scale_half_log2 -= 1;
        k.merges++;
        basis = CommutingBasis(n);
        for (const auto &g : k.projector) {
            basis.insert(g);
        }
    }
    return k;
}

NormalizeResult normalize(const BranchKraus &branch) {
    return normalize_ops(branch.num_qubits, branch.ops, branch.weight);
}

std::string format_scale(int half_log2) {
    if (half_log2 % 2 == 0) {
        return fmt::format("{}", half_log2 / 2);
    }
    return fmt::format("{}/2", half_log2);
}

}  // namespace cliffred
