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

#include "cliffred/classify.h"

#include <fmt/format.h>

#include "cliffred/gf2.h"

namespace cliffred {

const char *form_name(Form f) {
    switch (f) {
        case Form::A1:
            return "A1";
        case Form::A2:
            return "A2";
        case Form::B:
            return "B";
    }
    return "?";
}

FormClassification classify(const CanonicalKraus &canon, const DecisionRecord &id) {
    size_t n = canon.num_qubits();
    if (id.j.size() + 1 != n) {
        throw std::invalid_argument("classify: basis string does not match the branch size");
    }
    CliffordTableau inv = canon.clifford.tableau().inverse();
    std::vector<PauliOperator> gens{inv.conjugate(PauliOperator::single(n, 0, 'X'))};
    for (size_t q = 1; q < n; q++) {
        PauliOperator z = PauliOperator::single(n, q, 'Z');
        gens.push_back(inv.conjugate(id.j.get(q - 1) ? -z : z));
    }
    // Only the relative phase of the two logical states matters, so |+_L> may
    // carry any global phase as long as |-_L> is derived from it exactly.
    StabilizerGroupState plus_l = StabilizerGroupState::from_generators(gens);
    StabilizerGroupState minus_l = plus_l.apply_pauli(inv.conjugate(PauliOperator::single(n, 0, 'Z')));

    auto rp = project_stabilizer_state(plus_l, canon.projector);
    auto rm = project_stabilizer_state(minus_l, canon.projector);
    FormClassification out;
    out.j = id.j;
    if (!rp && !rm) {
        throw ClassificationError("classify: both logical states are annihilated by a nonzero projector");
    }
    if (!rp || !rm) {
        out.form = Form::A1;
        out.output = rp ? Bloch{1, 0, 0} : Bloch{-1, 0, 0};
        out.amp_half_log2 = rp ? rp->amp_half_log2 : rm->amp_half_log2;
        if (rp) {
            out.plus = rp->state;
        } else {
            out.minus = rm->state;
        }
        return out;
    }
    if (rp->amp_half_log2 != rm->amp_half_log2) {
        throw ClassificationError(fmt::format("classify: unequal projection amplitudes 2^({}/2) and 2^({}/2)",
                                              rp->amp_half_log2, rm->amp_half_log2));
    }
    out.amp_half_log2 = rp->amp_half_log2;
    out.plus = rp->state;
    out.minus = rm->state;
    StateRelation rel;
    try {
        rel = state_relation(rp->state, rm->state);
    } catch (const StateRelationError &e) {
        throw ClassificationError(std::string("classify: ") + e.what());
    }
    if (rel.orthogonal) {
        out.form = Form::B;
        return out;
    }
    static const Bloch equatorial[4] = {{0, 0, 1}, {0, 1, 0}, {0, 0, -1}, {0, -1, 0}};
    out.form = Form::A2;
    out.relative_phase = rel.phase_exponent;
    out.output = equatorial[rel.phase_exponent & 3];
    return out;
}

namespace {

/// Drops the ancilla factor of a state that must equal |psi> (x) |0...0>.
StabilizerGroupState strip_ancillae(const StabilizerGroupState &s, size_t n_resource) {
    size_t n = s.num_qubits();
    std::vector<PauliOperator> reduced;
    std::vector<PauliOperator> zs;
    for (size_t a = n_resource; a < n; a++) {
        PauliOperator z = PauliOperator::single(n, a, 'Z');
        auto t = s.membership(z);
        if (!t || *t != 0) {
            throw ClassificationError(
                fmt::format("extract_reduction: logical state does not factor with ancilla {} in |0>", a));
        }
        zs.push_back(z);
    }
    for (PauliOperator g : s.generators()) {
        for (size_t a = n_resource; a < n; a++) {
            if (g.x().get(a)) {
                throw ClassificationError("extract_reduction: generator acts with X on an ancilla");
            }
            if (g.z().get(a)) {
                pauli_mul_inplace(g, zs[a - n_resource]);
            }
        }
        reduced.push_back(g.slice(0, n_resource));
    }
    reduced = reduced_echelon(std::move(reduced));
    if (reduced.size() != n_resource) {
        throw ClassificationError("extract_reduction: reduced state has the wrong rank");
    }
    StabilizerGroupState r = StabilizerGroupState::from_generators(reduced);
    BitVec y(n);
    for (size_t k = 0; k < n_resource; k++) {
        y.set(k, r.anchor().get(k));
    }
    return r.scaled(s.amplitude(y) / r.anchor_amplitude());
}

}  // namespace

ExtractedReduction extract_reduction(const FormClassification &b, size_t n_resource, size_t n_ancilla) {
    if (b.form != Form::B || !b.plus || !b.minus) {
        throw std::invalid_argument("extract_reduction: needs a form-B classification");
    }
    if (b.plus->num_qubits() != n_resource + n_ancilla) {
        throw std::invalid_argument("extract_reduction: qubit counts do not match the classification");
    }
    size_t n = n_resource;
    StabilizerGroupState plus = n_ancilla ? strip_ancillae(*b.plus, n) : *b.plus;
    StabilizerGroupState minus = n_ancilla ? strip_ancillae(*b.minus, n) : *b.minus;

    std::vector<PauliOperator> common;
    std::optional<PauliOperator> logical_x;
    for (const auto &g : plus.canonical_generators()) {
        auto t = minus.membership(g);
        if (!t) {
            throw ClassificationError("extract_reduction: logical states have different groups");
        }
        if (*t == 0) {
            common.push_back(g);
        } else if (!logical_x) {
            logical_x = g;
        } else {
            common.push_back(g * *logical_x);
        }
    }
    if (!logical_x || common.size() + 1 != n) {
        throw ClassificationError("extract_reduction: logical states are not a code basis");
    }
    common = reduced_echelon(std::move(common));
    PauliOperator xl = reduce_by_echelon(*logical_x, common);

    std::vector<BitVec> rows;
    std::vector<bool> rhs;
    for (const auto &g : common) {
        rows.push_back(symplectic_row(g));
        rhs.push_back(false);
    }
    rows.push_back(symplectic_row(xl));
    rhs.push_back(true);
    auto bits = gf2_solve(rows, rhs, 2 * n);
    if (!bits) {
        throw ClassificationError("extract_reduction: no logical Z");
    }
    PauliOperator zl = pauli_from_symplectic(*bits, n);

    StateRelation rel = state_relation(minus, plus.apply_pauli(zl));
    if (rel.orthogonal) {
        throw ClassificationError("extract_reduction: logical Z candidate fails to map |+''> to |-''>");
    }
    int k = rel.phase_exponent & 3;
    switch (k) {
        case 1:
            zl = (xl * zl).times_i(1);
            break;
        case 2:
            zl = -zl;
            break;
        case 3:
            zl = (xl * zl).times_i(3);
            break;
    }
    zl = reduce_by_echelon(zl, common);

    ExtractedReduction out;
    out.code = StabilizerCode(common, xl, zl);
    out.j_resource = BitVec(n - 1);
    out.j_ancilla = BitVec(n_ancilla);
    for (size_t q = 0; q + 1 < n; q++) {
        out.j_resource.set(q, b.j.get(q));
    }
    for (size_t a = 0; a < n_ancilla; a++) {
        out.j_ancilla.set(a, b.j.get(n - 1 + a));
    }
    out.decode = decoder_for(out.code, out.j_resource);
    out.phase_correction = k;
    return out;
}

}  // namespace cliffred
