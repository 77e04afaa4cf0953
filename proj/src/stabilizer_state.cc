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

#include "cliffred/stabilizer_state.h"

#include <algorithm>

#include "cliffred/gf2.h"

namespace cliffred {

namespace {

/// Generators reduced on their X parts: rows with an X pivot, and the
/// remaining diagonal (Z-type) rows. All rows are signed group elements.
struct XEchelon {
    std::vector<PauliOperator> x_rows;
    std::vector<size_t> x_pivots;
    std::vector<PauliOperator> z_rows;
};

std::optional<size_t> first_x(const PauliOperator &p) {
    for (size_t k = 0; k < p.num_qubits(); k++) {
        if (p.x().get(k)) {
            return k;
        }
    }
    return std::nullopt;
}

XEchelon x_echelon(const std::vector<PauliOperator> &gens) {
    XEchelon e;
    for (const auto &g : gens) {
        PauliOperator row = g;
        for (size_t r = 0; r < e.x_rows.size(); r++) {
            if (row.x().get(e.x_pivots[r])) {
                pauli_mul_inplace(row, e.x_rows[r]);
            }
        }
        auto pivot = first_x(row);
        if (pivot.has_value()) {
            e.x_rows.push_back(std::move(row));
            e.x_pivots.push_back(*pivot);
        } else {
            e.z_rows.push_back(std::move(row));
        }
    }
    return e;
}

/// Group element whose X part equals v, or nullopt.
std::optional<PauliOperator> element_with_x(const XEchelon &e, const BitVec &v, size_t n) {
    PauliOperator s = PauliOperator::identity(n);
    BitVec rest = v;
    for (size_t r = 0; r < e.x_rows.size(); r++) {
        if (rest.get(e.x_pivots[r])) {
            rest ^= e.x_rows[r].x();
            pauli_mul_inplace(s, e.x_rows[r]);
        }
    }
    if (rest.any()) {
        return std::nullopt;
    }
    return s;
}

/// Phase c with q|x> = c |x ^ q.x>.
Amplitude pauli_column_phase(const PauliOperator &q, const BitVec &x) {
    return Amplitude::i_pow(q.phase() + 2 * static_cast<int>(BitVec::dot(q.z(), x)));
}

BitVec solve_support(const XEchelon &e, size_t n) {
    std::vector<BitVec> rows;
    std::vector<bool> rhs;
    for (const auto &d : e.z_rows) {
        if (!d.z().any()) {
            throw std::invalid_argument("stabilizer state: generators are dependent");
        }
        rows.push_back(d.z());
        // d = i^p Z^dz with p in {0, 2}; need (-1)^(dz.y) = i^p.
        rhs.push_back(d.phase() == 2);
    }
    auto sol = gf2_solve(rows, rhs, n);
    if (!sol.has_value()) {
        throw std::invalid_argument("stabilizer state: generators are inconsistent (-I in group)");
    }
    return *sol;
}

BitVec minimize_in_coset(BitVec y, const XEchelon &e, size_t n) {
    // Echelon form of the X parts keyed by highest set bit.
    std::vector<BitVec> basis;
    for (const auto &r : e.x_rows) {
        basis.push_back(r.x());
    }
    std::vector<BitVec> ech;
    std::vector<size_t> top;
    for (size_t bit = n; bit-- > 0;) {
        auto it = std::find_if(basis.begin(), basis.end(), [bit](const BitVec &b) { return b.get(bit); });
        if (it == basis.end()) {
            continue;
        }
        BitVec pivot_row = *it;
        basis.erase(it);
        for (auto &b : basis) {
            if (b.get(bit)) {
                b ^= pivot_row;
            }
        }
        ech.push_back(pivot_row);
        top.push_back(bit);
    }
    for (size_t i = 0; i < ech.size(); i++) {
        if (y.get(top[i])) {
            y ^= ech[i];
        }
    }
    return y;
}

}  // namespace

struct StateBuilder {
    static StabilizerGroupState make(size_t n, std::vector<PauliOperator> gens, BitVec anchor, Amplitude amp) {
        StabilizerGroupState s;
        s.n_ = n;
        s.generators_ = std::move(gens);
        s.anchor_ = std::move(anchor);
        s.anchor_amp_ = amp;
        return s;
    }
};

StabilizerGroupState StabilizerGroupState::from_generators(std::vector<PauliOperator> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("stabilizer state needs at least one generator");
    }
    size_t n = generators[0].num_qubits();
    if (generators.size() != n) {
        throw std::invalid_argument("stabilizer state on " + std::to_string(n) + " qubits needs " + std::to_string(n) +
                                    " generators, got " + std::to_string(generators.size()));
    }
    for (size_t i = 0; i < n; i++) {
        if (generators[i].num_qubits() != n) {
            throw std::invalid_argument("stabilizer state: generator size mismatch");
        }
        if (!generators[i].is_hermitian()) {
            throw std::invalid_argument("stabilizer state: generator " + generators[i].str() + " is not Hermitian");
        }
        for (size_t j = 0; j < i; j++) {
            if (!commutes(generators[i], generators[j])) {
                throw std::invalid_argument("stabilizer state: generators " + generators[j].str() + " and " +
                                            generators[i].str() + " anticommute");
            }
        }
    }
    std::vector<BitVec> bits;
    for (const auto &g : generators) {
        bits.push_back(symplectic_bits(g));
    }
    if (gf2_rank(bits) != n) {
        throw std::invalid_argument("stabilizer state: generators are dependent");
    }
    XEchelon e = x_echelon(generators);
    BitVec y = minimize_in_coset(solve_support(e, n), e, n);
    int k = static_cast<int>(e.x_rows.size());
    return StateBuilder::make(n, std::move(generators), std::move(y), Amplitude::make(0, -k));
}

StabilizerGroupState StabilizerGroupState::basis_state(size_t n, const BitVec &bits) {
    std::vector<PauliOperator> gens;
    for (size_t k = 0; k < n; k++) {
        PauliOperator z = PauliOperator::single(n, k, 'Z');
        gens.push_back(bits.get(k) ? -z : z);
    }
    return StateBuilder::make(n, std::move(gens), bits, Amplitude::one());
}

StabilizerGroupState StabilizerGroupState::from_strings(const std::vector<std::string> &generators) {
    std::vector<PauliOperator> gens;
    for (const auto &s : generators) {
        gens.push_back(hermitian_pauli(s));
    }
    return from_generators(std::move(gens));
}

Amplitude StabilizerGroupState::amplitude(const BitVec &y) const {
    XEchelon e = x_echelon(generators_);
    auto s = element_with_x(e, y ^ anchor_, n_);
    if (!s.has_value()) {
        return Amplitude::zero_value();
    }
    // psi_y = <y|s|psi> = c_s(anchor) psi_anchor.
    return pauli_column_phase(*s, anchor_) * anchor_amp_;
}

BitVec StabilizerGroupState::support_point() const {
    return anchor_;
}

BitVec StabilizerGroupState::min_support_point() const {
    XEchelon e = x_echelon(generators_);
    return minimize_in_coset(anchor_, e, n_);
}

std::optional<int> StabilizerGroupState::membership(const PauliOperator &p) const {
    CommutingBasis basis(n_);
    for (const auto &g : generators_) {
        basis.insert(g);
    }
    return basis.membership(p);
}

StabilizerGroupState StabilizerGroupState::apply_pauli(const PauliOperator &q) const {
    if (q.num_qubits() != n_) {
        throw std::invalid_argument("apply_pauli: size mismatch");
    }
    std::vector<PauliOperator> gens;
    gens.reserve(n_);
    for (const auto &g : generators_) {
        gens.push_back(commutes(g, q) ? g : -g);
    }
    return StateBuilder::make(n_, std::move(gens), anchor_ ^ q.x(), pauli_column_phase(q, anchor_) * anchor_amp_);
}

StabilizerGroupState StabilizerGroupState::scaled(const Amplitude &factor) const {
    if (factor.zero || factor.half_log2 != 0) {
        throw std::invalid_argument("StabilizerGroupState::scaled: factor must have unit magnitude");
    }
    return StateBuilder::make(n_, generators_, anchor_, anchor_amp_ * factor);
}

StabilizerGroupState StabilizerGroupState::reanchored() const {
    BitVec y = min_support_point();
    Amplitude a = amplitude(y);
    return StateBuilder::make(n_, generators_, std::move(y), a);
}

std::vector<PauliOperator> StabilizerGroupState::canonical_generators() const {
    return reduced_echelon(generators_);
}

std::optional<ProjectionResult> project_stabilizer_state(const StabilizerGroupState &state,
                                                         const std::vector<PauliOperator> &projector_gens) {
    size_t n = state.num_qubits();
    for (size_t i = 0; i < projector_gens.size(); i++) {
        if (projector_gens[i].num_qubits() != n) {
            throw std::invalid_argument("project_stabilizer_state: size mismatch");
        }
        if (!projector_gens[i].is_hermitian()) {
            throw std::invalid_argument("project_stabilizer_state: projector " + projector_gens[i].str() +
                                        " is not Hermitian");
        }
        for (size_t j = 0; j < i; j++) {
            if (!commutes(projector_gens[i], projector_gens[j])) {
                throw std::invalid_argument("project_stabilizer_state: projectors do not commute");
            }
        }
    }

    ProjectionResult result{state, 0, 0};
    for (const auto &g : projector_gens) {
        const StabilizerGroupState &cur = result.state;
        const auto &gens = cur.generators();
        size_t first = gens.size();
        for (size_t i = 0; i < gens.size(); i++) {
            if (!commutes(gens[i], g)) {
                first = i;
                break;
            }
        }
        if (first == gens.size()) {
            auto t = cur.membership(g);
            if (!t.has_value()) {
                throw std::logic_error("project_stabilizer_state: commuting Pauli outside a full-rank group");
            }
            if (*t == 2) {
                return std::nullopt;
            }
            continue;
        }

        std::vector<PauliOperator> next = gens;
        for (size_t i = first + 1; i < next.size(); i++) {
            if (!commutes(next[i], g)) {
                pauli_mul_inplace(next[i], gens[first]);
            }
        }
        next[first] = g;

        // (P psi)_y = (psi_y + <y|g|psi>) / 2, renormalized by sqrt(2).
        StabilizerGroupState shape = StateBuilder::make(n, next, cur.anchor(), Amplitude::one());
        XEchelon e = x_echelon(next);
        BitVec y = solve_support(e, n);
        BitVec y_src = y ^ g.x();
        Amplitude a = cur.amplitude(y) + pauli_column_phase(g, y_src) * cur.amplitude(y_src);
        if (a.zero) {
            throw std::logic_error("project_stabilizer_state: support point has zero amplitude");
        }
        a = a * Amplitude::make(0, -1);
        result.state = StateBuilder::make(n, std::move(next), std::move(y), a);
        result.amp_half_log2 -= 1;
        result.num_random += 1;
    }
    return result;
}

StateRelation state_relation(const StabilizerGroupState &s1, const StabilizerGroupState &s2) {
    if (s1.num_qubits() != s2.num_qubits()) {
        throw std::invalid_argument("state_relation: size mismatch");
    }
    bool orthogonal = false;
    for (const auto &g : s1.generators()) {
        auto t = s2.membership(g);
        if (!t.has_value()) {
            throw StateRelationError("state_relation: generator " + g.str() +
                                     " of the first state is outside the second state's group");
        }
        if (*t == 2) {
            orthogonal = true;
        }
    }
    if (orthogonal) {
        return {true, 0};
    }
    Amplitude a1 = s1.amplitude(s1.anchor());
    Amplitude a2 = s2.amplitude(s1.anchor());
    Amplitude ratio = a2 / a1;
    if (ratio.half_log2 != 0 || (ratio.phase8 & 1)) {
        throw StateRelationError("state_relation: states differ by a non-Gaussian-integer phase or norm");
    }
    return {false, ratio.phase8 / 2};
}

}  // namespace cliffred
