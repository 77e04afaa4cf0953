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

#include "cliffred/gf2.h"

#include <stdexcept>

namespace cliffred {

std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const std::vector<bool> &rhs, size_t num_vars) {
    if (rows.size() != rhs.size()) {
        throw std::invalid_argument("gf2_solve: rows/rhs length mismatch");
    }
    // Augmented rows: variables in [0, num_vars), rhs in bit num_vars.
    std::vector<BitVec> m;
    m.reserve(rows.size());
    for (size_t r = 0; r < rows.size(); r++) {
        BitVec row(num_vars + 1);
        for (size_t c = 0; c < num_vars; c++) {
            row.set(c, rows[r].get(c));
        }
        row.set(num_vars, rhs[r]);
        m.push_back(std::move(row));
    }

    std::vector<size_t> pivot_cols;
    size_t rank = 0;
    for (size_t c = 0; c < num_vars && rank < m.size(); c++) {
        size_t sel = rank;
        while (sel < m.size() && !m[sel].get(c)) {
            sel++;
        }
        if (sel == m.size()) {
            continue;
        }
        std::swap(m[rank], m[sel]);
        for (size_t r = 0; r < m.size(); r++) {
            if (r != rank && m[r].get(c)) {
                m[r] ^= m[rank];
            }
        }
        pivot_cols.push_back(c);
        rank++;
    }
    for (size_t r = rank; r < m.size(); r++) {
        if (m[r].get(num_vars)) {
            return std::nullopt;
        }
    }
    BitVec sol(num_vars);
    for (size_t r = 0; r < rank; r++) {
        sol.set(pivot_cols[r], m[r].get(num_vars));
    }
    return sol;
}

size_t gf2_rank(std::vector<BitVec> rows) {
    if (rows.empty()) {
        return 0;
    }
    size_t num_cols = rows[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < num_cols && rank < rows.size(); c++) {
        size_t sel = rank;
        while (sel < rows.size() && !rows[sel].get(c)) {
            sel++;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[sel]);
        for (size_t r = rank + 1; r < rows.size(); r++) {
            if (rows[r].get(c)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

BitVec symplectic_bits(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVec v(2 * n);
    for (size_t k = 0; k < n; k++) {
        v.set(k, p.x().get(k));
        v.set(n + k, p.z().get(k));
    }
    return v;
}

BitVec symplectic_row(const PauliOperator &p) {
    size_t n = p.num_qubits();
    BitVec v(2 * n);
    for (size_t k = 0; k < n; k++) {
        v.set(k, p.z().get(k));
        v.set(n + k, p.x().get(k));
    }
    return v;
}

PauliOperator pauli_from_symplectic(const BitVec &bits, size_t n) {
    BitVec x(n);
    BitVec z(n);
    for (size_t k = 0; k < n; k++) {
        x.set(k, bits.get(k));
        z.set(k, bits.get(n + k));
    }
    size_t ny = BitVec::and_popcount(x, z);
    return PauliOperator(std::move(x), std::move(z), static_cast<uint8_t>(ny & 3));
}

static std::optional<size_t> first_set(const PauliOperator &p) {
    size_t n = p.num_qubits();
    for (size_t k = 0; k < n; k++) {
        if (p.x().get(k)) {
            return k;
        }
    }
    for (size_t k = 0; k < n; k++) {
        if (p.z().get(k)) {
            return n + k;
        }
    }
    return std::nullopt;
}

static bool has_coord(const PauliOperator &p, size_t coord) {
    size_t n = p.num_qubits();
    return coord < n ? p.x().get(coord) : p.z().get(coord - n);
}

PauliOperator CommutingBasis::reduce(PauliOperator p) const {
    for (size_t r = 0; r < rows_.size(); r++) {
        if (has_coord(p, pivots_[r])) {
            pauli_mul_inplace(p, rows_[r]);
        }
    }
    return p;
}

bool CommutingBasis::insert(const PauliOperator &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("CommutingBasis::insert: size mismatch");
    }
    PauliOperator residual = reduce(p);
    auto pivot = first_set(residual);
    if (!pivot.has_value()) {
        return false;
    }
    // Store the reduced row so that later pivots never reappear in earlier rows
    // during a forward sweep; the group generated is unchanged.
    rows_.push_back(std::move(residual));
    pivots_.push_back(*pivot);
    return true;
}

std::optional<int> CommutingBasis::membership(const PauliOperator &p) const {
    PauliOperator residual = reduce(p);
    if (!residual.is_identity_up_to_phase()) {
        return std::nullopt;
    }
    return static_cast<int>(residual.phase());
}

namespace {

bool has_coord_xz(const PauliOperator &p, size_t c) {
    size_t n = p.num_qubits();
    return c < n ? p.x().get(c) : p.z().get(c - n);
}

std::optional<size_t> leading_coord(const PauliOperator &p) {
    for (size_t c = 0; c < 2 * p.num_qubits(); c++) {
        if (has_coord_xz(p, c)) {
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<PauliOperator> reduced_echelon(std::vector<PauliOperator> rows) {
    if (rows.empty()) {
        return rows;
    }
    size_t n = rows[0].num_qubits();
    size_t rank = 0;
    for (size_t c = 0; c < 2 * n && rank < rows.size(); c++) {
        size_t sel = rank;
        while (sel < rows.size() && !has_coord_xz(rows[sel], c)) {
            sel++;
        }
        if (sel == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[sel]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && has_coord_xz(rows[r], c)) {
                pauli_mul_inplace(rows[r], rows[rank]);
            }
        }
        rank++;
    }
    rows.resize(rank);
    return rows;
}

PauliOperator reduce_by_echelon(PauliOperator p, const std::vector<PauliOperator> &echelon) {
    for (const auto &row : echelon) {
        auto c = leading_coord(row);
        if (c && has_coord_xz(p, *c)) {
            pauli_mul_inplace(p, row);
        }
    }
    return p;
}

}  // namespace cliffred
