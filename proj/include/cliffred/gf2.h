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

#pragma once

#include <optional>
#include <vector>

#include "cliffred/bitvec.h"
#include "cliffred/pauli.h"

namespace cliffred {

/// Solves rows * v = rhs over GF(2) for v with num_vars entries. Returns one
/// solution (free variables zero) or nullopt when inconsistent.
std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const std::vector<bool> &rhs, size_t num_vars);

/// Rank over GF(2).
size_t gf2_rank(std::vector<BitVec> rows);

/// (x | z) concatenation of a Pauli's bits, length 2n.
BitVec symplectic_bits(const PauliOperator &p);
/// Row r such that dot(r, symplectic_bits(v)) equals the symplectic product <p, v>.
BitVec symplectic_row(const PauliOperator &p);
/// Hermitian Pauli with sign + whose bits are the given (x | z) vector.
PauliOperator pauli_from_symplectic(const BitVec &bits, size_t n);

/// Fully reduced echelon form over the (x | z) coordinates of mutually
/// commuting Paulis. Rows that reduce to a multiple of the identity are
/// dropped, so the result is independent.
std::vector<PauliOperator> reduced_echelon(std::vector<PauliOperator> rows);

/// Multiplies p by echelon rows until it is zero on every leading coordinate.
/// p must commute with the rows for the result to keep its Hermiticity.
PauliOperator reduce_by_echelon(PauliOperator p, const std::vector<PauliOperator> &echelon);

/// Echelon basis of a set of mutually commuting Hermitian Paulis that keeps
/// track of signs, so membership in the generated group can be decided
/// exactly.
class CommutingBasis {
   public:
    explicit CommutingBasis(size_t n) : n_(n) {}

    size_t num_qubits() const { return n_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<PauliOperator> &rows() const { return rows_; }

    /// Adds p unless its bits are already spanned. Returns true if added.
    bool insert(const PauliOperator &p);

    /// If +/-p (up to a power of i) lies in the generated group, returns the
    /// exponent t with p = i^t * (group element); nullopt otherwise.
    std::optional<int> membership(const PauliOperator &p) const;

    /// Reduces p against the pivots; the result has zero on every pivot.
    PauliOperator reduce(PauliOperator p) const;

   private:
    size_t n_;
    std::vector<PauliOperator> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace cliffred
