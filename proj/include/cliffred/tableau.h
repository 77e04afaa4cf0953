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

#include <string>
#include <string_view>
#include <vector>

#include "cliffred/pauli.h"

namespace cliffred {

/// A Clifford operation up to global phase, stored as the images of the
/// single-qubit generators under conjugation: image_x[k] = C X_k C^dag and
/// image_z[k] = C Z_k C^dag.
class CliffordTableau {
   public:
    CliffordTableau() = default;
    static CliffordTableau identity(size_t n);
    /// Validates Hermiticity and the symplectic relations; throws
    /// std::invalid_argument naming the offending pair.
    static CliffordTableau from_images(std::vector<PauliOperator> image_x, std::vector<PauliOperator> image_z);

    size_t num_qubits() const { return image_x_.size(); }
    const PauliOperator &image_x(size_t k) const { return image_x_[k]; }
    const PauliOperator &image_z(size_t k) const { return image_z_[k]; }
    /// C Y_k C^dag = i * image_x[k] * image_z[k].
    PauliOperator image_y(size_t k) const;

    /// C p C^dag with exact sign.
    PauliOperator conjugate(const PauliOperator &p) const;
    /// Solves the symplectic system for the tableau of C^dag.
    CliffordTableau inverse() const;

    bool is_identity() const;
    std::string str() const;

    bool operator==(const CliffordTableau &other) const = default;

   private:
    std::vector<PauliOperator> image_x_;
    std::vector<PauliOperator> image_z_;
};

inline PauliOperator conjugate(const CliffordTableau &c, const PauliOperator &p) { return c.conjugate(p); }

/// Tableau of the operator product c1 * c2 (c2 acts first).
CliffordTableau compose(const CliffordTableau &c1, const CliffordTableau &c2);

/// Gate names (case-insensitive): I, H, S, S_DAG, X, Y, Z, T_ROT (X->Y->Z->X),
/// CNOT/CX (control, target), CZ, SWAP. The result acts as identity on the
/// other qubits of an n-qubit register.
CliffordTableau named_gate(std::string_view name, const std::vector<size_t> &targets, size_t n);

/// Number of qubits a named gate acts on; throws for unknown names.
size_t named_gate_arity(std::string_view name);

}  // namespace cliffred
