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

#include "cliffred/stabilizer_state.h"
#include "cliffred/tableau.h"

namespace cliffred {

/// A Clifford unitary with its global phase: the tableau fixes the action up to
/// phase, and the exact image of |0...0> fixes the phase. Column x of the
/// unitary is image(X^x) applied to that state.
class Clifford {
   public:
    Clifford() = default;
    static Clifford identity(size_t n);
    /// Phase convention: the first nonzero entry of U|0...0> is real positive.
    static Clifford from_tableau(const CliffordTableau &tableau);
    /// (a + b) / sqrt(2) for anticommuting Hermitian Paulis a and b.
    static Clifford pauli_sum(const PauliOperator &a, const PauliOperator &b);

    size_t num_qubits() const { return tableau_.num_qubits(); }
    const CliffordTableau &tableau() const { return tableau_; }
    const StabilizerGroupState &zero_image() const { return zero_image_; }

    /// U = w^phase8() * from_tableau(tableau()), w = exp(i pi/4).
    int phase8() const;

    /// U|phi> with exact phase.
    StabilizerGroupState apply(const StabilizerGroupState &phi) const;

    /// Operator product a * b (b acts first).
    friend Clifford operator*(const Clifford &a, const Clifford &b);

   private:
    CliffordTableau tableau_;
    StabilizerGroupState zero_image_;
};

}  // namespace cliffred
