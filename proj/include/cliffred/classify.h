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
#include <stdexcept>
#include <string>

#include "cliffred/canonical.h"
#include "cliffred/product_resource.h"
#include "cliffred/stabilizer_code.h"
#include "cliffred/stabilizer_state.h"

namespace cliffred {

enum class Form { A1, A2, B };

const char *form_name(Form f);

/// Result of splitting K = k (|+,j><+_L| + |-,j><-_L|) P with
/// |+/-_L> = C^dag |+/-, j> and projecting the logical states through P.
///
/// A1: only one of P|+/-_L> survives, the output is |+> or |->.
/// A2: both survive and P|-_L> = i^N P|+_L>; the output is
///     (|+> + (-i)^N |->)/sqrt 2, a Z or Y eigenstate.
/// B:  both survive and are orthogonal; K is a rank-2 stabilizer reduction.
struct FormClassification {
    Form form = Form::A1;
    /// A1/A2: Bloch vector of the fixed output state.
    Bloch output{0, 0, 0};
    /// A2: N.
    int relative_phase = 0;
    /// Common amplitude factor |P|+/-_L>| = 2^(amp_half_log2/2).
    int amp_half_log2 = 0;
    /// Normalized P|+_L> and P|-_L> (those that survive).
    std::optional<StabilizerGroupState> plus;
    std::optional<StabilizerGroupState> minus;
    /// j of the branch (qubits 1..n+m-1).
    BitVec j;
};

/// Thrown when the states fed to classification or extraction break the
/// dichotomy the construction guarantees. Always an internal bug.
class ClassificationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

FormClassification classify(const CanonicalKraus &canon, const DecisionRecord &id);

/// Equivalent ancilla-free stabilizer reduction of a form-B branch: the
/// projector onto code followed by decode reproduces the branch operator
/// restricted to the resource qubits, up to a scalar.
struct ExtractedReduction {
    StabilizerCode code;
    CliffordTableau decode;
    /// j restricted to the resource qubits 1..n_resource-1.
    BitVec j_resource;
    /// j on the ancilla qubits.
    BitVec j_ancilla;
    /// k with (first logical Z candidate)|+''> = i^k |-''>; the returned
    /// logical Z has this phase folded in so that it maps |+''> to |-''>.
    int phase_correction = 0;
};

ExtractedReduction extract_reduction(const FormClassification &b, size_t n_resource, size_t n_ancilla);

}  // namespace cliffred
