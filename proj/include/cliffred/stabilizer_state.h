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
#include <vector>

#include "cliffred/amplitude.h"
#include "cliffred/pauli.h"

namespace cliffred {

/// A pure n-qubit stabilizer state with an exact global phase.
///
/// The group is given by n independent, commuting, Hermitian generators. The
/// phase is pinned by an anchor: one computational basis state in the support
/// together with its exact amplitude. Every other amplitude follows from the
/// group, so relative phases between states (the i^N of two projected logical
/// states) are exact.
class StabilizerGroupState {
   public:
    StabilizerGroupState() = default;

    /// Validates the generators. The phase is fixed so that the amplitude at
    /// the smallest basis index in the support is real and positive.
    static StabilizerGroupState from_generators(std::vector<PauliOperator> generators);
    /// Computational basis state |bits>, amplitude exactly 1.
    static StabilizerGroupState basis_state(size_t n, const BitVec &bits);
    /// Parses e.g. {"+X", "-Z"}; convenience for tests and fixtures.
    static StabilizerGroupState from_strings(const std::vector<std::string> &generators);

    size_t num_qubits() const { return n_; }
    const std::vector<PauliOperator> &generators() const { return generators_; }
    const BitVec &anchor() const { return anchor_; }
    const Amplitude &anchor_amplitude() const { return anchor_amp_; }

    /// Exact amplitude <y|psi>.
    Amplitude amplitude(const BitVec &y) const;
    /// Smallest basis index (qubit k = bit k) with nonzero amplitude.
    BitVec min_support_point() const;
    /// Some basis point in the support.
    BitVec support_point() const;

    /// If p lies in +/-(group) returns 0 or 2 (exponent of i); nullopt otherwise.
    std::optional<int> membership(const PauliOperator &p) const;

    /// q|psi> for any Pauli q (not necessarily Hermitian).
    StabilizerGroupState apply_pauli(const PauliOperator &q) const;
    /// factor * |psi>; factor must have unit magnitude.
    StabilizerGroupState scaled(const Amplitude &factor) const;
    /// Same state with the anchor moved to the smallest support index.
    StabilizerGroupState reanchored() const;

    /// Generators in a canonical row-reduced form, for printing and set equality.
    std::vector<PauliOperator> canonical_generators() const;

   private:
    friend struct StateBuilder;
    size_t n_ = 0;
    std::vector<PauliOperator> generators_;
    BitVec anchor_;
    Amplitude anchor_amp_;
};

/// Result of postselecting a state onto the joint +1 eigenspace of a list of
/// commuting Hermitian Paulis: the renormalized state (phase exact) and the
/// amplitude factor |P psi| = 2^(amp_half_log2 / 2).
struct ProjectionResult {
    StabilizerGroupState state;
    int amp_half_log2 = 0;
    /// Number of projectors that acted non-trivially.
    size_t num_random = 0;

    double amp_log2() const { return 0.5 * amp_half_log2; }
};

/// nullopt means the state was annihilated.
std::optional<ProjectionResult> project_stabilizer_state(const StabilizerGroupState &state,
                                                         const std::vector<PauliOperator> &projector_gens);

/// Thrown by state_relation when the inputs' groups differ beyond signs.
class StateRelationError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

struct StateRelation {
    bool orthogonal = false;
    /// When not orthogonal: s2 = i^N * s1.
    int phase_exponent = 0;
};

StateRelation state_relation(const StabilizerGroupState &s1, const StabilizerGroupState &s2);

}  // namespace cliffred
