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

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cliffred/bitvec.h"
#include "cliffred/program.h"

namespace cliffred {

/// Which way every classical decision went, plus the computational-basis
/// string j on the non-output qubits (qubit q >= 1 of the branch frame).
struct DecisionRecord {
    std::vector<size_t> choices;
    std::vector<std::pair<std::string, int>> outcomes;
    BitVec j;

    std::string str() const;
};

/// One factor of a branch: a Clifford, or the projector (1 + p)/2.
struct BranchOp {
    std::variant<CliffordTableau, PauliOperator> op;

    bool is_projector() const { return op.index() == 1; }
    const CliffordTableau &clifford() const { return std::get<0>(op); }
    const PauliOperator &projector() const { return std::get<1>(op); }
};

/// K = sqrt(weight) * ops[last] ... ops[1] ops[0]: ops are listed in the
/// order they act. The list starts with the ancilla projectors and ends with
/// the projectors onto |j> of the traced qubits.
///
/// In the branch frame the output is qubit 0: a program whose output sits
/// elsewhere gets a trailing SWAP.
struct BranchKraus {
    DecisionRecord id;
    size_t num_qubits = 0;
    double weight = 1;
    std::vector<BranchOp> ops;
};

/// A decision path before the basis-string resolution.
struct DecisionPath {
    std::vector<size_t> choices;
    std::vector<std::pair<std::string, int>> outcomes;
    double weight = 1;
    std::vector<BranchOp> ops;  // without ancilla or basis projectors
};

struct BranchSet {
    std::vector<BranchKraus> branches;
    /// false when the cap cut the enumeration short.
    bool exhaustive = true;
    /// Number of branches the full enumeration has (saturates at UINT64_MAX).
    uint64_t total = 0;
};

constexpr size_t kDefaultBranchCap = size_t{1} << 20;

/// Decision tree in depth-first order: kept outcome +1 before -1, choice
/// options in file order. Throws std::runtime_error if a case reads a label
/// that was not recorded on the path.
std::vector<DecisionPath> expand_decisions(const ReductionProgram &program);

/// All branches (decision path x basis string), paths in depth-first order and
/// j strings in lexicographic order with qubit 1 most significant. Returns at
/// most cap branches and clears the exhaustive flag if there are more.
BranchSet expand_branches(const ReductionProgram &program, size_t cap = kDefaultBranchCap);

/// Builds the branch for one decision path and basis string j.
BranchKraus make_branch(const ReductionProgram &program, const DecisionPath &path, const BitVec &j);

}  // namespace cliffred
