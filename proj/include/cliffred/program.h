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

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cliffred/pauli.h"
#include "cliffred/tableau.h"

namespace cliffred {

struct Instruction;
using Sequence = std::vector<Instruction>;

enum class Keep { Plus, Minus, Both };

struct UnitaryOp {
    std::string gate;
    std::vector<size_t> targets;
    CliffordTableau tableau;
};

/// Measure a Hermitian Pauli and keep the listed outcomes. Each kept outcome
/// becomes its own branch; a dropped outcome is postselected away.
struct MeasureOp {
    PauliOperator pauli;
    Keep keep = Keep::Both;
    std::string label;
};

/// Classical randomness: option k runs with probability weight k.
struct ChoiceOp {
    std::vector<double> weights;
    std::vector<Sequence> options;
};

/// Classical feedforward on a previously recorded outcome.
struct CaseOp {
    std::string label;
    Sequence on_plus;
    Sequence on_minus;
};

struct Instruction {
    std::variant<UnitaryOp, MeasureOp, ChoiceOp, CaseOp> op;
    size_t line = 0;
};

/// An n-to-1 Clifford reduction. Qubits 0..n_resource-1 hold the resource,
/// the remaining n_ancilla start in |0>. The output is output_qubit, qubit 0
/// unless the file says otherwise.
struct ReductionProgram {
    size_t n_resource = 0;
    size_t n_ancilla = 0;
    size_t output_qubit = 0;
    Sequence instructions;

    size_t num_qubits() const { return n_resource + n_ancilla; }
};

class ProgramParseError : public std::runtime_error {
   public:
    ProgramParseError(size_t line, const std::string &message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// Parses the program text format:
///
///     qubits: <n> <m>
///     output: <q>                                  (optional)
///     unitary <gate> <targets...>
///     measure <pauli> keep <+1|-1|both> as <label>
///     choice <w>{...} <w>{...}
///     case <label> {+1: ...; -1: ...}
///
/// Statements end at a newline or ';'. '#' starts a comment. Qubit indices are
/// 0-based.
ReductionProgram parse_program(std::string_view text);
ReductionProgram load_program(const std::string &path);

/// Checks indices, Hermiticity, weights and label scoping. Throws
/// ProgramParseError (with the instruction's line, 0 if synthetic).
void validate_program(const ReductionProgram &program);

/// Text that parse_program reads back to an equivalent program.
std::string program_text(const ReductionProgram &program);

}  // namespace cliffred
