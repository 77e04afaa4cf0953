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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliffred/pauli.h"
#include "cliffred/tableau.h"

namespace cliffred {

class CodeValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// An [[n,1]] stabilizer code: n-1 signed commuting independent generators and
/// a logical pair with X_L Z_L = -Z_L X_L, both commuting with the group.
class StabilizerCode {
   public:
    StabilizerCode() = default;
    /// Validates everything; failures name the offending pair.
    StabilizerCode(std::vector<PauliOperator> generators, PauliOperator logical_x, PauliOperator logical_z);

    size_t num_qubits() const { return n_; }
    const std::vector<PauliOperator> &generators() const { return generators_; }
    const PauliOperator &logical_x() const { return logical_x_; }
    const PauliOperator &logical_z() const { return logical_z_; }
    /// i X_L Z_L
    PauliOperator logical_y() const;

    /// True if both codes have the same group (as a set of signed elements).
    bool same_group(const StabilizerCode &other) const;

    /// File form, one line per entry.
    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> generators_;
    PauliOperator logical_x_;
    PauliOperator logical_z_;
};

/// Parses
///
///     n: <int>
///     gen: <signed pauli>     (n-1 times)
///     Xl: <signed pauli>
///     Zl: <signed pauli>
///
/// Errors carry the line number.
StabilizerCode parse_code(std::string_view text);
StabilizerCode load_code(const std::string &path);

/// A decoding Clifford D with D X_L D^dag = X_0, D Z_L D^dag = Z_0 and
/// D g_q D^dag = (-1)^{j[q-1]} Z_q for the q-th generator (q = 1..n-1), so
/// D maps the logical states to |+/-> (x) |j>. j defaults to all zeros.
CliffordTableau decoder_for(const StabilizerCode &code);
CliffordTableau decoder_for(const StabilizerCode &code, const BitVec &j);

/// Completes images for X_0..X_{n-1} given images for Z_0..Z_{n-1} and the
/// image of X_0, returning the tableau. Solves for destabilizers.
CliffordTableau complete_tableau(const PauliOperator &image_x0, const std::vector<PauliOperator> &image_z);

}  // namespace cliffred
