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
#include <functional>
#include <string>
#include <string_view>

#include "cliffred/bitvec.h"

namespace cliffred {

/// A signed n-qubit Pauli operator in normal form
///
///     i^phase * X^x[0] Z^z[0] (x) X^x[1] Z^z[1] (x) ...
///
/// with the X factor ordered before the Z factor on every qubit. A qubit with
/// both bits set therefore holds XZ = -iY; the text form hides this by
/// printing the sign relative to Y.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x_(n), z_(n) {}
    PauliOperator(BitVec x, BitVec z, uint8_t phase);

    static PauliOperator identity(size_t n) { return PauliOperator(n); }
    /// Single-qubit Pauli ('X', 'Y' or 'Z') on qubit k, sign +1.
    static PauliOperator single(size_t n, size_t k, char pauli);
    /// Parses "[+|-|+i|-i]" followed by characters from IXYZ (or '_').
    static PauliOperator from_str(std::string_view text);

    size_t num_qubits() const { return x_.size(); }
    const BitVec &x() const { return x_; }
    const BitVec &z() const { return z_; }
    BitVec &x() { return x_; }
    BitVec &z() { return z_; }
    uint8_t phase() const { return phase_; }
    void set_phase(int phase) { phase_ = static_cast<uint8_t>(((phase % 4) + 4) % 4); }

    size_t num_y() const { return BitVec::and_popcount(x_, z_); }
    /// Exponent s of the displayed sign i^s, i.e. phase minus the Y count.
    uint8_t sign_exponent() const;
    bool is_hermitian() const { return ((phase_ + num_y()) & 1) == 0; }
    bool is_identity_up_to_phase() const { return !x_.any() && !z_.any(); }
    size_t weight() const { return (x_ | z_).popcount(); }

    /// 'I', 'X', 'Y' or 'Z' on qubit k.
    char letter(size_t k) const;
    std::string str() const;

    PauliOperator operator-() const;
    PauliOperator times_i(int power) const;

    /// Copy restricted to qubits [begin, begin+len); the phase is kept.
    PauliOperator slice(size_t begin, size_t len) const;
    /// Copy padded with identity up to new_n qubits.
    PauliOperator extended(size_t new_n) const;

    bool operator==(const PauliOperator &other) const = default;

   private:
    BitVec x_;
    BitVec z_;
    uint8_t phase_ = 0;
};

/// Product a*b with exact phase. Throws std::invalid_argument on size mismatch.
PauliOperator pauli_mul(const PauliOperator &a, const PauliOperator &b);
inline PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) { return pauli_mul(a, b); }

/// In-place right multiplication; returns nothing, avoids an allocation.
void pauli_mul_inplace(PauliOperator &acc, const PauliOperator &b);

/// True iff the symplectic inner product of a and b vanishes.
bool commutes(const PauliOperator &a, const PauliOperator &b);

/// Validating constructor for stabilizer generators: throws unless Hermitian.
PauliOperator hermitian_pauli(std::string_view text);

struct PauliHash {
    size_t operator()(const PauliOperator &p) const;
};

}  // namespace cliffred
