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

#include "cliffred/pauli.h"

#include <stdexcept>

namespace cliffred {

PauliOperator::PauliOperator(BitVec x, BitVec z, uint8_t phase) : x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliOperator: x and z bit-vectors differ in length");
    }
}

PauliOperator PauliOperator::single(size_t n, size_t k, char pauli) {
    if (k >= n) {
        throw std::invalid_argument("PauliOperator::single: qubit " + std::to_string(k) + " out of range");
    }
    PauliOperator p(n);
    switch (pauli) {
        case 'X':
            p.x_.set(k, true);
            break;
        case 'Z':
            p.z_.set(k, true);
            break;
        case 'Y':
            p.x_.set(k, true);
            p.z_.set(k, true);
            p.phase_ = 1;
            break;
        case 'I':
            break;
        default:
            throw std::invalid_argument(std::string("PauliOperator::single: unknown Pauli '") + pauli + "'");
    }
    return p;
}

PauliOperator PauliOperator::from_str(std::string_view text) {
    int sign = 0;
    size_t pos = 0;
    auto starts = [&](std::string_view prefix) { return text.substr(pos, prefix.size()) == prefix; };
    bool negative = false;
    if (starts("+")) {
        pos += 1;
    } else if (starts("-")) {
        negative = true;
        pos += 1;
    } else if (starts("\xE2\x88\x92")) {  // U+2212 minus sign
        negative = true;
        pos += 3;
    }
    if (starts("i")) {
        sign = 1;
        pos += 1;
    }
    if (negative) {
        sign += 2;
    }

    std::string_view body = text.substr(pos);
    PauliOperator p(body.size());
    for (size_t k = 0; k < body.size(); k++) {
        switch (body[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x_.set(k, true);
                break;
            case 'Z':
                p.z_.set(k, true);
                break;
            case 'Y':
                p.x_.set(k, true);
                p.z_.set(k, true);
                break;
            default:
                throw std::invalid_argument("not a Pauli string: \"" + std::string(text) + "\"");
        }
    }
    p.set_phase(sign + static_cast<int>(p.num_y()));
    return p;
}

uint8_t PauliOperator::sign_exponent() const {
    return static_cast<uint8_t>((phase_ + 4 - (num_y() & 3)) & 3);
}

char PauliOperator::letter(size_t k) const {
    return "IXZY"[x_.get(k) | (z_.get(k) << 1)];
}

std::string PauliOperator::str() const {
    static const char *const kSigns[4] = {"+", "+i", "-", "-i"};
    std::string out = kSigns[sign_exponent()];
    out.reserve(out.size() + num_qubits());
    for (size_t k = 0; k < num_qubits(); k++) {
        out.push_back(letter(k));
    }
    return out;
}

PauliOperator PauliOperator::operator-() const {
    PauliOperator r = *this;
    r.phase_ = (phase_ + 2) & 3;
    return r;
}

PauliOperator PauliOperator::times_i(int power) const {
    PauliOperator r = *this;
    r.set_phase(phase_ + power);
    return r;
}

PauliOperator PauliOperator::slice(size_t begin, size_t len) const {
    PauliOperator r(len);
    for (size_t k = 0; k < len; k++) {
        r.x_.set(k, x_.get(begin + k));
        r.z_.set(k, z_.get(begin + k));
    }
    r.phase_ = phase_;
    return r;
}

PauliOperator PauliOperator::extended(size_t new_n) const {
    PauliOperator r(new_n);
    for (size_t k = 0; k < num_qubits(); k++) {
        r.x_.set(k, x_.get(k));
        r.z_.set(k, z_.get(k));
    }
    r.phase_ = phase_;
    return r;
}

static void check_sizes(const PauliOperator &a, const PauliOperator &b, const char *what) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(std::string(what) + ": size mismatch (" + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()) + " qubits)");
    }
}

void pauli_mul_inplace(PauliOperator &acc, const PauliOperator &b) {
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}
    size_t swaps = BitVec::and_popcount(acc.z(), b.x());
    acc.set_phase(acc.phase() + b.phase() + 2 * static_cast<int>(swaps & 1));
    acc.x() ^= b.x();
    acc.z() ^= b.z();
}

PauliOperator pauli_mul(const PauliOperator &a, const PauliOperator &b) {
    check_sizes(a, b, "pauli_mul");
    PauliOperator r = a;
    pauli_mul_inplace(r, b);
    return r;
}

bool commutes(const PauliOperator &a, const PauliOperator &b) {
    check_sizes(a, b, "commutes");
    return BitVec::dot(a.x(), b.z()) == BitVec::dot(a.z(), b.x());
}

PauliOperator hermitian_pauli(std::string_view text) {
    PauliOperator p = PauliOperator::from_str(text);
    if (!p.is_hermitian()) {
        throw std::invalid_argument("stabilizer generator must be Hermitian: \"" + std::string(text) + "\"");
    }
    return p;
}

size_t PauliHash::operator()(const PauliOperator &p) const {
    size_t h = p.phase() * 0x9E3779B97F4A7C15ull;
    for (size_t w = 0; w < p.x().num_words(); w++) {
        h ^= std::hash<uint64_t>{}(p.x().word(w)) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h ^= std::hash<uint64_t>{}(p.z().word(w) * 31) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace cliffred
