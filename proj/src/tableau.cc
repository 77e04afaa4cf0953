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

#include "cliffred/tableau.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cliffred/gf2.h"

namespace cliffred {

CliffordTableau CliffordTableau::identity(size_t n) {
    CliffordTableau t;
    for (size_t k = 0; k < n; k++) {
        t.image_x_.push_back(PauliOperator::single(n, k, 'X'));
        t.image_z_.push_back(PauliOperator::single(n, k, 'Z'));
    }
    return t;
}

CliffordTableau CliffordTableau::from_images(std::vector<PauliOperator> image_x, std::vector<PauliOperator> image_z) {
    size_t n = image_x.size();
    if (image_z.size() != n) {
        throw std::invalid_argument("CliffordTableau: image_x and image_z have different lengths");
    }
    auto name = [n](size_t i) { return (i < n ? "X" : "Z") + std::to_string(i % n); };
    std::vector<const PauliOperator *> all;
    for (auto &p : image_x) {
        all.push_back(&p);
    }
    for (auto &p : image_z) {
        all.push_back(&p);
    }
    for (size_t i = 0; i < all.size(); i++) {
        if (all[i]->num_qubits() != n) {
            throw std::invalid_argument("CliffordTableau: image of " + name(i) + " has wrong qubit count");
        }
        if (!all[i]->is_hermitian()) {
            throw std::invalid_argument("CliffordTableau: image of " + name(i) + " is not Hermitian");
        }
    }
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = i + 1; j < all.size(); j++) {
            bool should_anticommute = (j == i + n && i < n);
            if (commutes(*all[i], *all[j]) == should_anticommute) {
                throw std::invalid_argument("CliffordTableau: symplectic violation between images of " + name(i) +
                                            " and " + name(j));
            }
        }
    }
    CliffordTableau t;
    t.image_x_ = std::move(image_x);
    t.image_z_ = std::move(image_z);
    return t;
}

PauliOperator CliffordTableau::image_y(size_t k) const {
    return (image_x_[k] * image_z_[k]).times_i(1);
}

PauliOperator CliffordTableau::conjugate(const PauliOperator &p) const {
    size_t n = num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("conjugate: size mismatch (" + std::to_string(n) + "-qubit tableau, " +
                                    std::to_string(p.num_qubits()) + "-qubit Pauli)");
    }
    PauliOperator out = PauliOperator::identity(n);
    out.set_phase(p.phase());
    for (size_t k = 0; k < n; k++) {
        if (p.x().get(k)) {
            pauli_mul_inplace(out, image_x_[k]);
        }
        if (p.z().get(k)) {
            pauli_mul_inplace(out, image_z_[k]);
        }
    }
    return out;
}

CliffordTableau CliffordTableau::inverse() const {
    size_t n = num_qubits();
    // Column i of the linear map holds the bits of the image of generator i.
    std::vector<BitVec> columns;
    for (size_t k = 0; k < n; k++) {
        columns.push_back(symplectic_bits(image_x_[k]));
    }
    for (size_t k = 0; k < n; k++) {
        columns.push_back(symplectic_bits(image_z_[k]));
    }
    std::vector<BitVec> rows(2 * n, BitVec(2 * n));
    for (size_t r = 0; r < 2 * n; r++) {
        for (size_t c = 0; c < 2 * n; c++) {
            rows[r].set(c, columns[c].get(r));
        }
    }

    auto preimage = [&](const PauliOperator &target) {
        BitVec t = symplectic_bits(target);
        std::vector<bool> rhs(2 * n);
        for (size_t r = 0; r < 2 * n; r++) {
            rhs[r] = t.get(r);
        }
        auto sol = gf2_solve(rows, rhs, 2 * n);
        if (!sol.has_value()) {
            throw std::logic_error("CliffordTableau::inverse: tableau is singular");
        }
        // The solution's coordinates are the generators to multiply together.
        BitVec x(n);
        BitVec z(n);
        for (size_t k = 0; k < n; k++) {
            x.set(k, sol->get(k));
            z.set(k, sol->get(n + k));
        }
        PauliOperator q(std::move(x), std::move(z), 0);
        q.set_phase(static_cast<int>(q.num_y()));
        PauliOperator image = conjugate(q);
        if (image == -target) {
            q = -q;
        } else if (image != target) {
            throw std::logic_error("CliffordTableau::inverse: sign recovery failed");
        }
        return q;
    };

    CliffordTableau inv;
    for (size_t k = 0; k < n; k++) {
        inv.image_x_.push_back(preimage(PauliOperator::single(n, k, 'X')));
        inv.image_z_.push_back(preimage(PauliOperator::single(n, k, 'Z')));
    }
    return inv;
}

bool CliffordTableau::is_identity() const {
    return *this == identity(num_qubits());
}

std::string CliffordTableau::str() const {
    std::string out;
    for (size_t k = 0; k < num_qubits(); k++) {
        out += "X" + std::to_string(k) + "->" + image_x_[k].str() + " ";
        out += "Z" + std::to_string(k) + "->" + image_z_[k].str();
        if (k + 1 < num_qubits()) {
            out += " ";
        }
    }
    return out;
}

CliffordTableau compose(const CliffordTableau &c1, const CliffordTableau &c2) {
    if (c1.num_qubits() != c2.num_qubits()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    for (size_t k = 0; k < c1.num_qubits(); k++) {
        xs.push_back(c1.conjugate(c2.image_x(k)));
        zs.push_back(c1.conjugate(c2.image_z(k)));
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

namespace {

std::string upper(std::string_view s) {
    std::string r(s);
    std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return std::toupper(c); });
    return r;
}

struct GateDef {
    const char *name;
    size_t arity;
    // Images of X_0, Z_0[, X_1, Z_1] on the gate's own qubits.
    const char *images[4];
};

const GateDef kGates[] = {
    {"I", 1, {"+X", "+Z"}},
    {"H", 1, {"+Z", "+X"}},
    {"S", 1, {"+Y", "+Z"}},
    {"S_DAG", 1, {"-Y", "+Z"}},
    {"X", 1, {"+X", "-Z"}},
    {"Y", 1, {"-X", "-Z"}},
    {"Z", 1, {"-X", "+Z"}},
    {"T_ROT", 1, {"+Y", "+X"}},
    {"CNOT", 2, {"+XX", "+ZI", "+IX", "+ZZ"}},
    {"CX", 2, {"+XX", "+ZI", "+IX", "+ZZ"}},
    {"CZ", 2, {"+XZ", "+ZI", "+ZX", "+IZ"}},
    {"SWAP", 2, {"+IX", "+IZ", "+XI", "+ZI"}},
};

const GateDef &find_gate(std::string_view name) {
    std::string key = upper(name);
    for (const auto &g : kGates) {
        if (key == g.name) {
            return g;
        }
    }
    throw std::invalid_argument("unknown gate \"" + std::string(name) + "\"");
}

PauliOperator embed(const PauliOperator &local, const std::vector<size_t> &targets, size_t n) {
    PauliOperator out(n);
    for (size_t j = 0; j < targets.size(); j++) {
        out.x().set(targets[j], local.x().get(j));
        out.z().set(targets[j], local.z().get(j));
    }
    out.set_phase(local.phase());
    return out;
}

}  // namespace

size_t named_gate_arity(std::string_view name) {
    return find_gate(name).arity;
}

CliffordTableau named_gate(std::string_view name, const std::vector<size_t> &targets, size_t n) {
    const GateDef &g = find_gate(name);
    if (targets.size() != g.arity) {
        throw std::invalid_argument("gate " + std::string(g.name) + " takes " + std::to_string(g.arity) +
                                    " target(s), got " + std::to_string(targets.size()));
    }
    for (size_t j = 0; j < targets.size(); j++) {
        if (targets[j] >= n) {
            throw std::invalid_argument("gate " + std::string(g.name) + ": qubit index " + std::to_string(targets[j]) +
                                        " out of range for " + std::to_string(n) + " qubits");
        }
        for (size_t i = 0; i < j; i++) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument("gate " + std::string(g.name) + ": repeated target qubit");
            }
        }
    }
    CliffordTableau base = CliffordTableau::identity(n);
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    for (size_t k = 0; k < n; k++) {
        xs.push_back(base.image_x(k));
        zs.push_back(base.image_z(k));
    }
    for (size_t j = 0; j < g.arity; j++) {
        xs[targets[j]] = embed(PauliOperator::from_str(g.images[2 * j]), targets, n);
        zs[targets[j]] = embed(PauliOperator::from_str(g.images[2 * j + 1]), targets, n);
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

}  // namespace cliffred
