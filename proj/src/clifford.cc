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

#include "cliffred/clifford.h"

#include <stdexcept>

namespace cliffred {

static std::vector<PauliOperator> z_images(const CliffordTableau &t) {
    std::vector<PauliOperator> gens;
    for (size_t k = 0; k < t.num_qubits(); k++) {
        gens.push_back(t.image_z(k));
    }
    return gens;
}

Clifford Clifford::identity(size_t n) {
    return from_tableau(CliffordTableau::identity(n));
}

Clifford Clifford::from_tableau(const CliffordTableau &tableau) {
    Clifford c;
    c.tableau_ = tableau;
    c.zero_image_ = StabilizerGroupState::from_generators(z_images(tableau));
    return c;
}

Clifford Clifford::pauli_sum(const PauliOperator &a, const PauliOperator &b) {
    size_t n = a.num_qubits();
    if (b.num_qubits() != n) {
        throw std::invalid_argument("Clifford::pauli_sum: size mismatch");
    }
    if (!a.is_hermitian() || !b.is_hermitian() || commutes(a, b)) {
        throw std::invalid_argument("Clifford::pauli_sum: needs anticommuting Hermitian Paulis, got " + a.str() +
                                    " and " + b.str());
    }
    PauliOperator ab = a * b;
    auto image = [&](const PauliOperator &p) {
        bool ca = commutes(p, a);
        bool cb = commutes(p, b);
        if (ca && cb) {
            return p;
        }
        if (!ca && !cb) {
            return -p;
        }
        // (a+b) p (a+b) / 2 = +-p a b
        PauliOperator r = p * ab;
        return ca ? r : -r;
    };
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    for (size_t k = 0; k < n; k++) {
        xs.push_back(image(PauliOperator::single(n, k, 'X')));
        zs.push_back(image(PauliOperator::single(n, k, 'Z')));
    }
    Clifford c;
    c.tableau_ = CliffordTableau::from_images(std::move(xs), std::move(zs));

    // (a|0> + b|0>) / sqrt(2), evaluated at one support point of the image state.
    StabilizerGroupState shape = StabilizerGroupState::from_generators(z_images(c.tableau_));
    BitVec y = shape.anchor();
    auto term = [&](const PauliOperator &p) {
        return y == p.x() ? Amplitude::i_pow(p.phase()) : Amplitude::zero_value();
    };
    Amplitude amp = (term(a) + term(b)) * Amplitude::make(0, -1);
    Amplitude reference = shape.anchor_amplitude();
    c.zero_image_ = shape.scaled(amp / reference);
    return c;
}

int Clifford::phase8() const {
    BitVec y = zero_image_.min_support_point();
    return zero_image_.amplitude(y).phase8;
}

StabilizerGroupState Clifford::apply(const StabilizerGroupState &phi) const {
    size_t n = num_qubits();
    if (phi.num_qubits() != n) {
        throw std::invalid_argument("Clifford::apply: size mismatch");
    }
    // |phi> = Pi_S |y0> / conj(phi_y0), so U|phi> = Pi_{U S U^dag} U X^y0 |0> / conj(phi_y0).
    const BitVec &y0 = phi.anchor();
    PauliOperator x_y0(y0, BitVec(n), 0);
    StabilizerGroupState moved = zero_image_.apply_pauli(tableau_.conjugate(x_y0));
    std::vector<PauliOperator> gens;
    for (const auto &g : phi.generators()) {
        gens.push_back(tableau_.conjugate(g));
    }
    auto projected = project_stabilizer_state(moved, gens);
    if (!projected.has_value()) {
        throw std::logic_error("Clifford::apply: anchor state annihilated");
    }
    Amplitude factor = Amplitude::make(0, projected->amp_half_log2) / phi.anchor_amplitude().conj();
    if (factor.half_log2 != 0) {
        throw std::logic_error("Clifford::apply: input state is not normalized");
    }
    return projected->state.scaled(factor);
}

Clifford operator*(const Clifford &a, const Clifford &b) {
    Clifford c;
    c.tableau_ = compose(a.tableau_, b.tableau_);
    c.zero_image_ = a.apply(b.zero_image_);
    return c;
}

}  // namespace cliffred
