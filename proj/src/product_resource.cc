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

#include "cliffred/product_resource.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cliffred {

double dot(const Bloch &a, const Bloch &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Bloch &a) {
    return std::sqrt(dot(a, a));
}

ProductResource::ProductResource(std::vector<Bloch> bloch) : bloch_(std::move(bloch)) {
    for (size_t k = 0; k < bloch_.size(); k++) {
        if (norm(bloch_[k]) > 1 + 1e-12) {
            throw std::invalid_argument("ProductResource: Bloch vector of qubit " + std::to_string(k) +
                                        " has norm > 1");
        }
    }
}

ProductResource ProductResource::with_ancillae(size_t m) const {
    std::vector<Bloch> out = bloch_;
    out.insert(out.end(), m, Bloch{0, 0, 1});
    return ProductResource(std::move(out));
}

double product_expectation(const PauliOperator &p, const ProductResource &rho) {
    if (p.num_qubits() != rho.num_qubits()) {
        throw std::invalid_argument("product_expectation: size mismatch");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("product_expectation: " + p.str() + " is not Hermitian");
    }
    // XZ = -iY on each Y site; the displayed sign absorbs those factors.
    double acc = p.sign_exponent() == 2 ? -1.0 : 1.0;
    for (size_t k = 0; k < p.num_qubits(); k++) {
        bool x = p.x().get(k);
        bool z = p.z().get(k);
        if (x && z) {
            acc *= rho.bloch(k)[1];
        } else if (x) {
            acc *= rho.bloch(k)[0];
        } else if (z) {
            acc *= rho.bloch(k)[2];
        }
    }
    return acc;
}

}  // namespace cliffred
