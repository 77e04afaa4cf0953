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

#include <array>
#include <vector>

#include "cliffred/pauli.h"

namespace cliffred {

using Bloch = std::array<double, 3>;

double dot(const Bloch &a, const Bloch &b);
double norm(const Bloch &a);

/// Product state rho_0 (x) rho_1 (x) ... with each factor given by its Bloch
/// vector, rho_k = (1 + r_k . sigma) / 2.
class ProductResource {
   public:
    ProductResource() = default;
    /// Throws std::invalid_argument if some |r_k| > 1 + 1e-12.
    explicit ProductResource(std::vector<Bloch> bloch);
    static ProductResource copies(const Bloch &r, size_t n) { return ProductResource(std::vector<Bloch>(n, r)); }

    size_t num_qubits() const { return bloch_.size(); }
    const Bloch &bloch(size_t k) const { return bloch_[k]; }
    const std::vector<Bloch> &blochs() const { return bloch_; }

    /// Appends m ancilla qubits in |0> (Bloch (0,0,1)).
    ProductResource with_ancillae(size_t m) const;

   private:
    std::vector<Bloch> bloch_;
};

/// tr[p rho] = prod_k tr[p_k rho_k], exact up to floating point. Throws for
/// non-Hermitian p or size mismatch.
double product_expectation(const PauliOperator &p, const ProductResource &rho);

}  // namespace cliffred
