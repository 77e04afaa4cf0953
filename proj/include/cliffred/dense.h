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

#include <Eigen/Dense>

#include "cliffred/canonical.h"
#include "cliffred/clifford.h"
#include "cliffred/product_resource.h"
#include "cliffred/stabilizer_code.h"

// Dense linear-algebra realizations of the symbolic objects. Qubit k is bit k
// of the basis index. Everything here is O(4^n) and meant for n <= 10.

namespace cliffred::dense {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr size_t kMaxQubits = 10;

/// Throws std::invalid_argument above kMaxQubits.
void check_size(size_t n, const char *what);

Matrix pauli(const PauliOperator &p);
/// (1 + p) / 2
Matrix projector(const PauliOperator &p);

/// Unitary built from the tableau alone: U|0> is the state stabilized by the
/// Z images, phased so its first nonzero entry is real positive, and
/// U|x> = image(X^x) U|0>. Independent of the symbolic Clifford path.
Matrix unitary(const CliffordTableau &t);

/// Unitary of a phase-exact Clifford, read off its symbolic |0> image.
Matrix unitary(const Clifford &c);

/// Amplitude vector of a phase-tracked stabilizer state.
Vector state(const StabilizerGroupState &s);

Matrix product_density(const ProductResource &rho);

/// sqrt(weight) * ops[last] ... ops[0], Cliffords in the from_tableau phase
/// convention.
Matrix kraus(const BranchKraus &branch);
/// sqrt(weight) * 2^(scale/2) * C * prod (1 + g)/2
Matrix kraus(const CanonicalKraus &canon);
/// decode * prod (1 + g)/2 over the code generators.
Matrix kraus(const StabilizerCode &code, const CliffordTableau &decode);

/// K^dag K = weight * 2^scale * prod (1 + g)/2, summed over the generated
/// group one sparse Pauli at a time.
Matrix gram(const CanonicalKraus &canon);

/// Reduced state of qubit 0 as an unnormalized Bloch vector plus trace.
struct QubitMarginal {
    double trace = 0;
    Bloch bloch_unnormalized{0, 0, 0};
};
QubitMarginal marginal_qubit0(const Matrix &rho);

}  // namespace cliffred::dense
