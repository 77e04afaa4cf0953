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

#include <string>
#include <variant>
#include <vector>

#include "cliffred/branches.h"
#include "cliffred/clifford.h"

namespace cliffred {

/// K = sqrt(weight) * 2^(scale_half_log2/2) * C * P with
/// P = prod_g (1 + g)/2 over commuting, independent Hermitian generators.
/// C carries its exact phase, so the form reproduces the branch operator
/// exactly, not only up to a global phase.
struct CanonicalKraus {
    int scale_half_log2 = 0;
    double weight = 1;
    Clifford clifford;
    std::vector<PauliOperator> projector;
    /// How many anticommuting projector pairs were merged into C.
    size_t merges = 0;

    size_t num_qubits() const { return clifford.num_qubits(); }
    double scale_log2() const { return 0.5 * scale_half_log2; }
    /// C = w^phase8 * (canonical-phase unitary of C's tableau).
    int phase8() const { return clifford.phase8(); }
};

/// The branch operator is zero: two of its projectors are orthogonal.
struct ZeroBranch {
    std::string reason;
};

using NormalizeResult = std::variant<CanonicalKraus, ZeroBranch>;

/// Pushes every Clifford left through P C = C (C^dag P C), merges each
/// projector that anticommutes with the accumulated group via
/// (1+a)/2 (1+b)/2 = [(a+b)/sqrt 2] (1+b)/2 / sqrt 2, drops redundant
/// projectors and reports contradictory ones as ZeroBranch.
NormalizeResult normalize(const BranchKraus &branch);

/// Same rewriting for a bare list of ops acting in order.
NormalizeResult normalize_ops(size_t num_qubits, const std::vector<BranchOp> &ops, double weight = 1);

std::string format_scale(int half_log2);

}  // namespace cliffred
