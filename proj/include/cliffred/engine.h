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
#include <functional>
#include <stdexcept>
#include <vector>

#include "cliffred/dense.h"
#include "cliffred/product_resource.h"
#include "cliffred/stabilizer_code.h"

namespace cliffred {

/// Output of a reduction on a resource. When the success probability is zero
/// the output is undefined and defined is false; out_bloch is then unset.
struct ReductionResult {
    bool defined = false;
    double success_prob = 0;
    Bloch out_bloch{0, 0, 0};
};

class UndefinedResultError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

struct EngineOptions {
    /// Worker threads for the group sums. The result does not depend on it.
    size_t threads = 1;
};

/// Success probabilities at or below this are treated as zero.
constexpr double kZeroProbability = 1e-13;

/// Calls fn on every element of the group generated by gens, in Gray-code
/// order starting from the identity. Each element differs from the previous
/// one by a single generator.
void for_each_group_element(const std::vector<PauliOperator> &gens, size_t n,
                            const std::function<void(const PauliOperator &)> &fn);

using BlochL = std::array<long double, 3>;

/// p = tr[P rho] and weighted[k] = tr[L_k P rho] for L = X_L, Y_L, Z_L, in
/// extended precision.
struct LogicalSums {
    long double p = 0;
    std::array<long double, 3> weighted{0, 0, 0};
};
LogicalSums logical_sums(const StabilizerCode &code, const std::vector<BlochL> &rho, const EngineOptions &opts = {});

/// tr[P rho] = 2^-(n-1) sum_{s in S} tr[s rho].
double success_probability(const StabilizerCode &code, const ProductResource &rho, const EngineOptions &opts = {});

/// tr[P rho] for P = prod (1 + g)/2 over commuting, independent Hermitian
/// generators.
double projector_expectation(const std::vector<PauliOperator> &gens, const ProductResource &rho);

/// Logical Bloch vector (<X_L>, <Y_L>, <Z_L>) of the postselected state.
ReductionResult output_state(const StabilizerCode &code, const ProductResource &rho, const EngineOptions &opts = {});

/// (1 + r . target) / 2. Throws for a non-unit target or an undefined result.
double fidelity(const ReductionResult &result, const Bloch &target);
double fidelity(const Bloch &out, const Bloch &target);

/// Throws std::invalid_argument unless |target| = 1 within 1e-9.
void check_unit(const Bloch &target, const char *what);

/// Best fidelity any single-qubit stabilizer state reaches with the target:
/// (1 + max_k |target_k|) / 2.
double stabilizer_state_bound(const Bloch &target);

/// Dense path: K rho K^dag, partial trace onto qubit 0, normalized.
ReductionResult dense_oracle(const dense::Matrix &kraus, const dense::Matrix &rho);
ReductionResult dense_oracle(const dense::Matrix &kraus, const ProductResource &rho);
ReductionResult dense_oracle(const StabilizerCode &code, const CliffordTableau &decode, const ProductResource &rho);
/// Sum over several Kraus operators (a whole program).
ReductionResult dense_oracle(const std::vector<dense::Matrix> &kraus, const dense::Matrix &rho);

}  // namespace cliffred
