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
#include <random>

#include "cliffred/program.h"
#include "cliffred/product_resource.h"
#include "cliffred/stabilizer_code.h"

namespace cliffred {

struct RandomProgramOptions {
    size_t max_qubits = 4;  // n + m
    size_t max_gates = 8;
    size_t max_measurements = 3;
    size_t max_choices = 1;
    bool allow_case = true;
};

/// Random valid reduction program: gates from {H, S, CNOT, CZ}, measurements
/// of random signed Paulis, at most one choice and one case on a top-level
/// label. Deterministic in the generator state.
ReductionProgram random_program(std::mt19937_64 &rng, const RandomProgramOptions &opts = {});

/// Tableau of a random word of `depth` gates from {H, S, CNOT, CZ, SWAP}.
CliffordTableau random_clifford(std::mt19937_64 &rng, size_t n, size_t depth);

/// Code whose generators and logical pair are images of Z_1..Z_{n-1}, X_0
/// and Z_0 under a random Clifford, with random generator signs.
StabilizerCode random_code(std::mt19937_64 &rng, size_t n);

/// Uniform over the Bloch ball.
Bloch random_bloch(std::mt19937_64 &rng);
/// Uniform over the unit sphere.
Bloch random_unit(std::mt19937_64 &rng);
ProductResource random_product(std::mt19937_64 &rng, size_t n);

}  // namespace cliffred
