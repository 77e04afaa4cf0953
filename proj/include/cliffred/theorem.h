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
#include <string>
#include <vector>

#include "cliffred/classify.h"
#include "cliffred/engine.h"
#include "cliffred/random_program.h"

namespace cliffred {

/// Fidelity domination check on random Clifford reductions.
///
/// Each trial draws a program, a product resource and several targets from
/// its own seed. The full program output is computed densely by summing
/// every branch. It must not beat
///
///     max(stabilizer_state_bound(target), best extracted code reduction)
///
/// nor the best single branch, by more than the tolerance.
struct TheoremOptions {
    uint64_t seed = 0;
    size_t trials = 100;
    size_t targets_per_trial = 3;
    double tolerance = 1e-9;
    RandomProgramOptions program;
    size_t threads = 1;
};

struct TheoremViolation {
    uint64_t trial_seed = 0;
    /// "domination", "convexity" or "extraction".
    std::string kind;
    Bloch target{0, 0, 0};
    double program_fidelity = 0;
    double bound = 0;
    std::string program;
    std::string resource;
};

struct TheoremTrial {
    uint64_t seed = 0;
    size_t n_resource = 0;
    size_t n_ancilla = 0;
    size_t branches = 0;
    size_t zero_branches = 0;
    size_t form_counts[3] = {0, 0, 0};
    /// false when the program succeeds with probability zero on the resource.
    bool defined = false;
    double success_prob = 0;
    /// Worst slack of bound minus program fidelity over the targets.
    double min_margin = 0;
    std::vector<TheoremViolation> violations;
};

struct TheoremReport {
    std::vector<TheoremTrial> trials;
    size_t violations() const;
    size_t undefined() const;
};

/// One trial; trial i of run_theorem_trials uses seed + i, so any trial can
/// be replayed alone.
TheoremTrial theorem_trial(uint64_t seed, const TheoremOptions &opts);

/// Throws std::invalid_argument if the program options allow more than four
/// qubits.
TheoremReport run_theorem_trials(const TheoremOptions &opts);

/// Dense output of the whole program (all branches summed) on the resource
/// with its ancillae in |0>.
ReductionResult program_output(const ReductionProgram &program, const ProductResource &resource);

}  // namespace cliffred
