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

#include "cliffred/random_program.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace cliffred {

namespace {

struct Builder {
    std::mt19937_64 &rng;
    const RandomProgramOptions &opts;
    size_t n;
    size_t gates = 0;
    size_t measurements = 0;

    size_t below(size_t k) { return static_cast<size_t>(rng() % k); }

    Instruction gate() {
        static const char *const names[] = {"H", "S", "CNOT", "CZ"};
        const char *name = names[below(n >= 2 ? 4 : 2)];
        UnitaryOp u;
        u.gate = name;
        u.targets.push_back(below(n));
        if (named_gate_arity(name) == 2) {
            u.targets.push_back((u.targets[0] + 1 + below(n - 1)) % n);
        }
        u.tableau = named_gate(u.gate, u.targets, n);
        gates++;
        return {std::move(u), 0};
    }

    Instruction measure() {
        MeasureOp m;
        std::string s = rng() & 1 ? "-" : "+";
        do {
            s.resize(1);
            for (size_t k = 0; k < n; k++) {
                s.push_back("IXYZ"[below(4)]);
            }
        } while (s.find_first_not_of("+-I") == std::string::npos);
        m.pauli = PauliOperator::from_str(s);
        static const Keep keeps[] = {Keep::Plus, Keep::Minus, Keep::Both};
        m.keep = keeps[below(3)];
        m.label = fmt::format("m{}", measurements++);
        return {std::move(m), 0};
    }

    Sequence short_block() {
        Sequence seq;
        size_t len = below(3);
        for (size_t i = 0; i < len; i++) {
            if (measurements < opts.max_measurements && below(3) == 0) {
                seq.push_back(measure());
            } else if (gates < opts.max_gates) {
                seq.push_back(gate());
            }
        }
        return seq;
    }
};

}  // namespace

ReductionProgram random_program(std::mt19937_64 &rng, const RandomProgramOptions &opts) {
    ReductionProgram prog;
    size_t total = 1 + static_cast<size_t>(rng() % std::max<size_t>(opts.max_qubits, 1));
    prog.n_resource = 1 + static_cast<size_t>(rng() % total);
    prog.n_ancilla = total - prog.n_resource;
    Builder b{rng, opts, total};

    size_t choices = 0;
    bool used_case = false;
    std::vector<std::string> top_labels;
    size_t steps = 1 + b.below(opts.max_gates + opts.max_measurements + 2);
    for (size_t s = 0; s < steps; s++) {
        size_t kind = b.below(10);
        if (kind < 3 && b.measurements < opts.max_measurements) {
            prog.instructions.push_back(b.measure());
            top_labels.push_back(std::get<MeasureOp>(prog.instructions.back().op).label);
        } else if (kind == 3 && choices < opts.max_choices) {
            ChoiceOp c;
            size_t k = 2 + b.below(2);
            std::vector<double> raw;
            for (size_t i = 0; i < k; i++) {
                raw.push_back(1.0 + static_cast<double>(b.below(4)));
            }
            double sum = 0;
            for (double r : raw) {
                sum += r;
            }
            for (size_t i = 0; i < k; i++) {
                c.weights.push_back(raw[i] / sum);
                c.options.push_back(b.short_block());
            }
            choices++;
            prog.instructions.push_back({std::move(c), 0});
        } else if (kind == 4 && opts.allow_case && !used_case && !top_labels.empty()) {
            CaseOp c;
            c.label = top_labels[b.below(top_labels.size())];
            c.on_plus = b.short_block();
            c.on_minus = b.short_block();
            used_case = true;
            prog.instructions.push_back({std::move(c), 0});
        } else if (b.gates < opts.max_gates) {
            prog.instructions.push_back(b.gate());
        }
    }
    return prog;
}

CliffordTableau random_clifford(std::mt19937_64 &rng, size_t n, size_t depth) {
    static const char *const one[] = {"H", "S"};
    static const char *const two[] = {"CNOT", "CZ", "SWAP"};
    CliffordTableau t = CliffordTableau::identity(n);
    for (size_t d = 0; d < depth; d++) {
        if (n >= 2 && rng() % 2 == 0) {
            size_t a = rng() % n;
            size_t b = (a + 1 + rng() % (n - 1)) % n;
            t = compose(named_gate(two[rng() % 3], {a, b}, n), t);
        } else {
            t = compose(named_gate(one[rng() % 2], {static_cast<size_t>(rng() % n)}, n), t);
        }
    }
    return t;
}

StabilizerCode random_code(std::mt19937_64 &rng, size_t n) {
    CliffordTableau u = random_clifford(rng, n, 6 * n * n + 4);
    std::vector<PauliOperator> gens;
    for (size_t q = 1; q < n; q++) {
        PauliOperator g = u.image_z(q);
        gens.push_back(rng() & 1 ? -g : g);
    }
    return StabilizerCode(std::move(gens), u.image_x(0), u.image_z(0));
}

Bloch random_unit(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Bloch r;
    double nr = 0;
    do {
        r = {g(rng), g(rng), g(rng)};
        nr = norm(r);
    } while (nr < 1e-6);
    for (auto &c : r) {
        c /= nr;
    }
    return r;
}

Bloch random_bloch(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 1);
    Bloch r = random_unit(rng);
    double len = std::cbrt(u(rng));
    for (auto &c : r) {
        c *= len;
    }
    return r;
}

ProductResource random_product(std::mt19937_64 &rng, size_t n) {
    std::vector<Bloch> rs;
    for (size_t k = 0; k < n; k++) {
        rs.push_back(random_bloch(rng));
    }
    return ProductResource(std::move(rs));
}

}  // namespace cliffred
