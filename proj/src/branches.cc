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

#include "cliffred/branches.h"

#include <fmt/format.h>

#include <limits>
#include <stdexcept>

namespace cliffred {

std::string DecisionRecord::str() const {
    std::string s = "c=[";
    for (size_t i = 0; i < choices.size(); i++) {
        s += fmt::format("{}{}", i ? "," : "", choices[i]);
    }
    s += "] o=[";
    for (size_t i = 0; i < outcomes.size(); i++) {
        s += fmt::format("{}{}:{}", i ? "," : "", outcomes[i].first, outcomes[i].second > 0 ? "+1" : "-1");
    }
    s += "] j=";
    for (size_t q = 0; q < j.size(); q++) {
        s += j.get(q) ? '1' : '0';
    }
    return s;
}

namespace {

struct Walker {
    std::vector<DecisionPath> out;

    void run(const Sequence &seq, size_t idx, DecisionPath path, std::vector<std::pair<const Sequence *, size_t>> rest) {
        if (idx == seq.size()) {
            if (rest.empty()) {
                out.push_back(std::move(path));
                return;
            }
            auto [s, i] = rest.back();
            rest.pop_back();
            return run(*s, i, std::move(path), std::move(rest));
        }
        const Instruction &ins = seq[idx];
        if (auto *u = std::get_if<UnitaryOp>(&ins.op)) {
            path.ops.push_back({u->tableau});
            return run(seq, idx + 1, std::move(path), std::move(rest));
        }
        if (auto *m = std::get_if<MeasureOp>(&ins.op)) {
            for (int outcome : {+1, -1}) {
                if ((outcome > 0 && m->keep == Keep::Minus) || (outcome < 0 && m->keep == Keep::Plus)) {
                    continue;
                }
                DecisionPath p = path;
                p.ops.push_back({outcome > 0 ? m->pauli : -m->pauli});
                p.outcomes.emplace_back(m->label, outcome);
                run(seq, idx + 1, std::move(p), rest);
            }
            return;
        }
        if (auto *c = std::get_if<ChoiceOp>(&ins.op)) {
            for (size_t k = 0; k < c->options.size(); k++) {
                DecisionPath p = path;
                p.choices.push_back(k);
                p.weight *= c->weights[k];
                auto r = rest;
                r.emplace_back(&seq, idx + 1);
                run(c->options[k], 0, std::move(p), std::move(r));
            }
            return;
        }
        const auto &k = std::get<CaseOp>(ins.op);
        int outcome = 0;
        for (const auto &[label, value] : path.outcomes) {
            if (label == k.label) {
                outcome = value;
            }
        }
        if (outcome == 0) {
            throw std::runtime_error(
                fmt::format("line {}: case reads '{}' which this path never measured", ins.line, k.label));
        }
        rest.emplace_back(&seq, idx + 1);
        run(outcome > 0 ? k.on_plus : k.on_minus, 0, std::move(path), std::move(rest));
    }
};

}  // namespace

std::vector<DecisionPath> expand_decisions(const ReductionProgram &program) {
    Walker w;
    w.run(program.instructions, 0, DecisionPath{}, {});
    if (program.output_qubit != 0) {
        auto swap = named_gate("SWAP", {0, program.output_qubit}, program.num_qubits());
        for (auto &p : w.out) {
            p.ops.push_back({swap});
        }
    }
    return std::move(w.out);
}

BranchKraus make_branch(const ReductionProgram &program, const DecisionPath &path, const BitVec &j) {
    size_t n = program.num_qubits();
    BranchKraus b;
    b.num_qubits = n;
    b.weight = path.weight;
    b.id = {path.choices, path.outcomes, j};
    for (size_t a = program.n_resource; a < n; a++) {
        b.ops.push_back({PauliOperator::single(n, a, 'Z')});
    }
    b.ops.insert(b.ops.end(), path.ops.begin(), path.ops.end());
    for (size_t q = 1; q < n; q++) {
        PauliOperator z = PauliOperator::single(n, q, 'Z');
        b.ops.push_back({j.get(q - 1) ? -z : z});
    }
    return b;
}

BranchSet expand_branches(const ReductionProgram &program, size_t cap) {
    if (cap == 0) {
        throw std::invalid_argument("expand_branches: cap must be at least 1");
    }
    std::vector<DecisionPath> paths = expand_decisions(program);
    size_t n = program.num_qubits();
    size_t len = n - 1;
    BranchSet set;
    uint64_t per_path = len >= 64 ? std::numeric_limits<uint64_t>::max() : uint64_t{1} << len;
    if (per_path != 0 && paths.size() > std::numeric_limits<uint64_t>::max() / per_path) {
        set.total = std::numeric_limits<uint64_t>::max();
    } else {
        set.total = per_path * paths.size();
    }
    set.exhaustive = set.total <= cap;
    for (const auto &path : paths) {
        for (uint64_t t = 0; t < per_path; t++) {
            if (set.branches.size() == cap) {
                return set;
            }
            BitVec j(len);
            for (size_t q = 0; q < len; q++) {
                // qubit 1 is the most significant character of j
                size_t shift = len - 1 - q;
                if (shift < 64 && ((t >> shift) & 1)) {
                    j.set(q, true);
                }
            }
            set.branches.push_back(make_branch(program, path, j));
        }
    }
    return set;
}

}  // namespace cliffred
