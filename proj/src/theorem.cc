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

#include "cliffred/theorem.h"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "cliffred/branches.h"
#include "cliffred/dense.h"

namespace cliffred {

namespace {

std::string resource_text(const ProductResource &rho) {
    std::string s;
    for (const auto &r : rho.blochs()) {
        s += fmt::format("{}({:.17g},{:.17g},{:.17g})", s.empty() ? "" : " ", r[0], r[1], r[2]);
    }
    return s;
}

struct BranchOutcome {
    dense::Matrix kraus;
    ReductionResult dense_out;
    /// Output of the extracted code reduction, form B only.
    std::optional<ReductionResult> extracted;
};

}  // namespace

ReductionResult program_output(const ReductionProgram &program, const ProductResource &resource) {
    if (resource.num_qubits() != program.n_resource) {
        throw std::invalid_argument("program_output: resource size does not match the program");
    }
    std::vector<dense::Matrix> ks;
    for (const auto &b : expand_branches(program).branches) {
        ks.push_back(dense::kraus(b));
    }
    return dense_oracle(ks, dense::product_density(resource.with_ancillae(program.n_ancilla)));
}

size_t TheoremReport::violations() const {
    size_t n = 0;
    for (const auto &t : trials) {
        n += t.violations.size();
    }
    return n;
}

size_t TheoremReport::undefined() const {
    return static_cast<size_t>(std::count_if(trials.begin(), trials.end(), [](const auto &t) { return !t.defined; }));
}

TheoremTrial theorem_trial(uint64_t seed, const TheoremOptions &opts) {
    std::mt19937_64 rng(seed);
    ReductionProgram prog = random_program(rng, opts.program);
    ProductResource resource = random_product(rng, prog.n_resource);
    std::vector<Bloch> targets;
    for (size_t i = 0; i < opts.targets_per_trial; i++) {
        targets.push_back(random_unit(rng));
    }

    TheoremTrial trial;
    trial.seed = seed;
    trial.n_resource = prog.n_resource;
    trial.n_ancilla = prog.n_ancilla;

    dense::Matrix rho = dense::product_density(resource.with_ancillae(prog.n_ancilla));
    BranchSet set = expand_branches(prog);
    trial.branches = set.branches.size();
    std::vector<BranchOutcome> outcomes;
    std::vector<dense::Matrix> all;
    for (const auto &b : set.branches) {
        NormalizeResult r = normalize(b);
        if (std::holds_alternative<ZeroBranch>(r)) {
            trial.zero_branches++;
            continue;
        }
        const auto &canon = std::get<CanonicalKraus>(r);
        FormClassification form = classify(canon, b.id);
        trial.form_counts[static_cast<int>(form.form)]++;
        BranchOutcome o{dense::kraus(b), {}, std::nullopt};
        o.dense_out = dense_oracle(o.kraus, rho);
        if (form.form == Form::B) {
            ExtractedReduction ex = extract_reduction(form, prog.n_resource, prog.n_ancilla);
            o.extracted = output_state(ex.code, resource);
        }
        all.push_back(o.kraus);
        outcomes.push_back(std::move(o));
    }

    std::string prog_text = program_text(prog);
    std::string res_text = resource_text(resource);
    auto violation = [&](const char *kind, const Bloch &target, double fid, double bound) {
        trial.violations.push_back({seed, kind, target, fid, bound, prog_text, res_text});
    };

    ReductionResult full = all.empty() ? ReductionResult{} : dense_oracle(all, rho);
    trial.defined = full.defined;
    trial.success_prob = full.success_prob;
    if (!full.defined) {
        return trial;
    }

    // A branch that occurs with nonzero probability must reproduce its
    // extracted reduction exactly.
    for (const auto &o : outcomes) {
        if (!o.extracted || !o.dense_out.defined) {
            continue;
        }
        double diff = 0;
        for (size_t i = 0; i < 3; i++) {
            diff = std::max(diff, std::fabs(o.dense_out.out_bloch[i] - o.extracted->out_bloch[i]));
        }
        if (!o.extracted->defined || diff > opts.tolerance) {
            violation("extraction", {0, 0, 0}, diff, opts.tolerance);
        }
    }

    trial.min_margin = INFINITY;
    for (const auto &target : targets) {
        double fid = fidelity(full, target);
        double clause_i = stabilizer_state_bound(target);
        double clause_ii = -INFINITY;
        double best_branch = -INFINITY;
        for (const auto &o : outcomes) {
            if (!o.dense_out.defined) {
                continue;
            }
            best_branch = std::max(best_branch, fidelity(o.dense_out, target));
            if (o.extracted && o.extracted->defined) {
                clause_ii = std::max(clause_ii, fidelity(*o.extracted, target));
            }
        }
        double bound = std::max(clause_i, clause_ii);
        trial.min_margin = std::min(trial.min_margin, bound - fid);
        if (fid > bound + opts.tolerance) {
            violation("domination", target, fid, bound);
        }
        if (fid > best_branch + opts.tolerance) {
            violation("convexity", target, fid, best_branch);
        }
    }
    return trial;
}

TheoremReport run_theorem_trials(const TheoremOptions &opts) {
    if (opts.program.max_qubits > 4) {
        throw std::invalid_argument(
            fmt::format("verify-theorem needs n + m <= 4 for the dense check, got {}", opts.program.max_qubits));
    }
    TheoremReport report;
    report.trials.resize(opts.trials);
    size_t threads = std::max<size_t>(1, std::min(opts.threads, opts.trials));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < opts.trials; i = next++) {
            report.trials[i] = theorem_trial(opts.seed + i, opts);
        }
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back(work);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    return report;
}

}  // namespace cliffred
