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

#include "cliffred/engine.h"

#include <fmt/format.h>

#include <array>
#include <bit>
#include <cmath>
#include <thread>

namespace cliffred {

namespace {

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    long double sum = 0;
    long double comp = 0;

    void add(long double v) {
        long double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    void add(const CompensatedSum &o) {
        add(o.sum);
        add(o.comp);
    }
    long double value() const { return sum + comp; }
};

struct ExpectationTable {
    // per qubit: letter x + 2z -> I, X, Z, XZ(= -iY) factor without the -i
    std::vector<std::array<long double, 4>> t;

    explicit ExpectationTable(const std::vector<BlochL> &rho) {
        for (const auto &r : rho) {
            t.push_back({1.0L, r[0], r[2], r[1]});
        }
    }

    long double operator()(const PauliOperator &p) const {
        long double acc = p.sign_exponent() == 2 ? -1.0L : 1.0L;
        size_t n = t.size();
        for (size_t w = 0; w < p.x().num_words(); w++) {
            uint64_t xw = p.x().word(w);
            uint64_t zw = p.z().word(w);
            uint64_t any = xw | zw;
            while (any) {
                int b = std::countr_zero(any);
                any &= any - 1;
                size_t k = w * 64 + static_cast<size_t>(b);
                if (k >= n) {
                    break;
                }
                acc *= t[k][((xw >> b) & 1) | (((zw >> b) & 1) << 1)];
            }
            if (acc == 0) {
                return 0;
            }
        }
        return acc;
    }
};

constexpr size_t kSegments = 64;

struct Sums {
    CompensatedSum s[4];
};

// Sums over Gray-code positions [begin, end): the element at position k is
// the product of generators at the set bits of k ^ (k >> 1).
Sums segment_sums(const std::vector<PauliOperator> &gens, const std::vector<PauliOperator> &left, size_t n,
                  const ExpectationTable &tab, uint64_t begin, uint64_t end) {
    Sums out;
    uint64_t gray = begin ^ (begin >> 1);
    PauliOperator s = PauliOperator::identity(n);
    for (size_t i = 0; i < gens.size(); i++) {
        if ((gray >> i) & 1) {
            pauli_mul_inplace(s, gens[i]);
        }
    }
    std::vector<PauliOperator> cur;
    for (const auto &l : left) {
        cur.push_back(l * s);
    }
    for (uint64_t k = begin; k < end; k++) {
        if (k != begin) {
            const PauliOperator &g = gens[std::countr_zero(k)];
            pauli_mul_inplace(s, g);
            for (auto &c : cur) {
                pauli_mul_inplace(c, g);
            }
        }
        out.s[0].add(tab(s));
        for (size_t i = 0; i < cur.size(); i++) {
            out.s[i + 1].add(tab(cur[i]));
        }
    }
    return out;
}

// Sums of tr[L s rho] for L in {I} + left over the group, split into fixed
// segments so the rounding does not depend on the thread count.
std::array<long double, 4> group_sums(const StabilizerCode &code, const std::vector<BlochL> &rho,
                                      const std::vector<PauliOperator> &left, const EngineOptions &opts) {
    size_t n = code.num_qubits();
    if (rho.size() != n) {
        throw std::invalid_argument(fmt::format("code has {} qubits but the resource has {}", n, rho.size()));
    }
    const auto &gens = code.generators();
    if (gens.size() >= 63) {
        throw std::invalid_argument("group sums support at most 62 generators");
    }
    ExpectationTable tab(rho);
    uint64_t total = uint64_t{1} << gens.size();
    size_t segments = static_cast<size_t>(std::min<uint64_t>(total, kSegments));
    std::vector<Sums> parts(segments);
    auto run = [&](size_t seg) {
        uint64_t begin = total * seg / segments;
        uint64_t end = total * (seg + 1) / segments;
        parts[seg] = segment_sums(gens, left, n, tab, begin, end);
    };
    size_t threads = std::max<size_t>(1, std::min(opts.threads, segments));
    if (threads == 1) {
        for (size_t seg = 0; seg < segments; seg++) {
            run(seg);
        }
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back([&, t] {
                for (size_t seg = t; seg < segments; seg += threads) {
                    run(seg);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    Sums total_sums;
    for (const auto &p : parts) {
        for (size_t i = 0; i < 4; i++) {
            total_sums.s[i].add(p.s[i]);
        }
    }
    long double scale = std::ldexp(1.0L, -static_cast<int>(gens.size()));
    return {total_sums.s[0].value() * scale, total_sums.s[1].value() * scale, total_sums.s[2].value() * scale,
            total_sums.s[3].value() * scale};
}

std::vector<BlochL> extended(const ProductResource &rho) {
    std::vector<BlochL> out;
    for (const auto &r : rho.blochs()) {
        out.push_back({r[0], r[1], r[2]});
    }
    return out;
}

}  // namespace

void for_each_group_element(const std::vector<PauliOperator> &gens, size_t n,
                            const std::function<void(const PauliOperator &)> &fn) {
    if (gens.size() >= 64) {
        throw std::invalid_argument("for_each_group_element: too many generators");
    }
    PauliOperator s = PauliOperator::identity(n);
    uint64_t total = uint64_t{1} << gens.size();
    for (uint64_t k = 0; k < total; k++) {
        if (k) {
            pauli_mul_inplace(s, gens[std::countr_zero(k)]);
        }
        fn(s);
    }
}

double success_probability(const StabilizerCode &code, const ProductResource &rho, const EngineOptions &opts) {
    return static_cast<double>(group_sums(code, extended(rho), {}, opts)[0]);
}

double projector_expectation(const std::vector<PauliOperator> &gens, const ProductResource &rho) {
    CompensatedSum sum;
    for_each_group_element(gens, rho.num_qubits(),
                           [&](const PauliOperator &s) { sum.add(product_expectation(s, rho)); });
    return static_cast<double>(std::ldexp(sum.value(), -static_cast<int>(gens.size())));
}

LogicalSums logical_sums(const StabilizerCode &code, const std::vector<BlochL> &rho, const EngineOptions &opts) {
    auto sums = group_sums(code, rho, {code.logical_x(), code.logical_y(), code.logical_z()}, opts);
    return {sums[0], {sums[1], sums[2], sums[3]}};
}

ReductionResult output_state(const StabilizerCode &code, const ProductResource &rho, const EngineOptions &opts) {
    LogicalSums sums = logical_sums(code, extended(rho), opts);
    ReductionResult r;
    r.success_prob = static_cast<double>(sums.p);
    if (!(r.success_prob > kZeroProbability)) {
        r.success_prob = std::max(r.success_prob, 0.0);
        return r;
    }
    r.defined = true;
    for (size_t i = 0; i < 3; i++) {
        r.out_bloch[i] = static_cast<double>(sums.weighted[i] / sums.p);
    }
    return r;
}

void check_unit(const Bloch &target, const char *what) {
    if (std::fabs(norm(target) - 1) > 1e-9) {
        throw std::invalid_argument(fmt::format("{}: target ({}, {}, {}) is not a unit vector", what, target[0],
                                                target[1], target[2]));
    }
}

double fidelity(const Bloch &out, const Bloch &target) {
    check_unit(target, "fidelity");
    return 0.5 * (1 + dot(out, target));
}

double fidelity(const ReductionResult &result, const Bloch &target) {
    if (!result.defined) {
        throw UndefinedResultError("fidelity: the reduction succeeds with probability zero");
    }
    return fidelity(result.out_bloch, target);
}

double stabilizer_state_bound(const Bloch &target) {
    check_unit(target, "stabilizer_state_bound");
    double m = std::max({std::fabs(target[0]), std::fabs(target[1]), std::fabs(target[2])});
    return 0.5 * (1 + m);
}

ReductionResult dense_oracle(const std::vector<dense::Matrix> &kraus, const dense::Matrix &rho) {
    dense::Matrix out = dense::Matrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : kraus) {
        if (k.cols() != rho.rows() || k.rows() != rho.rows()) {
            throw std::invalid_argument("dense_oracle: Kraus operator and state sizes differ");
        }
        out += k * rho * k.adjoint();
    }
    dense::QubitMarginal m = dense::marginal_qubit0(out);
    ReductionResult r;
    r.success_prob = m.trace;
    if (!(m.trace > kZeroProbability)) {
        r.success_prob = std::max(r.success_prob, 0.0);
        return r;
    }
    r.defined = true;
    for (size_t i = 0; i < 3; i++) {
        r.out_bloch[i] = m.bloch_unnormalized[i] / m.trace;
    }
    return r;
}

ReductionResult dense_oracle(const dense::Matrix &kraus, const dense::Matrix &rho) {
    return dense_oracle(std::vector<dense::Matrix>{kraus}, rho);
}

ReductionResult dense_oracle(const dense::Matrix &kraus, const ProductResource &rho) {
    return dense_oracle(kraus, dense::product_density(rho));
}

ReductionResult dense_oracle(const StabilizerCode &code, const CliffordTableau &decode, const ProductResource &rho) {
    return dense_oracle(dense::kraus(code, decode), rho);
}

}  // namespace cliffred
