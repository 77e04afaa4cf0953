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

#include <gtest/gtest.h>

#include <cmath>
#include <unordered_set>

#include "cliffred/engine.h"
#include "cliffred/random_program.h"
#include "test_util.h"

namespace cliffred {
namespace {

using testing::Matrix;

StabilizerCode parity() {
    return parse_code("n: 2\ngen: +ZZ\nXl: +XX\nZl: +ZI\n");
}

StabilizerCode steane() {
    return parse_code(
        "n: 7\n"
        "gen: +XXXXIII\ngen: +XXIIXXI\ngen: +XIXIXIX\n"
        "gen: +ZZZZIII\ngen: +ZZIIZZI\ngen: +ZIZIZIZ\n"
        "Xl: +XXXXXXX\nZl: +ZZZZZZZ\n");
}

Bloch t_axis(double f) {
    double c = (2 * f - 1) / std::sqrt(3.0);
    return {c, c, c};
}

using testing::kron_oracle;

TEST(Engine, MaximallyMixedInput) {
    auto rho = ProductResource::copies({0, 0, 0}, 7);
    EXPECT_EQ(success_probability(steane(), rho), 1.0 / 64);
    auto r = output_state(steane(), rho);
    EXPECT_TRUE(r.defined);
    EXPECT_EQ(r.out_bloch, (Bloch{0, 0, 0}));
    std::mt19937_64 rng(1);
    for (size_t n = 1; n <= 6; n++) {
        EXPECT_EQ(success_probability(random_code(rng, n), ProductResource::copies({0, 0, 0}, n)),
                  std::ldexp(1.0, -static_cast<int>(n - 1)));
    }
}

TEST(Engine, ParityOnZeroZero) {
    auto rho = ProductResource::copies({0, 0, 1}, 2);
    EXPECT_EQ(success_probability(parity(), rho), 1.0);
    auto r = output_state(parity(), rho);
    EXPECT_EQ(r.out_bloch, (Bloch{0, 0, 1}));
    auto d = dense_oracle(parity(), decoder_for(parity()), rho);
    EXPECT_NEAR(d.success_prob, 1.0, 1e-15);
    EXPECT_NEAR(d.out_bloch[2], 1.0, 1e-15);
}

TEST(Engine, ZeroProbabilityIsUndefined) {
    auto rho = ProductResource(std::vector<Bloch>{{0, 0, 1}, {0, 0, -1}});
    auto r = output_state(parity(), rho);
    EXPECT_FALSE(r.defined);
    EXPECT_EQ(r.success_prob, 0.0);
    EXPECT_THROW(fidelity(r, {1, 0, 0}), UndefinedResultError);
    EXPECT_FALSE(dense_oracle(parity(), decoder_for(parity()), rho).defined);
}

TEST(Engine, SteaneAgainstDense) {
    for (double f : {0.9, 0.95, 0.7, 0.55}) {
        auto rho = ProductResource::copies(t_axis(f), 7);
        auto o = kron_oracle(steane(), rho);
        auto r = output_state(steane(), rho);
        EXPECT_NEAR(r.success_prob, o.p, 1e-12);
        for (int i = 0; i < 3; i++) {
            EXPECT_NEAR(r.out_bloch[i], o.r[i], 1e-10);
        }
        auto d = dense_oracle(steane(), decoder_for(steane()), rho);
        EXPECT_NEAR(d.success_prob, o.p, 1e-12);
        for (int i = 0; i < 3; i++) {
            EXPECT_NEAR(d.out_bloch[i], o.r[i], 1e-10);
        }
    }
}

TEST(Engine, RandomCodesAgainstDense) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 300; t++) {
        size_t n = 1 + rng() % 6;
        auto code = random_code(rng, n);
        auto rho = random_product(rng, n);
        auto r = output_state(code, rho);
        auto o = kron_oracle(code, rho);
        ASSERT_NEAR(r.success_prob, o.p, 1e-12);
        if (o.p < 1e-9) {
            continue;
        }
        for (int i = 0; i < 3; i++) {
            EXPECT_NEAR(r.out_bloch[i], o.r[i], 1e-10) << code.str();
        }
        auto d = dense_oracle(code, decoder_for(code), rho);
        for (int i = 0; i < 3; i++) {
            EXPECT_NEAR(d.out_bloch[i], o.r[i], 1e-10) << code.str();
        }
        EXPECT_LE(norm(r.out_bloch), 1 + 1e-9);
    }
}

TEST(Engine, ThreadCountDoesNotChangeBits) {
    std::mt19937_64 rng(8);
    auto code = random_code(rng, 11);
    auto rho = random_product(rng, 11);
    auto a = output_state(code, rho, {1});
    auto b = output_state(code, rho, {7});
    EXPECT_EQ(a.success_prob, b.success_prob);
    EXPECT_EQ(a.out_bloch, b.out_bloch);
}

TEST(Engine, GrayCodeVisitsEachElementOnce) {
    std::mt19937_64 rng(12);
    for (size_t n : {1, 4, 9, 12}) {
        auto code = random_code(rng, n);
        std::unordered_set<PauliOperator, PauliHash> seen;
        size_t count = 0;
        PauliOperator prev = PauliOperator::identity(n);
        for_each_group_element(code.generators(), n, [&](const PauliOperator &s) {
            seen.insert(s);
            if (count) {
                // one generator away from the previous element
                PauliOperator step = prev * s;
                bool found = false;
                for (const auto &g : code.generators()) {
                    found |= step == g || step == -g;
                }
                EXPECT_TRUE(found);
            }
            prev = s;
            count++;
        });
        EXPECT_EQ(count, size_t{1} << (n - 1));
        EXPECT_EQ(seen.size(), count);
    }
}

TEST(Engine, ProjectorExpectationMatchesDense) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + rng() % 5;
        auto code = random_code(rng, n);
        std::vector<PauliOperator> gens;
        for (const auto &g : code.generators()) {
            if (rng() % 2) {
                gens.push_back(g);
            }
        }
        auto rho = random_product(rng, n);
        Matrix proj = Matrix::Identity(size_t{1} << n, size_t{1} << n);
        for (const auto &g : gens) {
            proj = 0.5 * (Matrix::Identity(proj.rows(), proj.cols()) + testing::oracle_pauli(g)) * proj;
        }
        double expect = (proj * testing::oracle_product_density(rho)).trace().real();
        EXPECT_NEAR(projector_expectation(gens, rho), expect, 1e-13);
    }
}

TEST(Engine, Fidelity) {
    EXPECT_DOUBLE_EQ(fidelity(Bloch{0, 0, 1}, {0, 0, 1}), 1.0);
    EXPECT_DOUBLE_EQ(fidelity(Bloch{0, 0, 0}, {0, 1, 0}), 0.5);
    double s = 1 / std::sqrt(3.0);
    for (double f : {0.3, 0.8, 0.99}) {
        EXPECT_NEAR(fidelity(t_axis(f), {s, s, s}), f, 1e-15);
    }
    EXPECT_THROW(fidelity(Bloch{0, 0, 0}, {0, 0, 0.5}), std::invalid_argument);
}

TEST(Engine, StabilizerStateBound) {
    EXPECT_DOUBLE_EQ(stabilizer_state_bound({0, 0, 1}), 1.0);
    double s = 1 / std::sqrt(3.0);
    EXPECT_NEAR(stabilizer_state_bound({s, s, s}), (1 + s) / 2, 1e-15);
    double h = 1 / std::sqrt(2.0);
    EXPECT_NEAR(stabilizer_state_bound({h, h, 0}), (1 + h) / 2, 1e-15);
    EXPECT_THROW(stabilizer_state_bound({1, 1, 0}), std::invalid_argument);
}

TEST(Engine, DenseOracleSumsKrausOperators) {
    // measuring Z with both outcomes kept dephases: output is the Z component
    Matrix p0 = Matrix::Zero(2, 2);
    Matrix p1 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    p1(1, 1) = 1;
    Matrix rho = testing::single_qubit_density({0.3, -0.4, 0.5});
    auto r = dense_oracle(std::vector<Matrix>{p0, p1}, rho);
    EXPECT_NEAR(r.success_prob, 1.0, 1e-15);
    EXPECT_NEAR(r.out_bloch[0], 0.0, 1e-15);
    EXPECT_NEAR(r.out_bloch[2], 0.5, 1e-15);
}

}  // namespace
}  // namespace cliffred
