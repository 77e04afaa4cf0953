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

#include "cliffred/clifford.h"

#include <gtest/gtest.h>

#include "cliffred/dense.h"
#include "test_util.h"

using namespace cliffred;
using namespace cliffred::testing;

namespace {

/// Random phase-exact Clifford: a product of tableau factors and Pauli sums.
Clifford random_clifford(std::mt19937_64 &rng, size_t n, Matrix *dense_out) {
    Clifford c = Clifford::identity(n);
    size_t dim = size_t{1} << n;
    Matrix m = Matrix::Identity(dim, dim);
    for (int d = 0; d < 4; d++) {
        if (rng() % 2) {
            auto t = random_tableau(rng, n, 6);
            c = Clifford::from_tableau(t) * c;
            m = dense::unitary(t) * m;
        } else {
            PauliOperator a = random_pauli(rng, n, true);
            PauliOperator b = random_pauli(rng, n, true);
            while (commutes(a, b)) {
                a = random_pauli(rng, n, true);
                b = random_pauli(rng, n, true);
            }
            c = Clifford::pauli_sum(a, b) * c;
            m = (oracle_pauli(a) + oracle_pauli(b)) / std::sqrt(2.0) * m;
        }
    }
    *dense_out = m;
    return c;
}

}  // namespace

TEST(clifford, from_tableau_matches_dense_construction) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; t++) {
        size_t n = 1 + t % 4;
        auto tab = random_tableau(rng, n, 15);
        auto c = Clifford::from_tableau(tab);
        EXPECT_EQ(c.phase8(), 0);
        EXPECT_LT(max_abs_diff(dense::unitary(c), dense::unitary(tab)), 1e-12);
    }
}

TEST(clifford, pauli_sum_x_plus_z_is_hadamard) {
    auto c = Clifford::pauli_sum(PauliOperator::from_str("+X"), PauliOperator::from_str("+Z"));
    const double r = 1 / std::sqrt(2.0);
    Matrix h(2, 2);
    h << r, r, r, -r;
    EXPECT_LT(max_abs_diff(dense::unitary(c), h), 1e-15);
    EXPECT_EQ(c.phase8(), 0);
    EXPECT_TRUE(compose(c.tableau(), named_gate("H", {0}, 1)).is_identity());
}

TEST(clifford, pauli_sum_needs_eighth_root_phase) {
    // (X + Y)/sqrt(2) sends |0> to w|1>.
    auto c = Clifford::pauli_sum(PauliOperator::from_str("+X"), PauliOperator::from_str("+Y"));
    EXPECT_EQ(c.phase8(), 1);
    Matrix want = (pauli2('X') + pauli2('Y')) / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(dense::unitary(c), want), 1e-15);
    EXPECT_THROW(Clifford::pauli_sum(PauliOperator::from_str("+X"), PauliOperator::from_str("+X")),
                 std::invalid_argument);
}

TEST(clifford, pauli_sum_matches_dense) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + t % 4;
        PauliOperator a = random_pauli(rng, n, true);
        PauliOperator b = random_pauli(rng, n, true);
        if (commutes(a, b)) {
            continue;
        }
        Matrix want = (oracle_pauli(a) + oracle_pauli(b)) / std::sqrt(2.0);
        EXPECT_LT(max_abs_diff(dense::unitary(Clifford::pauli_sum(a, b)), want), 1e-12) << a.str() << " " << b.str();
    }
}

TEST(clifford, products_keep_exact_phase) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 4;
        Matrix want;
        Clifford c = random_clifford(rng, n, &want);
        EXPECT_LT(max_abs_diff(dense::unitary(c), want), 1e-11);
        // phase8 relates the symbolic unitary to the tableau's canonical one.
        std::complex<double> w = std::polar(1.0, M_PI / 4 * c.phase8());
        EXPECT_LT(max_abs_diff(dense::unitary(c), w * dense::unitary(c.tableau())), 1e-11);
    }
}

TEST(clifford, apply_matches_dense) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 4;
        Matrix u;
        Clifford c = random_clifford(rng, n, &u);
        auto s = StabilizerGroupState::from_generators([&] {
                     auto tab = random_tableau(rng, n);
                     std::vector<PauliOperator> g;
                     for (size_t k = 0; k < n; k++) {
                         g.push_back(tab.image_z(k));
                     }
                     return g;
                 }())
                     .apply_pauli(random_pauli(rng, n));
        Eigen::VectorXcd want = u * dense::state(s);
        EXPECT_LT((dense::state(c.apply(s)) - want).cwiseAbs().maxCoeff(), 1e-11);
    }
}
