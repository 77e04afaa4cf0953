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

#include "cliffred/tableau.h"

#include <gtest/gtest.h>

#include "cliffred/dense.h"
#include "test_util.h"

using namespace cliffred;
using namespace cliffred::testing;

namespace {

Matrix gate_matrix(const std::string &name) {
    const double r = 1 / std::sqrt(2.0);
    Matrix m(2, 2);
    if (name == "H") {
        m << r, r, r, -r;
    } else if (name == "S") {
        m << 1, 0, 0, cd(0, 1);
    } else if (name == "CNOT") {
        // control qubit 0 (low bit), target qubit 1
        m = Matrix::Zero(4, 4);
        m(0, 0) = m(3, 1) = m(2, 2) = m(1, 3) = 1;
    } else if (name == "CZ") {
        m = Matrix::Identity(4, 4);
        m(3, 3) = -1;
    }
    return m;
}

}  // namespace

TEST(tableau, hadamard_maps_x_to_z) {
    auto h = named_gate("H", {0}, 1);
    EXPECT_EQ(conjugate(h, PauliOperator::from_str("+X")).str(), "+Z");
    EXPECT_EQ(conjugate(h, PauliOperator::from_str("+Z")).str(), "+X");
    EXPECT_EQ(conjugate(h, PauliOperator::from_str("+Y")).str(), "-Y");
    EXPECT_TRUE(compose(h, h).is_identity());
}

TEST(tableau, identity_conjugation) {
    std::mt19937_64 rng(4);
    auto id = CliffordTableau::identity(5);
    for (int t = 0; t < 50; t++) {
        auto p = random_pauli(rng, 5);
        EXPECT_EQ(conjugate(id, p), p);
    }
}

TEST(tableau, cnot_and_embedding) {
    auto cx = named_gate("CNOT", {0, 1}, 2);
    EXPECT_EQ(conjugate(cx, PauliOperator::from_str("+XI")).str(), "+XX");
    EXPECT_EQ(conjugate(cx, PauliOperator::from_str("+IZ")).str(), "+ZZ");

    Matrix u = gate_matrix("CNOT");
    for (const char *s : {"+XI", "+IX", "+ZI", "+IZ", "+YY", "-XZ"}) {
        auto p = PauliOperator::from_str(s);
        EXPECT_LT(max_abs_diff(oracle_pauli(conjugate(cx, p)), u * oracle_pauli(p) * u.adjoint()), 1e-14) << s;
    }

    auto cx3 = named_gate("CNOT", {0, 1}, 3);
    EXPECT_EQ(conjugate(cx3, PauliOperator::from_str("+IIX")).str(), "+IIX");
    EXPECT_EQ(conjugate(cx3, PauliOperator::from_str("+IIZ")).str(), "+IIZ");
    EXPECT_EQ(conjugate(cx3, PauliOperator::from_str("+XIY")).str(), "+XXY");
}

TEST(tableau, gates_match_dense_conjugation) {
    Matrix cz = gate_matrix("CZ");
    auto tcz = named_gate("cz", {0, 1}, 2);
    Matrix h = gate_matrix("H");
    Matrix s = gate_matrix("S");
    auto th = named_gate("H", {0}, 1);
    auto ts = named_gate("S", {0}, 1);
    auto tsd = named_gate("S_DAG", {0}, 1);
    for (const char *str : {"+X", "+Y", "+Z"}) {
        auto p = PauliOperator::from_str(str);
        EXPECT_LT(max_abs_diff(oracle_pauli(conjugate(th, p)), h * oracle_pauli(p) * h.adjoint()), 1e-14);
        EXPECT_LT(max_abs_diff(oracle_pauli(conjugate(ts, p)), s * oracle_pauli(p) * s.adjoint()), 1e-14);
        EXPECT_LT(max_abs_diff(oracle_pauli(conjugate(tsd, p)), s.adjoint() * oracle_pauli(p) * s), 1e-14);
    }
    for (const char *str : {"+XI", "+IX", "+ZI", "+YX"}) {
        auto p = PauliOperator::from_str(str);
        EXPECT_LT(max_abs_diff(oracle_pauli(conjugate(tcz, p)), cz * oracle_pauli(p) * cz.adjoint()), 1e-14);
    }
}

TEST(tableau, s_squared_flips_x) {
    auto s = named_gate("S", {0}, 1);
    auto ss = compose(s, s);
    EXPECT_EQ(conjugate(ss, PauliOperator::from_str("+X")).str(), "-X");
    EXPECT_EQ(conjugate(ss, PauliOperator::from_str("+Z")).str(), "+Z");
    Matrix sm = gate_matrix("S");
    Matrix z = sm * sm;
    EXPECT_LT(max_abs_diff(z * pauli2('X') * z.adjoint(), -pauli2('X')), 1e-15);
}

TEST(tableau, t_rotation_cycles_axes) {
    auto t = named_gate("T_rot", {0}, 1);
    EXPECT_EQ(conjugate(t, PauliOperator::from_str("+X")).str(), "+Y");
    EXPECT_EQ(conjugate(t, PauliOperator::from_str("+Y")).str(), "+Z");
    EXPECT_EQ(conjugate(t, PauliOperator::from_str("+Z")).str(), "+X");
    auto tt = compose(t, t);
    EXPECT_EQ(conjugate(tt, PauliOperator::from_str("+X")).str(), "+Z");
    EXPECT_TRUE(compose(tt, t).is_identity());
}

TEST(tableau, named_gate_errors) {
    EXPECT_THROW(named_gate("FOO", {0}, 1), std::invalid_argument);
    EXPECT_THROW(named_gate("H", {1}, 1), std::invalid_argument);
    EXPECT_THROW(named_gate("CNOT", {0}, 2), std::invalid_argument);
    EXPECT_THROW(named_gate("CNOT", {1, 1}, 2), std::invalid_argument);
    EXPECT_EQ(named_gate_arity("swap"), 2u);
}

TEST(tableau, from_images_validates) {
    auto x = PauliOperator::from_str("+X");
    auto z = PauliOperator::from_str("+Z");
    EXPECT_NO_THROW(CliffordTableau::from_images({z}, {x}));
    EXPECT_THROW(CliffordTableau::from_images({x}, {x}), std::invalid_argument);
    EXPECT_THROW(CliffordTableau::from_images({PauliOperator::from_str("+iX")}, {z}), std::invalid_argument);
    EXPECT_THROW(CliffordTableau::from_images({PauliOperator::from_str("+XI"), PauliOperator::from_str("+ZI")},
                                              {PauliOperator::from_str("+ZI"), PauliOperator::from_str("+IZ")}),
                 std::invalid_argument);
}

TEST(tableau, conjugation_preserves_commutation) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + t % 6;
        auto c = random_tableau(rng, n, 20);
        auto a = random_pauli(rng, n);
        auto b = random_pauli(rng, n);
        EXPECT_EQ(commutes(a, b), commutes(conjugate(c, a), conjugate(c, b)));
        EXPECT_EQ(conjugate(c, a * b), conjugate(c, a) * conjugate(c, b));
        EXPECT_EQ(conjugate(c, a).is_hermitian(), a.is_hermitian());
    }
}

TEST(tableau, inverse_round_trip) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + t % 8;
        auto c = random_tableau(rng, n, 25);
        auto ci = c.inverse();
        EXPECT_TRUE(compose(c, ci).is_identity());
        EXPECT_TRUE(compose(ci, c).is_identity());
        auto p = random_pauli(rng, n);
        EXPECT_EQ(conjugate(ci, conjugate(c, p)), p);
    }
}

TEST(tableau, dense_unitary_conjugates_like_tableau) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; t++) {
        size_t n = 1 + t % 4;
        auto c = random_tableau(rng, n, 15);
        Matrix u = dense::unitary(c);
        EXPECT_LT(max_abs_diff(u * u.adjoint(), Matrix::Identity(u.rows(), u.cols())), 1e-12);
        auto p = random_pauli(rng, n);
        EXPECT_LT(max_abs_diff(u * oracle_pauli(p) * u.adjoint(), oracle_pauli(conjugate(c, p))), 1e-12);
    }
}

TEST(tableau, compose_matches_dense_product) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 60; t++) {
        size_t n = 1 + t % 4;
        auto a = random_tableau(rng, n);
        auto b = random_tableau(rng, n);
        Matrix prod = dense::unitary(a) * dense::unitary(b);
        EXPECT_LT(distance_up_to_scalar(prod, dense::unitary(compose(a, b))), 1e-12);
    }
}
