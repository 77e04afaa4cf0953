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

#include "cliffred/dense.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cliffred/engine.h"

namespace cliffred::dense {

void check_size(size_t n, const char *what) {
    if (n > kMaxQubits) {
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the dense limit of " +
                                    std::to_string(kMaxQubits));
    }
}

Matrix pauli(const PauliOperator &p) {
    size_t n = p.num_qubits();
    check_size(n, "dense::pauli");
    size_t dim = size_t{1} << n;
    uint64_t xm = p.x().to_u64();
    uint64_t zm = p.z().to_u64();
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Matrix m = Matrix::Zero(dim, dim);
    for (uint64_t col = 0; col < dim; col++) {
        int sign = std::popcount(zm & col) & 1 ? 2 : 0;
        m(col ^ xm, col) = ipow[(p.phase() + sign) & 3];
    }
    return m;
}

Matrix gram(const CanonicalKraus &canon) {
    size_t n = canon.num_qubits();
    check_size(n, "dense::gram");
    size_t dim = size_t{1} << n;
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    double scale = canon.weight * std::ldexp(1.0, canon.scale_half_log2 - static_cast<int>(canon.projector.size()));
    Matrix m = Matrix::Zero(dim, dim);
    for_each_group_element(canon.projector, n, [&](const PauliOperator &s) {
        uint64_t xm = s.x().to_u64();
        uint64_t zm = s.z().to_u64();
        for (uint64_t col = 0; col < dim; col++) {
            int sign = std::popcount(zm & col) & 1 ? 2 : 0;
            m(col ^ xm, col) += scale * ipow[(s.phase() + sign) & 3];
        }
    });
    return m;
}

Matrix projector(const PauliOperator &p) {
    size_t dim = size_t{1} << p.num_qubits();
    return 0.5 * (Matrix::Identity(dim, dim) + pauli(p));
}

Matrix unitary(const CliffordTableau &t) {
    size_t n = t.num_qubits();
    check_size(n, "dense::unitary");
    size_t dim = size_t{1} << n;
    Matrix proj = Matrix::Identity(dim, dim);
    for (size_t k = 0; k < n; k++) {
        proj = projector(t.image_z(k)) * proj;
    }
    Vector v0;
    for (size_t y = 0; y < dim; y++) {
        Vector col = proj.col(y);
        double nrm = col.norm();
        if (nrm > 1e-9) {
            v0 = col / nrm;
            break;
        }
    }
    Matrix u(dim, dim);
    for (uint64_t x = 0; x < dim; x++) {
        PauliOperator xs(BitVec::from_u64(n, x), BitVec(n), 0);
        u.col(x) = pauli(t.conjugate(xs)) * v0;
    }
    return u;
}

Vector state(const StabilizerGroupState &s) {
    size_t n = s.num_qubits();
    check_size(n, "dense::state");
    size_t dim = size_t{1} << n;
    Vector v(dim);
    for (uint64_t y = 0; y < dim; y++) {
        v(y) = s.amplitude(BitVec::from_u64(n, y)).value();
    }
    return v;
}

Matrix unitary(const Clifford &c) {
    size_t n = c.num_qubits();
    check_size(n, "dense::unitary");
    size_t dim = size_t{1} << n;
    Vector v0 = state(c.zero_image());
    Matrix u(dim, dim);
    for (uint64_t x = 0; x < dim; x++) {
        PauliOperator xs(BitVec::from_u64(n, x), BitVec(n), 0);
        u.col(x) = pauli(c.tableau().conjugate(xs)) * v0;
    }
    return u;
}

Matrix product_density(const ProductResource &rho) {
    size_t n = rho.num_qubits();
    check_size(n, "dense::product_density");
    Matrix m = Matrix::Ones(1, 1);
    // Build so that qubit k ends up as bit k: the last Kronecker factor is qubit 0.
    for (size_t k = n; k-- > 0;) {
        const Bloch &r = rho.bloch(k);
        Matrix q(2, 2);
        q(0, 0) = 0.5 * (1 + r[2]);
        q(1, 1) = 0.5 * (1 - r[2]);
        q(0, 1) = std::complex<double>(0.5 * r[0], -0.5 * r[1]);
        q(1, 0) = std::complex<double>(0.5 * r[0], 0.5 * r[1]);
        Matrix next(m.rows() * 2, m.cols() * 2);
        for (Eigen::Index i = 0; i < m.rows(); i++) {
            for (Eigen::Index j = 0; j < m.cols(); j++) {
                next.block(2 * i, 2 * j, 2, 2) = m(i, j) * q;
            }
        }
        m = std::move(next);
    }
    return m;
}

Matrix kraus(const BranchKraus &branch) {
    size_t n = branch.num_qubits;
    check_size(n, "dense::kraus");
    size_t dim = size_t{1} << n;
    Matrix k = Matrix::Identity(dim, dim);
    for (const auto &op : branch.ops) {
        k = (op.is_projector() ? projector(op.projector()) : unitary(op.clifford())) * k;
    }
    return std::sqrt(branch.weight) * k;
}

Matrix kraus(const CanonicalKraus &canon) {
    size_t n = canon.num_qubits();
    check_size(n, "dense::kraus");
    size_t dim = size_t{1} << n;
    Matrix p = Matrix::Identity(dim, dim);
    for (const auto &g : canon.projector) {
        p = projector(g) * p;
    }
    double scale = std::sqrt(canon.weight) * std::exp2(canon.scale_log2());
    return scale * unitary(canon.clifford) * p;
}

Matrix kraus(const StabilizerCode &code, const CliffordTableau &decode) {
    size_t n = code.num_qubits();
    check_size(n, "dense::kraus");
    size_t dim = size_t{1} << n;
    Matrix p = Matrix::Identity(dim, dim);
    for (const auto &g : code.generators()) {
        p = projector(g) * p;
    }
    return unitary(decode) * p;
}

QubitMarginal marginal_qubit0(const Matrix &rho) {
    Eigen::Index dim = rho.rows();
    std::complex<double> r00 = 0;
    std::complex<double> r11 = 0;
    std::complex<double> r01 = 0;
    for (Eigen::Index rest = 0; rest < dim / 2; rest++) {
        r00 += rho(2 * rest, 2 * rest);
        r11 += rho(2 * rest + 1, 2 * rest + 1);
        r01 += rho(2 * rest, 2 * rest + 1);
    }
    QubitMarginal m;
    m.trace = (r00 + r11).real();
    m.bloch_unnormalized = {2 * r01.real(), -2 * r01.imag(), (r00 - r11).real()};
    return m;
}

}  // namespace cliffred::dense
