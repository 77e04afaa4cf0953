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

#include "cliffred/stabilizer_code.h"

#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <sstream>

#include "cliffred/gf2.h"

namespace cliffred {

StabilizerCode::StabilizerCode(std::vector<PauliOperator> generators, PauliOperator logical_x, PauliOperator logical_z)
    : n_(logical_x.num_qubits()),
      generators_(std::move(generators)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
    if (n_ == 0) {
        throw CodeValidationError("code needs at least one qubit");
    }
    if (generators_.size() != n_ - 1) {
        throw CodeValidationError(
            fmt::format("a code on {} qubits needs {} generators, got {}", n_, n_ - 1, generators_.size()));
    }
    std::vector<const PauliOperator *> all;
    for (const auto &g : generators_) {
        all.push_back(&g);
    }
    all.push_back(&logical_x_);
    all.push_back(&logical_z_);
    for (const PauliOperator *p : all) {
        if (p->num_qubits() != n_) {
            throw CodeValidationError(fmt::format("{} does not act on {} qubits", p->str(), n_));
        }
        if (!p->is_hermitian()) {
            throw CodeValidationError(fmt::format("{} is not Hermitian", p->str()));
        }
    }
    for (size_t i = 0; i < all.size(); i++) {
        for (size_t j = i + 1; j < all.size(); j++) {
            bool want = !(all[i] == &logical_x_ && all[j] == &logical_z_);
            if (commutes(*all[i], *all[j]) != want) {
                throw CodeValidationError(fmt::format("{} and {} should {}", all[i]->str(), all[j]->str(),
                                                      want ? "commute" : "anticommute"));
            }
        }
    }
    CommutingBasis basis(n_);
    for (const auto &g : generators_) {
        if (!basis.insert(g)) {
            auto t = basis.membership(g);
            throw CodeValidationError(fmt::format("generator {} is {} the product of earlier generators", g.str(),
                                                  t && *t == 2 ? "minus" : "dependent on"));
        }
    }
}

PauliOperator StabilizerCode::logical_y() const {
    return (logical_x_ * logical_z_).times_i(1);
}

bool StabilizerCode::same_group(const StabilizerCode &other) const {
    if (other.n_ != n_) {
        return false;
    }
    CommutingBasis basis(n_);
    for (const auto &g : generators_) {
        basis.insert(g);
    }
    for (const auto &g : other.generators_) {
        auto t = basis.membership(g);
        if (!t || *t != 0) {
            return false;
        }
    }
    return true;
}

std::string StabilizerCode::str() const {
    std::string s = fmt::format("n: {}\n", n_);
    for (const auto &g : generators_) {
        s += "gen: " + g.str() + "\n";
    }
    s += "Xl: " + logical_x_.str() + "\n";
    s += "Zl: " + logical_z_.str() + "\n";
    return s;
}

StabilizerCode parse_code(std::string_view text) {
    std::optional<size_t> n;
    std::vector<PauliOperator> gens;
    std::optional<PauliOperator> xl;
    std::optional<PauliOperator> zl;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string &msg) {
        throw CodeValidationError(fmt::format("line {}: {}", lineno, msg));
    };
    while (std::getline(in, line)) {
        lineno++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string key;
        std::string value;
        if (!(ls >> key)) {
            continue;
        }
        if (!(ls >> value)) {
            fail(fmt::format("'{}' has no value", key));
        }
        std::string extra;
        if (ls >> extra) {
            fail(fmt::format("unexpected '{}'", extra));
        }
        try {
            if (key == "n:") {
                size_t used = 0;
                long v = std::stol(value, &used);
                if (used != value.size() || v <= 0) {
                    fail("n must be a positive integer");
                }
                n = static_cast<size_t>(v);
            } else if (key == "gen:") {
                gens.push_back(PauliOperator::from_str(value));
            } else if (key == "Xl:") {
                xl = PauliOperator::from_str(value);
            } else if (key == "Zl:") {
                zl = PauliOperator::from_str(value);
            } else {
                fail(fmt::format("unknown key '{}'", key));
            }
        } catch (const std::logic_error &e) {
            if (dynamic_cast<const CodeValidationError *>(&e)) {
                throw;
            }
            fail(e.what());
        }
    }
    if (!n) {
        throw CodeValidationError("code file has no 'n:' line");
    }
    if (!xl || !zl) {
        throw CodeValidationError("code file needs both 'Xl:' and 'Zl:'");
    }
    if (xl->num_qubits() != *n) {
        throw CodeValidationError(fmt::format("Xl has {} qubits but n is {}", xl->num_qubits(), *n));
    }
    return StabilizerCode(std::move(gens), *xl, *zl);
}

StabilizerCode load_code(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open code file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_code(buf.str());
}

CliffordTableau complete_tableau(const PauliOperator &image_x0, const std::vector<PauliOperator> &image_z) {
    size_t n = image_z.size();
    std::vector<PauliOperator> xs{image_x0};
    for (size_t q = 1; q < n; q++) {
        std::vector<BitVec> rows;
        std::vector<bool> rhs;
        for (size_t r = 0; r < n; r++) {
            rows.push_back(symplectic_row(image_z[r]));
            rhs.push_back(r == q);
        }
        for (const auto &x : xs) {
            rows.push_back(symplectic_row(x));
            rhs.push_back(false);
        }
        auto sol = gf2_solve(rows, rhs, 2 * n);
        if (!sol) {
            throw std::logic_error("complete_tableau: images are not part of a symplectic basis");
        }
        xs.push_back(pauli_from_symplectic(*sol, n));
    }
    return CliffordTableau::from_images(std::move(xs), image_z);
}

CliffordTableau decoder_for(const StabilizerCode &code) {
    return decoder_for(code, BitVec(code.num_qubits() - 1));
}

CliffordTableau decoder_for(const StabilizerCode &code, const BitVec &j) {
    std::vector<PauliOperator> zs{code.logical_z()};
    for (size_t q = 0; q < code.generators().size(); q++) {
        zs.push_back(j.get(q) ? -code.generators()[q] : code.generators()[q]);
    }
    return complete_tableau(code.logical_x(), zs).inverse();
}

}  // namespace cliffred
