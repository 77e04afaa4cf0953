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

#include "cliffred/distillation.h"

#include <fmt/format.h>

#include <array>
#include <cmath>
#include <sstream>

namespace cliffred {

MagicAxis MagicAxis::h_type() {
    double s = 1 / std::sqrt(2.0);
    return {AxisFamily::H, {s, 0, s}};
}

MagicAxis MagicAxis::t_type() {
    double s = 1 / std::sqrt(3.0);
    return {AxisFamily::T, {s, s, s}};
}

MagicAxis MagicAxis::custom(const Bloch &axis) {
    if (std::fabs(norm(axis) - 1) > 1e-12) {
        throw std::invalid_argument(
            fmt::format("magic axis ({}, {}, {}) is not a unit vector", axis[0], axis[1], axis[2]));
    }
    return {AxisFamily::Custom, axis};
}

MagicAxis MagicAxis::parse(std::string_view text) {
    if (text == "H") {
        return h_type();
    }
    if (text == "T") {
        return t_type();
    }
    Bloch v{};
    std::istringstream in{std::string(text)};
    char comma = 0;
    if (!(in >> v[0] >> comma) || comma != ',' || !(in >> v[1] >> comma) || comma != ',' || !(in >> v[2]) ||
        !in.eof()) {
        throw std::invalid_argument(fmt::format("axis must be H, T or x,y,z, got '{}'", text));
    }
    // accept a direction and normalize it
    double nv = norm(v);
    if (nv == 0) {
        throw std::invalid_argument("axis must be nonzero");
    }
    for (auto &c : v) {
        c /= nv;
    }
    return custom(v);
}

std::string MagicAxis::str() const {
    switch (family) {
        case AxisFamily::H:
            return "H";
        case AxisFamily::T:
            return "T";
        case AxisFamily::Custom:
            break;
    }
    return fmt::format("{:.17g},{:.17g},{:.17g}", axis[0], axis[1], axis[2]);
}

Bloch magic_state(double f, const MagicAxis &axis) {
    if (!(f >= 0 && f <= 1)) {
        throw std::invalid_argument(fmt::format("fidelity {} is outside [0, 1]", f));
    }
    double c = 2 * f - 1;
    return {c * axis.axis[0], c * axis.axis[1], c * axis.axis[2]};
}

Bloch apply_clifford(const CliffordTableau &c, const Bloch &r) {
    if (c.num_qubits() != 1) {
        throw std::invalid_argument("apply_clifford: needs a single-qubit tableau");
    }
    const PauliOperator images[3] = {c.image_x(0), c.image_y(0), c.image_z(0)};
    Bloch out{0, 0, 0};
    for (size_t i = 0; i < 3; i++) {
        const PauliOperator &p = images[i];
        size_t axis = p.x().get(0) ? (p.z().get(0) ? 1 : 0) : 2;
        out[axis] += (p.sign_exponent() == 2 ? -1 : 1) * r[i];
    }
    return out;
}

namespace {

std::array<long double, 3> extended_axis(const MagicAxis &axis) {
    switch (axis.family) {
        case AxisFamily::H: {
            long double s = 1 / std::sqrt(2.0L);
            return {s, 0, s};
        }
        case AxisFamily::T: {
            long double s = 1 / std::sqrt(3.0L);
            return {s, s, s};
        }
        case AxisFamily::Custom:
            break;
    }
    return {axis.axis[0], axis.axis[1], axis.axis[2]};
}

}  // namespace

MapPoint iterate_map(const ProtocolSpec &spec, double f, MapPath path, const EngineOptions &opts) {
    size_t n = spec.code.num_qubits();
    check_unit(spec.target, "iterate_map");
    Bloch in = magic_state(f, spec.input_axis);
    if (path == MapPath::Dense) {
        ReductionResult r = dense_oracle(spec.code, decoder_for(spec.code), ProductResource::copies(in, n));
        if (!r.defined) {
            throw UndefinedResultError(fmt::format("{}: success probability is zero at f = {}", spec.name, f));
        }
        Bloch out = spec.post_clifford ? apply_clifford(*spec.post_clifford, r.out_bloch) : r.out_bloch;
        return {f, fidelity(out, spec.target), r.success_prob};
    }
    // Extended precision end to end so that pure inputs give f_out = 1 after
    // the final rounding.
    auto axis = extended_axis(spec.input_axis);
    long double c = 2.0L * f - 1.0L;
    std::vector<BlochL> rho(n, BlochL{c * axis[0], c * axis[1], c * axis[2]});
    LogicalSums sums = logical_sums(spec.code, rho, opts);
    if (!(static_cast<double>(sums.p) > kZeroProbability)) {
        throw UndefinedResultError(fmt::format("{}: success probability is zero at f = {}", spec.name, f));
    }
    std::array<long double, 3> out{};
    for (size_t i = 0; i < 3; i++) {
        long double v = sums.weighted[i] / sums.p;
        if (spec.post_clifford) {
            const CliffordTableau &pc = *spec.post_clifford;
            const PauliOperator img = i == 0 ? pc.image_x(0) : (i == 1 ? pc.image_y(0) : pc.image_z(0));
            size_t k = img.x().get(0) ? (img.z().get(0) ? 1 : 0) : 2;
            out[k] += img.sign_exponent() == 2 ? -v : v;
        } else {
            out[i] += v;
        }
    }
    long double overlap = 0;
    for (size_t i = 0; i < 3; i++) {
        overlap += out[i] * static_cast<long double>(spec.target[i]);
    }
    return {f, static_cast<double>(0.5L * (1 + overlap)), static_cast<double>(sums.p)};
}

NoThresholdInBracket::NoThresholdInBracket(double lo, double hi, double glo, double ghi)
    : std::runtime_error(fmt::format("no sign change of f_out - f on [{:.17g}, {:.17g}]: gain {}{:.3e} at {:.17g}, "
                                     "{}{:.3e} at {:.17g}",
                                     lo, hi, glo < 0 ? "" : "+", glo, lo, ghi < 0 ? "" : "+", ghi, hi)),
      gain_lo(glo),
      gain_hi(ghi) {}

ThresholdResult find_threshold(const ProtocolSpec &spec, double lo, double hi, double tol, MapPath path,
                               const EngineOptions &opts) {
    if (!(lo < hi) || !(tol > 0)) {
        throw std::invalid_argument("find_threshold: need lo < hi and tol > 0");
    }
    auto gain = [&](double f) { return iterate_map(spec, f, path, opts).f_out - f; };
    double glo = gain(lo);
    double ghi = gain(hi);
    if (glo == 0) {
        return {lo, 0};
    }
    if (ghi == 0) {
        return {hi, 0};
    }
    if ((glo < 0) == (ghi < 0)) {
        throw NoThresholdInBracket(lo, hi, glo, ghi);
    }
    size_t steps = static_cast<size_t>(std::ceil(std::log2((hi - lo) / tol)));
    ThresholdResult out;
    for (; out.iterations < steps; out.iterations++) {
        double mid = 0.5 * (lo + hi);
        double g = gain(mid);
        if (g == 0) {
            return {mid, out.iterations + 1};
        }
        if ((g < 0) == (glo < 0)) {
            lo = mid;
            glo = g;
        } else {
            hi = mid;
        }
    }
    out.threshold = 0.5 * (lo + hi);
    return out;
}

std::vector<MapPoint> sweep(const ProtocolSpec &spec, double a, double b, size_t k, MapPath path,
                            const EngineOptions &opts) {
    if (k == 0) {
        throw std::invalid_argument("sweep: need at least one point");
    }
    std::vector<MapPoint> out;
    for (size_t i = 0; i < k; i++) {
        // hit both endpoints exactly
        double f = k == 1 ? a : (i + 1 == k ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(k - 1));
        out.push_back(iterate_map(spec, f, path, opts));
    }
    return out;
}

std::string sweep_csv(const std::vector<MapPoint> &points) {
    std::string s = "f_in,f_out,p_success\n";
    for (const auto &p : points) {
        s += fmt::format("{:.17g},{:.17g},{:.17g}\n", p.f_in, p.f_out, p.p_success);
    }
    return s;
}

std::vector<double> trajectory(const ProtocolSpec &spec, double f, size_t rounds, const EngineOptions &opts) {
    std::vector<double> out{f};
    for (size_t r = 0; r < rounds; r++) {
        // rounding can push a fidelity a hair past 1
        f = std::min(1.0, std::max(0.0, iterate_map(spec, f, MapPath::GroupSum, opts).f_out));
        out.push_back(f);
    }
    return out;
}

namespace {

StabilizerCode code_from(const std::vector<std::string> &gens, const std::string &xl, const std::string &zl) {
    std::vector<PauliOperator> g;
    for (const auto &s : gens) {
        g.push_back(PauliOperator::from_str(s));
    }
    return StabilizerCode(std::move(g), PauliOperator::from_str(xl), PauliOperator::from_str(zl));
}

StabilizerCode reed_muller15() {
    // column c = 1..15 sits on qubit c-1; row i holds bit i of c
    auto row = [](unsigned mask, char letter) {
        std::string s = "+";
        for (unsigned c = 1; c <= 15; c++) {
            s.push_back((c & mask) == mask ? letter : 'I');
        }
        return s;
    };
    std::vector<std::string> gens;
    for (unsigned i = 0; i < 4; i++) {
        gens.push_back(row(1u << i, 'X'));
    }
    for (unsigned i = 0; i < 4; i++) {
        gens.push_back(row(1u << i, 'Z'));
    }
    for (unsigned i = 0; i < 4; i++) {
        for (unsigned j = i + 1; j < 4; j++) {
            gens.push_back(row((1u << i) | (1u << j), 'Z'));
        }
    }
    return code_from(gens, "+" + std::string(15, 'X'), "+" + std::string(15, 'Z'));
}

}  // namespace

const std::vector<std::string> &builtin_names() {
    static const std::vector<std::string> names{"steane7", "five_qubit", "parity2", "reed_muller15"};
    return names;
}

ProtocolSpec builtin(std::string_view name) {
    ProtocolSpec spec;
    spec.name = std::string(name);
    if (name == "steane7") {
        spec.code = code_from({"+XXXXIII", "+XXIIXXI", "+XIXIXIX", "+ZZZZIII", "+ZZIIZZI", "+ZIZIZIZ"}, "+XXXXXXX",
                              "+ZZZZZZZ");
        spec.input_axis = MagicAxis::t_type();
        // the decoded state points along (-1, 1, -1); Y flips X and Z back
        spec.post_clifford = named_gate("Y", {0}, 1);
    } else if (name == "five_qubit") {
        spec.code = code_from({"+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"}, "+XXXXX", "+ZZZZZ");
        spec.input_axis = MagicAxis::t_type();
        // decoded along -(1, 1, 1); X S is the half turn about (1, -1, 0)
        spec.post_clifford = compose(named_gate("X", {0}, 1), named_gate("S", {0}, 1));
    } else if (name == "parity2") {
        spec.code = code_from({"+ZZ"}, "+XX", "+ZI");
        spec.input_axis = MagicAxis::h_type();
    } else if (name == "reed_muller15") {
        spec.code = reed_muller15();
        // eigenaxis of the transversal pi/8 phase gate; decoded along (1, -1, 0)
        double s = 1 / std::sqrt(2.0);
        spec.input_axis = MagicAxis::custom({s, s, 0});
        spec.post_clifford = named_gate("X", {0}, 1);
    } else {
        throw std::invalid_argument(fmt::format("unknown builtin '{}' (expected steane7, five_qubit, parity2 or "
                                                "reed_muller15)",
                                                name));
    }
    spec.target = spec.input_axis.axis;
    return spec;
}

ProtocolSpec protocol_from_code(const StabilizerCode &code, const MagicAxis &axis, std::string name) {
    ProtocolSpec spec;
    spec.name = std::move(name);
    spec.code = code;
    spec.input_axis = axis;
    spec.target = axis.axis;
    return spec;
}

}  // namespace cliffred
