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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "cliffred/classify.h"
#include "cliffred/dense.h"
#include "cliffred/distillation.h"
#include "cliffred/random_program.h"

namespace {

using namespace cliffred;
using Clock = std::chrono::steady_clock;
using Matrix = dense::Matrix;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string data(const std::string &name) {
    return std::string(CLIFFRED_TEST_DATA) + "/" + name;
}

// Smallest |a - c b| over complex scalars c.
double distance_up_to_scalar(const Matrix &a, const Matrix &b) {
    std::complex<double> num = (b.adjoint() * a).trace();
    double den = (b.adjoint() * b).trace().real();
    if (den == 0) {
        return a.cwiseAbs().maxCoeff();
    }
    return (a - (num / den) * b).cwiseAbs().maxCoeff();
}

// 1. Group sums against the dense density-matrix oracle.
Outcome ac1() {
    constexpr size_t kInstances = 1000;
    constexpr double kTol = 1e-10;
    auto t0 = Clock::now();
    std::mt19937_64 rng(2024);
    double dp = 0;
    double dr = 0;
    size_t undefined = 0;
    size_t mismatched_support = 0;
    for (size_t t = 0; t < kInstances; t++) {
        size_t n = 1 + t % 7;
        StabilizerCode code = random_code(rng, n);
        ProductResource rho = random_product(rng, n);
        ReductionResult g = output_state(code, rho);
        ReductionResult d = dense_oracle(code, decoder_for(code), rho);
        dp = std::max(dp, std::fabs(g.success_prob - d.success_prob));
        if (g.defined != d.defined) {
            mismatched_support++;
            continue;
        }
        if (!g.defined) {
            undefined++;
            continue;
        }
        for (size_t i = 0; i < 3; i++) {
            dr = std::max(dr, std::fabs(g.out_bloch[i] - d.out_bloch[i]));
        }
    }
    double secs = seconds_since(t0);
    bool pass = dp <= kTol && dr <= kTol && mismatched_support == 0 && secs < 60;
    return {pass, fmt::format("{} instances (n <= 7, {} undefined), max |dp| = {:.3e}, max |dr| = {:.3e}, "
                              "tol {:.0e}, {:.2f} s (limit 60 s)",
                              kInstances, undefined, dp, dr, kTol, secs)};
}

// 2. Canonical form against the branch operator.
Outcome ac2() {
    constexpr size_t kBranches = 500;
    constexpr double kTol = 1e-10;
    auto t0 = Clock::now();
    std::mt19937_64 rng(77);
    size_t checked = 0;
    size_t zero = 0;
    size_t merged = 0;
    double worst = 0;
    size_t zero_mismatch = 0;
    while (checked < kBranches) {
        ReductionProgram prog = random_program(rng);
        for (const auto &b : expand_branches(prog).branches) {
            Matrix direct = dense::kraus(b);
            NormalizeResult r = normalize(b);
            if (std::holds_alternative<ZeroBranch>(r)) {
                zero++;
                zero_mismatch += direct.cwiseAbs().maxCoeff() > kTol;
                continue;
            }
            const auto &canon = std::get<CanonicalKraus>(r);
            merged += canon.merges > 0;
            worst = std::max(worst, (dense::kraus(canon) - direct).cwiseAbs().maxCoeff());
            checked++;
        }
    }
    double secs = seconds_since(t0);
    bool pass = worst <= kTol && zero_mismatch == 0 && secs < 60;
    return {pass, fmt::format("{} canonical branches ({} with merges) + {} zero branches, n + m <= 4, "
                              "max entry error {:.3e}, tol {:.0e}, {:.2f} s (limit 60 s)",
                              checked, merged, zero, worst, kTol, secs)};
}

// 3. verify-theorem through the command-line entry point.
Outcome ac3() {
    auto t0 = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    int status = cli::run({"verify-theorem", "--seed", "0", "--trials", "500", "--targets", "3"}, out, err);
    double secs = seconds_since(t0);
    std::string report = out.str();
    std::string violations = "?";
    auto pos = report.find("\nviolations: ");
    if (pos != std::string::npos) {
        violations = report.substr(pos + 13, report.find('\n', pos + 1) - pos - 13);
    }
    bool pass = status == 0 && violations == "0" && secs < 300;
    return {pass, fmt::format("500 trials, 3 targets each, n + m <= 4, tol 1e-9: {} violations, exit {}, "
                              "{:.2f} s (limit 300 s){}",
                              violations, status, secs, err.str().empty() ? "" : " " + err.str())};
}

// 4. Fixture programs for every form.
Outcome ac4() {
    std::vector<std::string> failures;
    auto first = [](const std::string &file) {
        auto b = expand_branches(load_program(data(file))).branches.at(0);
        auto canon = std::get<CanonicalKraus>(normalize(b));
        return std::make_tuple(b, canon, classify(canon, b.id));
    };

    // (a1)
    {
        auto [b, canon, f] = first("measure_x.prog");
        if (f.form != Form::A1 || f.output != Bloch{1, 0, 0}) {
            failures.push_back("measure_x is not A1 along +X");
        }
    }
    // (a2): K K^dag proportional to the equatorial state (|+> + (-i)^N |->)/sqrt 2
    {
        auto [b, canon, f] = first("measure_y.prog");
        const std::complex<double> mi_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
        double s = 1 / std::sqrt(2.0);
        dense::Vector plus(2);
        dense::Vector minus(2);
        plus << s, s;
        minus << s, -s;
        dense::Vector psi = s * (plus + mi_pow[f.relative_phase & 3] * minus);
        Matrix k = dense::kraus(b);
        Matrix kk = k * k.adjoint();
        kk /= kk.trace().real();
        double err = (kk - psi * psi.adjoint()).cwiseAbs().maxCoeff();
        if (f.form != Form::A2 || f.relative_phase != 1 || err > 1e-10) {
            failures.push_back(fmt::format("measure_y: form {} N={} state error {:.3e}", form_name(f.form),
                                           f.relative_phase, err));
        }
    }
    // (b): ancilla factorization K = |j_anc> (x) decode P, up to a scalar
    for (const auto &[file, n, m] : std::vector<std::tuple<std::string, size_t, size_t>>{
             {"parity.prog", 2, 0}, {"ancilla_repetition.prog", 3, 1}, {"steane.prog", 7, 0}}) {
        auto [b, canon, f] = first(file);
        if (f.form != Form::B) {
            failures.push_back(file + " is not form B");
            continue;
        }
        auto ex = extract_reduction(f, n, m);
        Matrix anc = Matrix::Zero(size_t{1} << m, size_t{1} << m);
        anc(static_cast<Eigen::Index>(ex.j_ancilla.to_u64()), 0) = 1;
        Matrix reduced = dense::kraus(ex.code, ex.decode);
        Matrix expect(anc.rows() * reduced.rows(), anc.cols() * reduced.cols());
        for (Eigen::Index i = 0; i < anc.rows(); i++) {
            for (Eigen::Index j = 0; j < anc.cols(); j++) {
                expect.block(i * reduced.rows(), j * reduced.cols(), reduced.rows(), reduced.cols()) =
                    anc(i, j) * reduced;
            }
        }
        double err = distance_up_to_scalar(expect, dense::kraus(b));
        if (err > 1e-10) {
            failures.push_back(fmt::format("{}: factorization error {:.3e}", file, err));
        }
    }
    std::string detail = "a1 measure_x, a2 measure_y (N = 1), b parity / ancilla_repetition / steane";
    for (const auto &f : failures) {
        detail += "; " + f;
    }
    return {failures.empty(), detail};
}

// 5. Steane protocol regression.
Outcome ac5() {
    std::vector<std::string> notes;
    bool pass = true;
    ProtocolSpec spec = builtin("steane7");

    MapPoint half = iterate_map(spec, 0.5);
    bool exact = half.p_success == 1.0 / 64 && half.f_out == 0.5;
    pass &= exact;
    notes.push_back(fmt::format("f = 1/2: p = {:.17g}, f_out = {:.17g} ({})", half.p_success, half.f_out,
                                exact ? "exact" : "NOT exact"));

    double curve = 0;
    for (int i = 0; i <= 100; i++) {
        double f = i / 100.0;
        curve = std::max(curve, std::fabs(iterate_map(spec, f, MapPath::GroupSum).f_out -
                                          iterate_map(spec, f, MapPath::Dense).f_out));
    }
    pass &= curve <= 1e-8;
    notes.push_back(fmt::format("curve max |group - dense| = {:.3e} over 101 points", curve));

    try {
        ThresholdResult g = find_threshold(spec);
        ThresholdResult d =
            find_threshold(spec, kDefaultBracketLo, kDefaultBracketHi, kDefaultTolerance, MapPath::Dense);
        bool agree = std::fabs(g.threshold - d.threshold) <= 1e-8;
        pass &= agree;
        notes.push_back(fmt::format("threshold {:.12f} / {:.12f}", g.threshold, d.threshold));
    } catch (const NoThresholdInBracket &e) {
        pass = false;
        notes.push_back(fmt::format("threshold: none ({})", e.what()));
    }

    auto b = expand_branches(load_program(data("steane.prog"))).branches.at(0);
    auto f = classify(std::get<CanonicalKraus>(normalize(b)), b.id);
    bool same = false;
    if (f.form == Form::B) {
        auto ex = extract_reduction(f, 7, 0);
        same = ex.code.same_group(spec.code) && spec.code.same_group(ex.code);
    }
    pass &= same;
    notes.push_back(same ? "extracted group equals the listed group" : "extracted group differs");

    std::string detail;
    for (const auto &n : notes) {
        detail += (detail.empty() ? "" : "; ") + n;
    }
    return {pass, detail};
}

// 6. Performance of the 15-qubit group sums.
Outcome ac6() {
    ProtocolSpec spec = builtin("reed_muller15");
    iterate_map(spec, 0.9);
    double worst = 0;
    for (int i = 0; i < 5; i++) {
        auto t0 = Clock::now();
        iterate_map(spec, 0.8 + 0.02 * i);
        worst = std::max(worst, seconds_since(t0));
    }
    auto t0 = Clock::now();
    auto pts = sweep(spec, 0.5, 1.0, 1000, MapPath::GroupSum, EngineOptions{1});
    double sweep_secs = seconds_since(t0);
    bool pass = worst < 0.050 && sweep_secs < 30 && pts.size() == 1000;
    return {pass, fmt::format("reed_muller15 iterate_map worst of 5: {:.2f} ms (limit 50 ms); "
                              "1000-point sweep single-threaded: {:.2f} s (limit 30 s)",
                              worst * 1e3, sweep_secs)};
}

// 7. Byte-identical reports.
Outcome ac7() {
    std::vector<std::vector<std::string>> commands = {
        {"normalize", data("steane.prog")},
        {"normalize", data("ancilla_repetition.prog")},
        {"classify", data("steane.prog"), "--axis", "T", "--f", "0.95"},
        {"classify", data("feedforward.prog"), "--axis", "H", "--f", "0.8", "--target", "0,1,0"},
        {"sweep", "steane7", "--grid", "0.5:1:101"},
        {"sweep", "five_qubit", "--axis", "T", "--grid", "0.5:1:51", "--path", "dense"},
        {"threshold", "five_qubit", "--trajectory", "0.9"},
        {"threshold", "parity2", "--path", "dense"},
        {"threshold", "steane7"},
        {"verify-theorem", "--seed", "11", "--trials", "100"},
    };
    size_t identical = 0;
    std::string bad;
    for (const auto &cmd : commands) {
        std::string reports[3];
        int status[3];
        for (int k = 0; k < 3; k++) {
            // the third run uses several worker threads
            if (k == 2) {
                setenv("CLIFFRED_THREADS", "4", 1);
            }
            std::ostringstream out;
            std::ostringstream err;
            status[k] = cli::run(cmd, out, err);
            reports[k] = out.str() + err.str();
            unsetenv("CLIFFRED_THREADS");
        }
        if (reports[0] == reports[1] && reports[0] == reports[2] && status[0] == status[1] &&
            status[0] == status[2]) {
            identical++;
        } else {
            bad += " " + cmd[0];
        }
    }
    return {identical == commands.size(),
            fmt::format("{}/{} commands byte-identical over 3 runs (1, 1, 4 threads){}", identical, commands.size(),
                        bad.empty() ? "" : "; differing:" + bad)};
}

}  // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"AC1 oracle equivalence", ac1}, {"AC2 normalizer soundness", ac2}, {"AC3 theorem property suite", ac3},
        {"AC4 form coverage", ac4},      {"AC5 Steane regression", ac5},    {"AC6 performance", ac6},
        {"AC7 determinism", ac7},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        fmt::print("{} {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", 7 - failed, 7);
    return failed ? 1 : 0;
}
