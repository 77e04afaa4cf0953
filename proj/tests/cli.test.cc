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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"

namespace cliffred::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return std::string(CLIFFRED_TEST_DATA) + "/" + name;
}

std::string temp_file(const std::string &name, const std::string &text) {
    fs::path p = fs::temp_directory_path() / ("cliffred_cli_" + name);
    std::ofstream(p) << text;
    return p.string();
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

std::string field(const std::string &report, const std::string &key) {
    for (const auto &l : lines(report)) {
        if (l.rfind(key + ": ", 0) == 0) {
            return l.substr(key.size() + 2);
        }
    }
    return "";
}

size_t count_prefix(const std::string &report, const std::string &prefix) {
    size_t n = 0;
    for (const auto &l : lines(report)) {
        n += l.rfind(prefix, 0) == 0;
    }
    return n;
}

void expect_single_error(const Run &r, ExitCode code) {
    EXPECT_EQ(r.status, static_cast<int>(code));
    ASSERT_EQ(lines(r.err).size(), 1u) << r.err;
    EXPECT_EQ(r.err.rfind(std::string("error: ") + code_name(code) + ": ", 0), 0u) << r.err;
}

TEST(CliDigest, KnownValues) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
    EXPECT_EQ(digest("a"), "fnv1a64=af63dc4c8601ec8c");
}

TEST(CliNormalize, SteaneListsAllPlusBranchFirst) {
    auto r = run_cli({"normalize", data("steane.prog")});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "branches"), "64 total: 64 exhaustive: yes");
    size_t rows = 0;
    for (const auto &l : lines(r.out)) {
        if (!l.empty() && std::isdigit(static_cast<unsigned char>(l[0]))) {
            rows++;
        }
    }
    EXPECT_EQ(rows, 64u);
    EXPECT_EQ(count_prefix(r.out, "0\tc=[] o=[x1:+1,x2:+1,x3:+1,z1:+1,z2:+1,z3:+1] j=000000\tcanonical"), 1u);
    EXPECT_EQ(field(r.out, "summary"), "canonical=1 zero=63");
    EXPECT_EQ(field(r.out, "completeness").rfind("below_identity", 0), 0u);
}

TEST(CliNormalize, EmptyProgramIsIdentity) {
    auto path = temp_file("empty.prog", "qubits: 1 0\n");
    auto r = run_cli({"normalize", path});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "branches"), "1 total: 1 exhaustive: yes");
    EXPECT_EQ(count_prefix(r.out, "0\tc=[] o=[] j=\tcanonical\t0\t1\t0\t0\t[]\tX0->+X Z0->+Z"), 1u);
    EXPECT_EQ(field(r.out, "completeness"), "complete");
}

TEST(CliNormalize, KeepBothIsComplete) {
    auto r = run_cli({"normalize", data("feedforward.prog")});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "completeness"), "complete");
}

TEST(CliNormalize, ContradictionFails) {
    auto r = run_cli({"normalize", data("contradiction.prog")});
    expect_single_error(r, ExitCode::AllZero);
    EXPECT_EQ(field(r.out, "summary"), "canonical=0 zero=1");
}

TEST(CliNormalize, ParseErrorNamesTheLine) {
    auto path = temp_file("bad.prog", "qubits: 2 0\nunitary CNOT 0 1\nmeasure ZQ keep +1 as a\n");
    auto r = run_cli({"normalize", path});
    expect_single_error(r, ExitCode::Parse);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliNormalize, CapExceeded) {
    auto r = run_cli({"normalize", data("steane.prog"), "--cap", "10"});
    expect_single_error(r, ExitCode::CapExceeded);
    EXPECT_EQ(field(r.out, "branches"), "10 total: 64 exhaustive: no");
}

TEST(CliClassify, SteaneBestBranchIsACodeReduction) {
    auto r = run_cli({"classify", data("steane.prog"), "--axis", "T", "--f", "0.95"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "k_max").rfind("branch=0 form=B", 0), 0u) << r.out;
    EXPECT_EQ(field(r.out, "dominated"), "yes");
    double bound = std::stod(field(r.out, "theorem_bound"));
    double fid = std::stod(field(r.out, "program_fidelity"));
    EXPECT_GE(bound + 1e-9, fid);
    EXPECT_EQ(count_prefix(r.out, "  gen: "), 6u);
}

TEST(CliClassify, MeasureXIsDominatedByTheStabilizerBound) {
    auto r = run_cli({"classify", data("measure_x.prog"), "--f", "0.9", "--target", "0.6,0,0.8"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "k_max").rfind("branch=0 form=A1", 0), 0u);
    EXPECT_EQ(std::stod(field(r.out, "stabilizer_bound")), 0.9);
    EXPECT_EQ(field(r.out, "best_code_reduction"), "none");
    EXPECT_EQ(std::stod(field(r.out, "program_fidelity")), 0.8);
}

TEST(CliClassify, TiesGoToTheLowestBranch) {
    // both outcomes give X eigenstates, equally far from +Z
    auto path = temp_file("tie.prog", "qubits: 1 0\nmeasure X keep both as a\n");
    auto r = run_cli({"classify", path, "--f", "0.8", "--target", "0,0,1"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "k_max"), "branch=0 form=A1 fidelity=0.5");
}

TEST(CliClassify, BadTarget) {
    expect_single_error(run_cli({"classify", data("measure_x.prog"), "--f", "0.9", "--target", "1,1,0"}),
                        ExitCode::InvalidInput);
    expect_single_error(run_cli({"classify", data("measure_x.prog"), "--f", "0.9", "--target", "1,1"}),
                        ExitCode::Usage);
    expect_single_error(run_cli({"classify", data("measure_x.prog"), "--f", "1.5"}), ExitCode::InvalidInput);
}

TEST(CliSweep, SteaneEndpointsToFile) {
    auto csv_path = (fs::temp_directory_path() / "cliffred_cli_sweep.csv").string();
    auto r = run_cli({"sweep", "steane7", "--grid", "0.5:1:101", "--out", csv_path});
    ASSERT_EQ(r.status, 0) << r.err;
    std::ifstream in(csv_path);
    std::stringstream buf;
    buf << in.rdbuf();
    auto rows = lines(buf.str());
    ASSERT_EQ(rows.size(), 102u);
    EXPECT_EQ(rows[0], "f_in,f_out,p_success");
    EXPECT_EQ(rows[1], "0.5,0.5,0.015625");
    EXPECT_EQ(rows[101].rfind("1,1,", 0), 0u);
    EXPECT_NE(field(r.out, "csv").find("rows=101 fnv1a64="), std::string::npos);
}

TEST(CliSweep, CodeFileWithAxis) {
    auto path = temp_file("parity.code", "n: 2\ngen: +ZZ\nXl: +XX\nZl: +ZI\n");
    auto r = run_cli({"sweep", path, "--axis", "H", "--grid", "0.5:1:3"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "axis"), "H");
    EXPECT_EQ(field(r.out, "post_clifford"), "none");
    EXPECT_EQ(count_prefix(r.out, "0.5,0.5,0.5"), 1u);
}

TEST(CliSweep, Errors) {
    expect_single_error(run_cli({"sweep", "steane7", "--grid", "0.5:1"}), ExitCode::Usage);
    expect_single_error(run_cli({"sweep", "no_such_protocol"}), ExitCode::Io);
    auto bad = temp_file("bad.code", "n: 2\ngen: +ZZ\nXl: +XI\nZl: +ZI\n");
    expect_single_error(run_cli({"sweep", bad}), ExitCode::Parse);
    expect_single_error(run_cli({"sweep", "reed_muller15", "--path", "dense", "--grid", "0.9:0.9:1"}),
                        ExitCode::InvalidInput);
}

TEST(CliThreshold, ParityAgreesWithDense) {
    auto g = run_cli({"threshold", "parity2"});
    auto d = run_cli({"threshold", "parity2", "--path", "dense"});
    ASSERT_EQ(g.status, 0) << g.err;
    ASSERT_EQ(d.status, 0) << d.err;
    EXPECT_NEAR(std::stod(field(g.out, "threshold")), std::stod(field(d.out, "threshold")), 1e-8);
    EXPECT_EQ(field(g.out, "iterations"), "29");
}

TEST(CliThreshold, SteaneTTypeReportsGainSigns) {
    auto r = run_cli({"threshold", "steane7"});
    expect_single_error(r, ExitCode::NoThreshold);
    EXPECT_NE(r.err.find("gain -"), std::string::npos) << r.err;
    auto h = run_cli({"threshold", "steane7", "--axis", "H"});
    ASSERT_EQ(h.status, 0) << h.err;
    EXPECT_NEAR(std::stod(field(h.out, "threshold")), 0.85355339, 1e-8);
}

TEST(CliThreshold, TrajectoryIsMonotoneAboveThreshold) {
    auto r = run_cli({"threshold", "five_qubit", "--trajectory", "0.85", "--rounds", "10"});
    ASSERT_EQ(r.status, 0) << r.err;
    std::vector<double> f;
    bool in_traj = false;
    for (const auto &l : lines(r.out)) {
        if (in_traj) {
            f.push_back(std::stod(l.substr(l.find('\t') + 1)));
        }
        in_traj |= l.rfind("trajectory:", 0) == 0;
    }
    ASSERT_EQ(f.size(), 11u);
    for (size_t i = 1; i < f.size(); i++) {
        EXPECT_GE(f[i], f[i - 1]);
    }
}

TEST(CliVerifyTheorem, SeedZero) {
    auto r = run_cli({"verify-theorem", "--seed", "0", "--trials", "100"});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(field(r.out, "violations"), "0");
    EXPECT_EQ(count_prefix(r.out, "99\t99\t"), 1u);
    expect_single_error(run_cli({"verify-theorem", "--max-qubits", "5"}), ExitCode::Usage);
}

TEST(CliDeterminism, RepeatedRunsAreIdentical) {
    std::vector<std::vector<std::string>> commands = {
        {"normalize", data("ancilla_repetition.prog")},
        {"classify", data("steane.prog"), "--axis", "T", "--f", "0.9"},
        {"sweep", "five_qubit", "--grid", "0.5:1:21"},
        {"threshold", "five_qubit", "--trajectory", "0.9"},
        {"verify-theorem", "--seed", "7", "--trials", "30"},
    };
    for (const auto &cmd : commands) {
        auto a = run_cli(cmd);
        auto b = run_cli(cmd);
        EXPECT_EQ(a.status, 0) << cmd[0] << a.err;
        EXPECT_EQ(a.out, b.out) << cmd[0];
        setenv("CLIFFRED_THREADS", "3", 1);
        auto c = run_cli(cmd);
        unsetenv("CLIFFRED_THREADS");
        EXPECT_EQ(a.out, c.out) << cmd[0];
    }
}

TEST(CliUsage, SingleLineErrors) {
    expect_single_error(run_cli({}), ExitCode::Usage);
    expect_single_error(run_cli({"frobnicate"}), ExitCode::Usage);
    expect_single_error(run_cli({"classify", data("measure_x.prog")}), ExitCode::Usage);
    setenv("CLIFFRED_THREADS", "zero", 1);
    auto r = run_cli({"sweep", "steane7"});
    unsetenv("CLIFFRED_THREADS");
    expect_single_error(r, ExitCode::Usage);
    EXPECT_TRUE(r.out.empty());
    auto help = run_cli({"--help"});
    EXPECT_EQ(help.status, 0);
    EXPECT_NE(help.out.find("verify-theorem"), std::string::npos);
}

}  // namespace
}  // namespace cliffred::cli
