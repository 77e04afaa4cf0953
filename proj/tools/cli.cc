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

#include "cli.h"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "cliffred/classify.h"
#include "cliffred/dense.h"
#include "cliffred/distillation.h"
#include "cliffred/theorem.h"

namespace cliffred::cli {

const char *code_name(ExitCode code) {
    switch (code) {
        case ExitCode::Ok:
            return "ok";
        case ExitCode::Usage:
            return "usage";
        case ExitCode::Io:
            return "io_error";
        case ExitCode::Parse:
            return "parse_error";
        case ExitCode::CapExceeded:
            return "cap_exceeded";
        case ExitCode::AllZero:
            return "all_zero";
        case ExitCode::NoThreshold:
            return "no_threshold";
        case ExitCode::TheoremViolation:
            return "theorem_violation";
        case ExitCode::Undefined:
            return "undefined";
        case ExitCode::InvalidInput:
            return "invalid_input";
    }
    return "unknown";
}

uint64_t fnv1a64(std::string_view bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest(std::string_view bytes) {
    return fmt::format("fnv1a64={:016x}", fnv1a64(bytes));
}

namespace {

std::string num(double v) {
    return fmt::format("{:.17g}", v);
}

std::string vec3(const Bloch &v) {
    return fmt::format("{:.17g},{:.17g},{:.17g}", v[0], v[1], v[2]);
}

std::string one_line(std::string s) {
    for (auto &c : s) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError(ExitCode::Io, fmt::format("cannot open '{}'", path));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw CliError(ExitCode::Io, fmt::format("cannot write '{}'", path));
    }
}

Bloch parse_vec3(const std::string &text, const char *what) {
    Bloch v{};
    std::istringstream in(text);
    char c1 = 0;
    char c2 = 0;
    if (!(in >> v[0] >> c1 >> v[1] >> c2 >> v[2]) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
        throw CliError(ExitCode::Usage, fmt::format("{} must be x,y,z, got '{}'", what, text));
    }
    return v;
}

Bloch parse_target(const std::string &text) {
    Bloch t = parse_vec3(text, "--target");
    if (std::fabs(norm(t) - 1) > 1e-9) {
        throw CliError(ExitCode::InvalidInput, fmt::format("--target {} is not a unit vector", text));
    }
    return t;
}

MagicAxis parse_axis(const std::string &text) {
    try {
        return MagicAxis::parse(text);
    } catch (const std::invalid_argument &e) {
        throw CliError(ExitCode::Usage, e.what());
    }
}

size_t env_threads() {
    const char *v = std::getenv("CLIFFRED_THREADS");
    if (!v || !*v) {
        return 1;
    }
    char *end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end || n < 1 || n > 1024) {
        throw CliError(ExitCode::Usage, fmt::format("CLIFFRED_THREADS must be an integer in [1, 1024], got '{}'", v));
    }
    return static_cast<size_t>(n);
}

ReductionProgram load_program_file(const std::string &path, std::string &text) {
    text = read_file(path);
    try {
        return parse_program(text);
    } catch (const ProgramParseError &e) {
        throw CliError(ExitCode::Parse, fmt::format("{}: {}", path, e.what()));
    }
}

void header(std::ostream &out, const std::string &command, const std::vector<std::string> &args) {
    std::string echo;
    for (const auto &a : args) {
        echo += (echo.empty() ? "" : " ") + a;
    }
    out << "cliffred " << command << "\n";
    out << "command: " << echo << "\n";
}

void program_lines(std::ostream &out, const std::string &path, const std::string &text, const ReductionProgram &p) {
    out << "program: " << path << " " << digest(text) << "\n";
    out << fmt::format("qubits: {} {} output: {}\n", p.n_resource, p.n_ancilla, p.output_qubit);
}

std::string projector_list(const std::vector<PauliOperator> &gens) {
    std::string s = "[";
    for (size_t i = 0; i < gens.size(); i++) {
        s += (i ? "," : "") + gens[i].str();
    }
    return s + "]";
}

BranchSet branches_or_throw(const ReductionProgram &prog, size_t cap) {
    try {
        return expand_branches(prog, cap);
    } catch (const std::runtime_error &e) {
        throw CliError(ExitCode::InvalidInput, e.what());
    }
}

void check_exhaustive(const BranchSet &set, size_t cap) {
    if (!set.exhaustive) {
        throw CliError(ExitCode::CapExceeded,
                       fmt::format("the program has {} branches, more than the cap of {}", set.total, cap));
    }
}

// ---------------------------------------------------------------- normalize

struct NormalizeArgs {
    std::string program;
    size_t cap = kDefaultBranchCap;
};

void completeness(std::ostream &out, const ReductionProgram &prog, const BranchSet &set,
                  const std::vector<NormalizeResult> &results) {
    if (!set.exhaustive) {
        out << "completeness: skipped (enumeration capped)\n";
        return;
    }
    if (prog.num_qubits() > dense::kMaxQubits) {
        out << "completeness: skipped (n + m > 10)\n";
        return;
    }
    size_t dim = size_t{1} << prog.num_qubits();
    dense::Matrix sum = dense::Matrix::Zero(dim, dim);
    for (const auto &r : results) {
        if (const auto *c = std::get_if<CanonicalKraus>(&r)) {
            sum += dense::gram(*c);
        }
    }
    // ancillae start in |0>: only the block with every ancilla bit clear counts
    auto rdim = static_cast<Eigen::Index>(size_t{1} << prog.n_resource);
    dense::Matrix block = sum.topLeftCorner(rdim, rdim);
    double dev = (block - dense::Matrix::Identity(rdim, rdim)).cwiseAbs().maxCoeff();
    if (dev <= 1e-10) {
        out << "completeness: complete\n";
        return;
    }
    Eigen::SelfAdjointEigenSolver<dense::Matrix> es(block, Eigen::EigenvaluesOnly);
    double lo = es.eigenvalues().minCoeff();
    double hi = es.eigenvalues().maxCoeff();
    out << fmt::format("completeness: {} min_eigenvalue={} max_eigenvalue={}\n",
                       hi <= 1 + 1e-10 ? "below_identity" : "exceeds_identity", num(lo), num(hi));
}

int cmd_normalize(const NormalizeArgs &a, const std::vector<std::string> &args, std::ostream &out) {
    std::string text;
    ReductionProgram prog = load_program_file(a.program, text);
    header(out, "normalize", args);
    program_lines(out, a.program, text, prog);
    BranchSet set = branches_or_throw(prog, a.cap);
    out << fmt::format("branches: {} total: {} exhaustive: {}\n", set.branches.size(), set.total,
                       set.exhaustive ? "yes" : "no");
    out << "branch\tid\tstatus\tscale_log2\tweight\tphase8\tmerges\tprojector\tclifford\n";
    std::vector<NormalizeResult> results;
    size_t nonzero = 0;
    for (size_t i = 0; i < set.branches.size(); i++) {
        const auto &b = set.branches[i];
        results.push_back(normalize(b));
        if (const auto *z = std::get_if<ZeroBranch>(&results.back())) {
            out << fmt::format("{}\t{}\tzero\t-\t{}\t-\t-\t-\t{}\n", i, b.id.str(), num(b.weight), z->reason);
            continue;
        }
        const auto &c = std::get<CanonicalKraus>(results.back());
        nonzero++;
        out << fmt::format("{}\t{}\tcanonical\t{}\t{}\t{}\t{}\t{}\t{}\n", i, b.id.str(), format_scale(c.scale_half_log2),
                           num(c.weight), c.phase8(), c.merges, projector_list(c.projector),
                           c.clifford.tableau().str());
    }
    out << fmt::format("summary: canonical={} zero={}\n", nonzero, set.branches.size() - nonzero);
    completeness(out, prog, set, results);
    check_exhaustive(set, a.cap);
    if (nonzero == 0) {
        throw CliError(ExitCode::AllZero, "every branch is zero");
    }
    return 0;
}

// ----------------------------------------------------------------- classify

struct ClassifyArgs {
    std::string program;
    std::string target;
    std::string axis = "T";
    double f = 1;
    size_t cap = kDefaultBranchCap;
};

int cmd_classify(const ClassifyArgs &a, const std::vector<std::string> &args, std::ostream &out) {
    std::string text;
    ReductionProgram prog = load_program_file(a.program, text);
    MagicAxis axis = parse_axis(a.axis);
    Bloch target = a.target.empty() ? axis.axis : parse_target(a.target);
    Bloch in;
    try {
        in = magic_state(a.f, axis);
    } catch (const std::invalid_argument &e) {
        throw CliError(ExitCode::InvalidInput, e.what());
    }
    ProductResource resource = ProductResource::copies(in, prog.n_resource);
    ProductResource full = resource.with_ancillae(prog.n_ancilla);
    EngineOptions eopts{env_threads()};

    header(out, "classify", args);
    program_lines(out, a.program, text, prog);
    out << fmt::format("resource: axis={} f={}\n", axis.str(), num(a.f));
    out << "target: " << vec3(target) << "\n";
    BranchSet set = branches_or_throw(prog, a.cap);
    out << fmt::format("branches: {} total: {} exhaustive: {}\n", set.branches.size(), set.total,
                       set.exhaustive ? "yes" : "no");
    check_exhaustive(set, a.cap);

    struct Best {
        size_t branch = 0;
        Form form = Form::A1;
        double fidelity = -INFINITY;
        std::optional<ExtractedReduction> reduction;
    };
    std::optional<Best> best;
    double clause_ii = -INFINITY;
    double p_total = 0;
    Bloch mix{0, 0, 0};
    size_t nonzero = 0;

    out << "branch\tid\tform\tscale_log2\tprob\tfidelity\tcode\n";
    for (size_t i = 0; i < set.branches.size(); i++) {
        const auto &b = set.branches[i];
        NormalizeResult r = normalize(b);
        if (std::holds_alternative<ZeroBranch>(r)) {
            out << fmt::format("{}\t{}\tzero\t-\t0\t-\t-\n", i, b.id.str());
            continue;
        }
        nonzero++;
        const auto &canon = std::get<CanonicalKraus>(r);
        FormClassification form = classify(canon, b.id);
        double p = canon.weight * std::ldexp(1.0, canon.scale_half_log2) * projector_expectation(canon.projector, full);
        p = std::max(p, 0.0);
        std::optional<ExtractedReduction> ex;
        Bloch out_bloch = form.output;
        bool defined = p > kZeroProbability;
        if (form.form == Form::B) {
            ex = extract_reduction(form, prog.n_resource, prog.n_ancilla);
            ReductionResult rr = output_state(ex->code, resource, eopts);
            defined = defined && rr.defined;
            out_bloch = rr.out_bloch;
        }
        std::string code_col = ex ? digest(ex->code.str()) : "-";
        if (!defined) {
            out << fmt::format("{}\t{}\t{}\t{}\t{}\t-\t{}\n", i, b.id.str(), form_name(form.form),
                               format_scale(canon.scale_half_log2), num(p), code_col);
            continue;
        }
        double fid = fidelity(out_bloch, target);
        out << fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\n", i, b.id.str(), form_name(form.form),
                           format_scale(canon.scale_half_log2), num(p), num(fid), code_col);
        p_total += p;
        for (size_t k = 0; k < 3; k++) {
            mix[k] += p * out_bloch[k];
        }
        if (ex) {
            clause_ii = std::max(clause_ii, fid);
        }
        // strict comparison: ties keep the lowest branch id
        if (!best || fid > best->fidelity) {
            best = Best{i, form.form, fid, ex};
        }
    }
    if (nonzero == 0) {
        throw CliError(ExitCode::AllZero, "every branch is zero");
    }
    if (!best || !(p_total > kZeroProbability)) {
        throw CliError(ExitCode::Undefined, "the program succeeds with probability zero on this resource");
    }
    for (auto &c : mix) {
        c /= p_total;
    }
    double program_fid = fidelity(mix, target);
    double clause_i = stabilizer_state_bound(target);
    double bound = std::max(clause_i, clause_ii);
    out << "program_success: " << num(p_total) << "\n";
    out << "program_output: " << vec3(mix) << "\n";
    out << "program_fidelity: " << num(program_fid) << "\n";
    out << "stabilizer_bound: " << num(clause_i) << "\n";
    out << "best_code_reduction: " << (std::isfinite(clause_ii) ? num(clause_ii) : std::string("none")) << "\n";
    out << "theorem_bound: " << num(bound) << "\n";
    bool dominated = program_fid <= bound + 1e-9;
    out << "dominated: " << (dominated ? "yes" : "no") << "\n";
    out << fmt::format("k_max: branch={} form={} fidelity={}\n", best->branch, form_name(best->form),
                       num(best->fidelity));
    if (best->reduction) {
        out << "k_max_code: " << digest(best->reduction->code.str()) << "\n";
        std::istringstream lines(best->reduction->code.str());
        for (std::string line; std::getline(lines, line);) {
            out << "  " << line << "\n";
        }
        out << "k_max_decode: " << best->reduction->decode.str() << "\n";
    }
    if (!dominated) {
        throw CliError(ExitCode::TheoremViolation,
                       fmt::format("program fidelity {} exceeds the bound {}", num(program_fid), num(bound)));
    }
    return 0;
}

// ------------------------------------------------------- sweep and threshold

struct ProtocolArgs {
    std::string source;
    std::string axis;
    std::string target;
    std::string path = "group";
    std::optional<double> trajectory_from;
    size_t rounds = 10;
};

struct SweepArgs : ProtocolArgs {
    std::string grid = "0.5:1:101";
    std::string out;
};

struct ThresholdArgs : ProtocolArgs {
    std::string bracket;
    double tol = kDefaultTolerance;
};

ProtocolSpec load_protocol(const ProtocolArgs &a, std::ostream &out) {
    ProtocolSpec spec;
    const auto &names = builtin_names();
    if (std::find(names.begin(), names.end(), a.source) != names.end()) {
        spec = builtin(a.source);
        out << "protocol: builtin " << a.source << "\n";
        if (!a.axis.empty()) {
            spec.input_axis = parse_axis(a.axis);
            spec.target = spec.input_axis.axis;
            spec.post_clifford.reset();
        }
    } else {
        std::ifstream probe(a.source);
        if (!probe) {
            throw CliError(ExitCode::Io, fmt::format("'{}' is neither a builtin ({}) nor a readable code file", a.source,
                                                     fmt::join(names, ", ")));
        }
        std::string text = read_file(a.source);
        StabilizerCode code;
        try {
            code = parse_code(text);
        } catch (const std::exception &e) {
            throw CliError(ExitCode::Parse, fmt::format("{}: {}", a.source, one_line(e.what())));
        }
        spec = protocol_from_code(code, parse_axis(a.axis.empty() ? "T" : a.axis), a.source);
        out << "protocol: file " << a.source << " " << digest(text) << "\n";
    }
    if (!a.target.empty()) {
        spec.target = parse_target(a.target);
    }
    out << fmt::format("code: n={} {}\n", spec.code.num_qubits(), digest(spec.code.str()));
    out << "axis: " << spec.input_axis.str() << "\n";
    out << "target: " << vec3(spec.target) << "\n";
    out << "post_clifford: " << (spec.post_clifford ? spec.post_clifford->str() : std::string("none")) << "\n";
    out << "path: " << (a.path == "dense" ? "dense" : "group-sum") << "\n";
    return spec;
}

MapPath map_path(const ProtocolArgs &a) {
    return a.path == "dense" ? MapPath::Dense : MapPath::GroupSum;
}

void print_trajectory(std::ostream &out, const ProtocolSpec &spec, const ProtocolArgs &a, const EngineOptions &o) {
    if (!a.trajectory_from) {
        return;
    }
    auto traj = trajectory(spec, *a.trajectory_from, a.rounds, o);
    out << fmt::format("trajectory: rounds={}\n", a.rounds);
    for (size_t r = 0; r < traj.size(); r++) {
        out << fmt::format("{}\t{}\n", r, num(traj[r]));
    }
}

template <class Fn>
auto map_errors(Fn &&fn) {
    try {
        return fn();
    } catch (const UndefinedResultError &e) {
        throw CliError(ExitCode::Undefined, e.what());
    } catch (const NoThresholdInBracket &e) {
        throw CliError(ExitCode::NoThreshold, e.what());
    } catch (const std::invalid_argument &e) {
        throw CliError(ExitCode::InvalidInput, e.what());
    }
}

int cmd_sweep(const SweepArgs &a, const std::vector<std::string> &args, std::ostream &out) {
    double lo = 0;
    double hi = 0;
    size_t k = 0;
    {
        std::istringstream in(a.grid);
        char c1 = 0;
        char c2 = 0;
        if (!(in >> lo >> c1 >> hi >> c2 >> k) || c1 != ':' || c2 != ':' || !(in >> std::ws).eof() || k == 0) {
            throw CliError(ExitCode::Usage, fmt::format("--grid must be a:b:k with k >= 1, got '{}'", a.grid));
        }
    }
    EngineOptions o{env_threads()};
    header(out, "sweep", args);
    ProtocolSpec spec = map_errors([&] { return load_protocol(a, out); });
    out << fmt::format("grid: {}:{}:{}\n", num(lo), num(hi), k);
    auto pts = map_errors([&] { return sweep(spec, lo, hi, k, map_path(a), o); });
    std::string csv = sweep_csv(pts);
    if (a.out.empty()) {
        out << "csv:\n" << csv;
    } else {
        write_file(a.out, csv);
        out << fmt::format("csv: {} rows={} {}\n", a.out, pts.size(), digest(csv));
    }
    map_errors([&] {
        print_trajectory(out, spec, a, o);
        return 0;
    });
    return 0;
}

int cmd_threshold(const ThresholdArgs &a, const std::vector<std::string> &args, std::ostream &out) {
    double lo = kDefaultBracketLo;
    double hi = kDefaultBracketHi;
    if (!a.bracket.empty()) {
        std::istringstream in(a.bracket);
        char c = 0;
        if (!(in >> lo >> c >> hi) || c != ',' || !(in >> std::ws).eof()) {
            throw CliError(ExitCode::Usage, fmt::format("--bracket must be a,b, got '{}'", a.bracket));
        }
    }
    EngineOptions o{env_threads()};
    header(out, "threshold", args);
    ProtocolSpec spec = map_errors([&] { return load_protocol(a, out); });
    out << fmt::format("bracket: {},{} tol: {}\n", num(lo), num(hi), num(a.tol));
    ThresholdResult r = map_errors([&] { return find_threshold(spec, lo, hi, a.tol, map_path(a), o); });
    out << "threshold: " << num(r.threshold) << "\n";
    out << "iterations: " << r.iterations << "\n";
    map_errors([&] {
        print_trajectory(out, spec, a, o);
        return 0;
    });
    return 0;
}

// ----------------------------------------------------------- verify-theorem

struct TheoremArgs {
    uint64_t seed = 0;
    size_t trials = 100;
    size_t targets = 3;
    size_t max_qubits = 4;
};

int cmd_verify_theorem(const TheoremArgs &a, const std::vector<std::string> &args, std::ostream &out) {
    TheoremOptions opts;
    opts.seed = a.seed;
    opts.trials = a.trials;
    opts.targets_per_trial = a.targets;
    opts.program.max_qubits = a.max_qubits;
    opts.threads = env_threads();
    if (a.max_qubits > 4 || a.max_qubits == 0) {
        throw CliError(ExitCode::Usage, "--max-qubits must be between 1 and 4");
    }
    header(out, "verify-theorem", args);
    out << fmt::format("seed: {} trials: {} targets_per_trial: {} max_qubits: {} tolerance: {}\n", a.seed, a.trials,
                       a.targets, a.max_qubits, num(opts.tolerance));
    TheoremReport report = run_theorem_trials(opts);
    out << "trial\tseed\tn\tm\tbranches\tzero\ta1\ta2\tb\tp_success\tmin_margin\n";
    for (size_t i = 0; i < report.trials.size(); i++) {
        const auto &t = report.trials[i];
        out << fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", i, t.seed, t.n_resource, t.n_ancilla,
                           t.branches, t.zero_branches, t.form_counts[0], t.form_counts[1], t.form_counts[2],
                           num(t.success_prob), t.defined ? num(t.min_margin) : std::string("-"));
    }
    out << "undefined_trials: " << report.undefined() << "\n";
    out << "violations: " << report.violations() << "\n";
    std::optional<uint64_t> first;
    for (const auto &t : report.trials) {
        for (const auto &v : t.violations) {
            first = first.value_or(v.trial_seed);
            out << fmt::format("violation kind={} seed={} target={} program_fidelity={} bound={}\n", v.kind,
                               v.trial_seed, vec3(v.target), num(v.program_fidelity), num(v.bound));
            out << "  resource: " << v.resource << "\n";
            std::istringstream lines(v.program);
            for (std::string line; std::getline(lines, line);) {
                out << "  | " << line << "\n";
            }
        }
    }
    if (first) {
        throw CliError(ExitCode::TheoremViolation,
                       fmt::format("{} violations; replay with verify-theorem --seed {} --trials 1",
                                   report.violations(), *first));
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford reduction analysis and magic-state distillation", "cliffred"};
    app.require_subcommand(1);

    NormalizeArgs norm_args;
    auto *norm = app.add_subcommand("normalize", "canonical form of every branch of a program");
    norm->add_option("program", norm_args.program, "program file")->required();
    norm->add_option("--cap", norm_args.cap, "maximum number of branches");

    ClassifyArgs cls_args;
    auto *cls = app.add_subcommand("classify", "classify branches and compare fidelities on a magic-state resource");
    cls->add_option("program", cls_args.program, "program file")->required();
    cls->add_option("--target", cls_args.target, "target Bloch vector x,y,z (default: the axis)");
    cls->add_option("--axis", cls_args.axis, "resource axis: H, T or x,y,z")->capture_default_str();
    cls->add_option("--f", cls_args.f, "resource fidelity")->required();
    cls->add_option("--cap", cls_args.cap, "maximum number of branches");

    auto add_protocol = [](CLI::App *sub, ProtocolArgs &p) {
        sub->add_option("protocol", p.source, "builtin name or code file")->required();
        sub->add_option("--axis", p.axis, "input axis: H, T or x,y,z (overrides a builtin's)");
        sub->add_option("--target", p.target, "target Bloch vector x,y,z");
        sub->add_option("--path", p.path, "group or dense")->check(CLI::IsMember({"group", "dense"}));
        sub->add_option("--trajectory", p.trajectory_from, "also iterate the map from this fidelity");
        sub->add_option("--rounds", p.rounds, "trajectory rounds")->capture_default_str();
    };

    SweepArgs sweep_args;
    auto *sw = app.add_subcommand("sweep", "f_out and p_success over a fidelity grid");
    add_protocol(sw, sweep_args);
    sw->add_option("--grid", sweep_args.grid, "a:b:k")->capture_default_str();
    sw->add_option("--out", sweep_args.out, "CSV output path");

    ThresholdArgs th_args;
    auto *th = app.add_subcommand("threshold", "distillation threshold by bisection");
    add_protocol(th, th_args);
    th->add_option("--bracket", th_args.bracket, "a,b (default 0.55,0.999)");
    th->add_option("--tol", th_args.tol, "bisection tolerance")->capture_default_str();

    TheoremArgs vt_args;
    auto *vt = app.add_subcommand("verify-theorem", "fidelity domination on random reductions");
    vt->add_option("--seed", vt_args.seed, "first trial seed")->capture_default_str();
    vt->add_option("--trials", vt_args.trials, "number of trials")->capture_default_str();
    vt->add_option("--targets", vt_args.targets, "random targets per trial")->capture_default_str();
    vt->add_option("--max-qubits", vt_args.max_qubits, "bound on n + m")->capture_default_str();

    std::vector<const char *> argv{"cliffred"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: usage: " << one_line(e.what()) << "\n";
        return static_cast<int>(ExitCode::Usage);
    }

    try {
        if (*norm) {
            return cmd_normalize(norm_args, args, out);
        }
        if (*cls) {
            return cmd_classify(cls_args, args, out);
        }
        if (*sw) {
            return cmd_sweep(sweep_args, args, out);
        }
        if (*th) {
            return cmd_threshold(th_args, args, out);
        }
        return cmd_verify_theorem(vt_args, args, out);
    } catch (const CliError &e) {
        out.flush();
        err << "error: " << code_name(e.code()) << ": " << one_line(e.what()) << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception &e) {
        out.flush();
        err << "error: " << code_name(ExitCode::InvalidInput) << ": " << one_line(e.what()) << "\n";
        return static_cast<int>(ExitCode::InvalidInput);
    }
}

}  // namespace cliffred::cli
