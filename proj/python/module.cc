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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.h"
#include "cliffred/distillation.h"
#include "cliffred/theorem.h"

namespace py = pybind11;
using namespace cliffred;

namespace {

MapPath parse_path(const std::string &path) {
    if (path == "group") {
        return MapPath::GroupSum;
    }
    if (path == "dense") {
        return MapPath::Dense;
    }
    throw std::invalid_argument("path must be 'group' or 'dense'");
}

py::dict point_dict(const MapPoint &p) {
    py::dict d;
    d["f_in"] = p.f_in;
    d["f_out"] = p.f_out;
    d["p_success"] = p.p_success;
    return d;
}

ProtocolSpec protocol(const std::string &name, const std::string &axis) {
    auto spec = builtin(name);
    if (!axis.empty()) {
        spec.input_axis = MagicAxis::parse(axis);
        spec.target = spec.input_axis.axis;
        spec.post_clifford.reset();
    }
    return spec;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Clifford reduction and magic state distillation";

    py::register_exception<UndefinedResultError>(m, "UndefinedResultError", PyExc_ArithmeticError);
    py::register_exception<NoThresholdInBracket>(m, "NoThresholdInBracket", PyExc_RuntimeError);

    py::class_<PauliOperator>(m, "PauliOperator")
        .def(py::init(&PauliOperator::from_str), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
        .def_property_readonly("weight", &PauliOperator::weight)
        .def("is_hermitian", &PauliOperator::is_hermitian)
        .def("commutes", [](const PauliOperator &a, const PauliOperator &b) { return commutes(a, b); })
        .def("__mul__", [](const PauliOperator &a, const PauliOperator &b) { return a * b; })
        .def("__neg__", [](const PauliOperator &a) { return -a; })
        .def("__eq__", [](const PauliOperator &a, const PauliOperator &b) { return a == b; })
        .def("__str__", &PauliOperator::str)
        .def("__repr__", [](const PauliOperator &p) { return "PauliOperator('" + p.str() + "')"; });

    m.def("builtin_names", &builtin_names);

    m.def(
        "magic_state", [](double f, const std::string &axis) { return magic_state(f, MagicAxis::parse(axis)); },
        py::arg("f"), py::arg("axis") = "T", "Bloch vector (2f - 1) times the axis.");

    m.def(
        "iterate_map",
        [](const std::string &name, double f, const std::string &axis, const std::string &path) {
            return point_dict(iterate_map(protocol(name, axis), f, parse_path(path)));
        },
        py::arg("protocol"), py::arg("f"), py::arg("axis") = "", py::arg("path") = "group");

    m.def(
        "find_threshold",
        [](const std::string &name, double lo, double hi, double tol, const std::string &axis,
           const std::string &path) {
            auto r = find_threshold(protocol(name, axis), lo, hi, tol, parse_path(path));
            return py::make_tuple(r.threshold, r.iterations);
        },
        py::arg("protocol"), py::arg("lo") = kDefaultBracketLo, py::arg("hi") = kDefaultBracketHi,
        py::arg("tol") = kDefaultTolerance, py::arg("axis") = "", py::arg("path") = "group",
        "Returns (threshold, iterations).");

    m.def(
        "sweep",
        [](const std::string &name, double a, double b, size_t k, const std::string &axis, const std::string &path) {
            py::list out;
            for (const auto &p : sweep(protocol(name, axis), a, b, k, parse_path(path))) {
                out.append(point_dict(p));
            }
            return out;
        },
        py::arg("protocol"), py::arg("a") = 0.5, py::arg("b") = 1.0, py::arg("k") = 101, py::arg("axis") = "",
        py::arg("path") = "group");

    m.def(
        "output_state",
        [](const std::string &code_text, const std::vector<Bloch> &resource) {
            auto r = output_state(parse_code(code_text), ProductResource(resource));
            py::dict d;
            d["defined"] = r.defined;
            d["p_success"] = r.success_prob;
            d["bloch"] = r.defined ? py::cast(r.out_bloch) : py::none();
            return d;
        },
        py::arg("code"), py::arg("resource"),
        "Postselected logical Bloch vector of a code given in the text format.");

    m.def(
        "verify_theorem",
        [](uint64_t seed, size_t trials, size_t max_qubits) {
            TheoremOptions opts;
            opts.seed = seed;
            opts.trials = trials;
            opts.program.max_qubits = max_qubits;
            TheoremReport report;
            {
                py::gil_scoped_release release;
                report = run_theorem_trials(opts);
            }
            py::dict d;
            d["trials"] = report.trials.size();
            d["undefined"] = report.undefined();
            d["violations"] = report.violations();
            return d;
        },
        py::arg("seed") = 0, py::arg("trials") = 100, py::arg("max_qubits") = 4);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            int status;
            {
                py::gil_scoped_release release;
                status = cli::run(args, out, err);
            }
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Runs one command line; returns (status, stdout, stderr).");
}
