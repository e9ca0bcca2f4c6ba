/*
   Copyright 2026 The ffdigits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ffdigits/charfun.hpp"
#include "ffdigits/cli.hpp"
#include "ffdigits/cyclic.hpp"
#include "ffdigits/digits.hpp"
#include "ffdigits/verify.hpp"

namespace py = pybind11;
using namespace ffdigits;

namespace {

// Reports cross the boundary as JSON text; the package decodes them.
SweepOptions sweep_options(unsigned workers) {
    SweepOptions opt;
    opt.workers = workers;
    return opt;
}

Relation relation_of(const std::string& r) {
    if (r == "eq") return Relation::Equal;
    if (r == "ne") return Relation::NotEqual;
    throw py::value_error("relation must be 'eq' or 'ne'");
}

std::vector<std::pair<u64, std::vector<unsigned>>> exception_table(unsigned n) {
    std::vector<std::pair<u64, std::vector<unsigned>>> out;
    for (const auto& e : ExceptionTable::instantiate(n)) out.emplace_back(e.c, e.weights.elements());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Digit-sum prescriptions for irreducible polynomials over finite fields";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<CapError>(m, "CapError", PyExc_OverflowError);

    m.def("verify_q2", [](unsigned n, unsigned workers) { return to_json(verify_theorem_q2(n, sweep_options(workers))).dump(); },
          py::arg("n"), py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("verify_hansen_mullen",
          [](unsigned n, unsigned workers) { return to_json(verify_hansen_mullen_q2(n, sweep_options(workers))).dump(); },
          py::arg("n"), py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("verify_qgt2",
          [](u64 q, unsigned n, unsigned workers) { return to_json(verify_theorem_qgt2(q, n, sweep_options(workers))).dump(); },
          py::arg("q"), py::arg("n"), py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("exception_table", &exception_table, py::arg("n"));

    m.def(
        "search_witness",
        [](u64 q, unsigned n, const std::vector<unsigned>& w, u64 c, const std::string& relation)
            -> std::optional<std::vector<u64>> {
            const auto p = search_witness(q, n, WeightSet::from(n, w), c, relation_of(relation));
            if (!p) return std::nullopt;
            return p->coeffs();
        },
        py::arg("q"), py::arg("n"), py::arg("W"), py::arg("c"), py::arg("relation") = "eq");

    m.def(
        "certify_factor",
        [](u64 q, unsigned n, const std::vector<u64>& coeffs, bool cross_check) {
            const FieldCtx ctx = make_field_q(q, n);
            return to_json(certify_factor(q, n, Poly(ctx.q_level(), coeffs), cross_check)).dump();
        },
        py::arg("q"), py::arg("n"), py::arg("coeffs"), py::arg("cross_check") = false);
    m.def(
        "check_connection_lemma",
        [](u64 q, unsigned n, u64 trials, u64 seed) { return to_json(check_connection_lemma(q, n, trials, seed)).dump(); },
        py::arg("q"), py::arg("n"), py::arg("trials"), py::arg("seed") = 0x5eed);
    m.def(
        "prescription_certificate",
        [](u64 q, unsigned n, const std::vector<unsigned>& w, u64 c, bool hit) {
            const FieldCtx ctx = make_field_q(q, n);
            const PrescriptionSpec spec{WeightSet::from(n, w), c,
                                        hit ? PrescriptionMode::HitValue : PrescriptionMode::AvoidValue};
            return to_json(prescription_certificate(ctx, spec)).dump();
        },
        py::arg("q"), py::arg("n"), py::arg("W"), py::arg("c"), py::arg("hit") = false);

    m.def("omega", [](u64 q, unsigned n, const std::vector<unsigned>& w) { return omega(q, n, WeightSet::from(n, w)).residues; },
          py::arg("q"), py::arg("n"), py::arg("W"));
    m.def("delta", [](u64 q, unsigned n, const std::vector<unsigned>& w) { return delta_fn(q, n, WeightSet::from(n, w)).values; },
          py::arg("q"), py::arg("n"), py::arg("W"));
    m.def("least_period", [](const std::vector<u64>& v) { return least_period(std::span<const u64>(v)); },
          py::arg("values"));
    m.def("degree_threshold", [](u64 q, unsigned n) { return static_cast<u64>(degree_threshold(q, n)); },
          py::arg("q"), py::arg("n"));
    m.def(
        "field_info",
        [](u64 q, unsigned n) {
            const FieldCtx ctx = make_field_q(q, n);
            return py::make_tuple(ctx.describe(), ctx.group_order(), ctx.primitive().value);
        },
        py::arg("q"), py::arg("n"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
