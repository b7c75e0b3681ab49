/*
   Copyright 2026 The ccalg authors

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

#include "ccalg/commands.hpp"
#include "ccalg/duality.hpp"
#include "ccalg/errors.hpp"

namespace py = pybind11;
using namespace ccalg;

namespace {

py::object json_to_py(const cli::Json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

cli::CommandOptions options_from_kwargs(std::uint64_t seed, const py::object& g, const py::object& k,
                                        const py::object& fine_ci, bool minimize) {
    cli::CommandOptions opts;
    opts.seed = seed;
    if (!g.is_none()) opts.g_text = g.cast<std::string>();
    if (!k.is_none()) opts.k = k.cast<int>();
    if (!fine_ci.is_none()) opts.fine_ci = fine_ci.cast<std::string>();
    opts.minimize = minimize;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_ccalg, m) {
    m.doc() = "exact commutative algebra: Groebner bases, resolutions, Ext modules, "
              "duality pairings and linkage hulls over Q or F_p";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<precondition_error>(m, "PreconditionError");
    py::register_exception<session_error>(m, "SessionError");
    py::register_exception<shape_error>(m, "ShapeError");
    py::register_exception<search_error>(m, "SearchError");

    m.def(
        "run",
        [](const std::string& script, const std::string& command, const std::vector<std::string>& args,
           std::uint64_t seed, const py::object& g, const py::object& k, const py::object& fine_ci,
           bool minimize) {
            cli::Session session = cli::parse_session(script);
            cli::RunResult res =
                cli::run_command(command, args, session, options_from_kwargs(seed, g, k, fine_ci, minimize));
            return py::make_tuple(json_to_py(res.report), res.exit_code);
        },
        py::arg("script"), py::arg("command"), py::arg("args") = std::vector<std::string>{},
        py::arg("seed") = 0, py::arg("g") = py::none(), py::arg("k") = py::none(),
        py::arg("fine_ci") = py::none(), py::arg("minimize") = false,
        "Run a command against a session script; returns (report, exit_code).");

    m.def(
        "groebner",
        [](const std::string& script, const std::string& name) {
            cli::Session session = cli::parse_session(script);
            const Submodule& M = session.submodule(name);
            std::vector<std::vector<std::string>> out;
            for (const auto& e : M.groebner()->elements()) {
                std::vector<std::string> col;
                for (int i = 0; i < e.vec.length(); ++i) col.push_back(e.vec[i].str());
                out.push_back(std::move(col));
            }
            return out;
        },
        py::arg("script"), py::arg("name"),
        "Groebner basis of a declared ideal or module, as generator columns.");

    m.def(
        "normal_form",
        [](const std::string& script, const std::string& name, const std::string& poly) {
            cli::Session session = cli::parse_session(script);
            const Submodule& M = session.submodule(name);
            Polynomial p = parse_polynomial(session.ring, poly);
            return normal_form(p, *M.groebner()).str();
        },
        py::arg("script"), py::arg("name"), py::arg("poly"),
        "Normal form of a polynomial against a declared ideal.");

    m.def(
        "syzygies",
        [](const std::string& script, const std::string& name) {
            cli::Session session = cli::parse_session(script);
            Submodule s = syzygies(session.submodule(name));
            std::vector<std::vector<std::string>> out;
            for (int j = 0; j < s.ngens(); ++j) {
                std::vector<std::string> col;
                for (int i = 0; i < s.rank(); ++i) col.push_back(s.generator(j)[i].str());
                out.push_back(std::move(col));
            }
            return out;
        },
        py::arg("script"), py::arg("name"), "Syzygy generators of a declared ideal or module.");

    m.attr("__version__") = "0.1.0";
}
