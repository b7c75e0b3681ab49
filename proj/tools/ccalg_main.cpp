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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ccalg/commands.hpp"
#include "ccalg/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "ccalg - exact commutative algebra: resolutions, Ext modules, duality pairings, "
        "linkage hulls and Serre-condition checks over Q or F_p"};
    app.footer(
        "The session script is read from --input (or stdin): e.g.\n"
        "  echo 'ring Q[x,y]; ideal J = x^2, x*y;' | ccalg hull J 1\n"
        "Commands: resolve M [--min] | ext M k | hull M p | pair M p [--g v] |\n"
        "          kernel M p | inject M p | s2 M p [--k k] | purity M p |\n"
        "          roos M p | transform G A | check M p");

    std::string command;
    std::vector<std::string> args;
    std::string input_path;
    std::uint64_t seed = 0;
    bool text_output = false;
    bool json_output = false;
    bool want_min = false;
    std::string g_text;
    int k_param = -1;
    std::string fine_ci;

    app.add_option("command", command, "command to run")->required();
    app.add_option("args", args, "command arguments (object names, degrees)");
    app.add_option("-i,--input", input_path, "session script file (default: stdin)");
    app.add_option("--seed", seed, "seed for the deterministic searches (default 0)");
    app.add_flag("--json", json_output, "JSON output (default)");
    app.add_flag("--text", text_output, "plain text output");
    app.add_flag("--min", want_min, "minimize the resolution (resolve)");
    app.add_option("--g", g_text, "vector to pair against (pair)");
    app.add_option("--k", k_param, "Serre condition index (s2, default 2)");
    app.add_option("--fine-ci", fine_ci, "name of a declared ideal to force as the CI level");

    CLI11_PARSE(app, argc, argv);

    std::string script;
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) {
            std::cerr << "cannot open input file: " << input_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        script = ss.str();
    } else {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        script = ss.str();
    }

    ccalg::cli::RunResult result;
    try {
        ccalg::cli::Session session = ccalg::cli::parse_session(script);
        ccalg::cli::CommandOptions opts;
        opts.seed = seed;
        opts.minimize = want_min;
        if (!g_text.empty()) opts.g_text = g_text;
        if (k_param >= 0) opts.k = k_param;
        if (!fine_ci.empty()) opts.fine_ci = fine_ci;
        result = ccalg::cli::run_command(command, args, session, opts);
    } catch (const ccalg::error& e) {
        ccalg::cli::Json err;
        err["command"] = command;
        err["error"] = std::string(e.what());
        err["kind"] = "input";
        result = ccalg::cli::RunResult{std::move(err), 2};
    }

    if (text_output && !json_output) {
        std::cout << ccalg::cli::report_to_text(result.report);
    } else {
        std::cout << result.report.dump(2) << "\n";
    }
    return result.exit_code;
}
