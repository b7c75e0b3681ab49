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

#ifndef CCALG_COMMANDS_HPP
#define CCALG_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccalg/session.hpp"

namespace ccalg::cli {

using Json = nlohmann::ordered_json;

struct CommandOptions {
    std::uint64_t seed = 0;
    std::optional<std::string> g_text;         // pair --g
    std::optional<int> k;                      // s2 --k
    std::optional<std::string> fine_ci;        // --fine-ci <ideal name>
    bool minimize = false;                     // resolve --min
};

struct RunResult {
    Json report;
    /// 0: all verdicts pass; 1: a theorem check failed; 2: input error.
    int exit_code = 0;
};

/// Dispatch one command against a parsed session. Commands:
///   resolve <M> [--min]      ext <M> <k>       hull <M> <p>
///   pair <M> <p> [--g v]     kernel <M> <p>    inject <M> <p>
///   s2 <M> <p> [--k k]       purity <M> <p>    roos <M> <p>
///   transform <g-ideal> <A>  check <M> <p>
/// Precondition violations come back as structured error reports with
/// exit code 2 rather than exceptions.
RunResult run_command(const std::string& command, const std::vector<std::string>& args, const Session& session,
                      const CommandOptions& opts);

/// Plain-text rendering of a report.
std::string report_to_text(const Json& report);

}  // namespace ccalg::cli

#endif
