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

#ifndef CCALG_ERRORS_HPP
#define CCALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccalg {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands belong to different sessions (ring, field or variable mismatch).
struct session_error : error {
    explicit session_error(const std::string& msg) : error(msg) {}
};

/// Matrix/vector shape violation (non-square, rank mismatch, ...).
struct shape_error : error {
    explicit shape_error(const std::string& msg) : error(msg) {}
};

/// A documented precondition of an operation does not hold.
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

/// Deterministic search exhausted its budget (reports the seed used).
struct search_error : error {
    explicit search_error(const std::string& msg) : error(msg) {}
};

/// Input-language syntax or semantic error, with source position.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& msg, int line_, int col_)
        : error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

}  // namespace ccalg

#endif
