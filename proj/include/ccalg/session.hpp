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

#ifndef CCALG_SESSION_HPP
#define CCALG_SESSION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccalg/groebner.hpp"

namespace ccalg::cli {

/// A named object declared in a session script.
struct Declared {
    enum class Kind { Ideal, Module, Matrix };
    Kind kind;
    Submodule submodule;  // Ideal / Module
    RingMatrix matrix;    // Matrix
};

/// Parsed session state: the ring plus declared objects, names unique.
///
/// Script grammar (statements end with ';'):
///   ring Q[x,y,z];             ring Fp(32003)[x,y];
///   ideal J = x^2, x*y;
///   module M = [[x,0],[0,y]];  (outer list = generator columns)
///   matrix A = [[1,0],[1,1]];  (rows)
struct Session {
    RingPtr ring;
    std::map<std::string, Declared> objects;

    const Declared& lookup(const std::string& name) const;
    const Submodule& submodule(const std::string& name) const;  // Ideal or Module
    const RingMatrix& matrix(const std::string& name) const;
};

Session parse_session(const std::string& text);

/// Parse "[p1, p2, ...]" (or a bare polynomial when rank is 1) against the
/// session ring.
RingVector parse_vector(const RingPtr& ring, const std::string& text, int rank);

}  // namespace ccalg::cli

#endif
