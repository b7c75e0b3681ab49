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

#include "ccalg/session.hpp"

#include <cctype>

#include "ccalg/errors.hpp"

namespace ccalg::cli {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;

    void advance() {
        if (i < s.size()) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        char c = s[i];
        advance();
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    std::string identifier() {
        skip_ws();
        if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            fail("expected identifier");
        std::string out;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
            out += s[i];
            advance();
        }
        return out;
    }

    long integer() {
        skip_ws();
        std::string out;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            out += s[i];
            advance();
        }
        if (out.empty()) fail("expected integer");
        return std::stol(out);
    }

    // raw text until one of the stop characters at nesting depth 0
    std::string until(const std::string& stops) {
        skip_ws();
        std::string out;
        int depth = 0;
        while (i < s.size()) {
            char c = s[i];
            if (depth == 0 && stops.find(c) != std::string::npos) break;
            if (c == '[' || c == '(') ++depth;
            if (c == ']' || c == ')') --depth;
            out += c;
            advance();
        }
        return out;
    }
};

std::vector<std::string> split_list(Cursor& cur, char close) {
    // comma separated raw entries until `close`
    std::vector<std::string> out;
    if (cur.peek() == close) {
        cur.get();
        return out;
    }
    while (true) {
        out.push_back(cur.until(std::string(",") + close));
        char c = cur.get();
        if (c == close) break;
        if (c != ',') cur.fail("expected ',' or list close");
    }
    return out;
}

}  // namespace

const Declared& Session::lookup(const std::string& name) const {
    auto it = objects.find(name);
    if (it == objects.end()) throw precondition_error("unknown object '" + name + "'");
    return it->second;
}

const Submodule& Session::submodule(const std::string& name) const {
    const Declared& d = lookup(name);
    if (d.kind == Declared::Kind::Matrix)
        throw precondition_error("'" + name + "' is a matrix, expected an ideal or module");
    return d.submodule;
}

const RingMatrix& Session::matrix(const std::string& name) const {
    const Declared& d = lookup(name);
    if (d.kind != Declared::Kind::Matrix) throw precondition_error("'" + name + "' is not a matrix");
    return d.matrix;
}

RingVector parse_vector(const RingPtr& ring, const std::string& text, int rank) {
    std::string t = text;
    // bare polynomial shorthand in rank one
    size_t first = t.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw precondition_error("empty vector literal");
    if (t[first] != '[') {
        if (rank != 1) throw shape_error("vector literal must be bracketed for rank > 1");
        return RingVector(ring, std::vector<Polynomial>{parse_polynomial(ring, t)});
    }
    Cursor cur{t};
    cur.expect('[');
    std::vector<std::string> entries = split_list(cur, ']');
    if (static_cast<int>(entries.size()) != rank)
        throw shape_error("vector literal has " + std::to_string(entries.size()) + " entries, expected " +
                          std::to_string(rank));
    std::vector<Polynomial> comps;
    for (const auto& e : entries) comps.push_back(parse_polynomial(ring, e));
    return RingVector(ring, comps);
}

Session parse_session(const std::string& text) {
    Session sess;
    Cursor cur{text};
    while (!cur.eof()) {
        std::string kw = cur.identifier();
        if (kw == "ring") {
            if (sess.ring) cur.fail("ring already declared");
            std::string field_name = cur.identifier();
            Field field;
            if (field_name == "Q") {
                field = Field::rationals();
            } else if (field_name == "Fp") {
                cur.expect('(');
                long q = cur.integer();
                cur.expect(')');
                field = Field::prime_field(static_cast<std::uint32_t>(q));
            } else {
                cur.fail("unknown field '" + field_name + "' (use Q or Fp(q))");
            }
            cur.expect('[');
            std::vector<std::string> vars;
            while (true) {
                vars.push_back(cur.identifier());
                char c = cur.get();
                if (c == ']') break;
                if (c != ',') cur.fail("expected ',' or ']' in variable list");
            }
            cur.expect(';');
            sess.ring = Ring::make(field, vars);
            continue;
        }

        if (kw != "ideal" && kw != "module" && kw != "matrix") cur.fail("unknown statement '" + kw + "'");
        if (!sess.ring) cur.fail("no ring declared");
        std::string name = cur.identifier();
        if (sess.objects.count(name)) cur.fail("duplicate object name '" + name + "'");
        cur.expect('=');

        if (kw == "ideal") {
            std::vector<std::string> entries;
            while (true) {
                entries.push_back(cur.until(",;"));
                char c = cur.get();
                if (c == ';') break;
                if (c != ',') cur.fail("expected ',' or ';'");
            }
            std::vector<Polynomial> gens;
            for (const auto& e : entries) gens.push_back(parse_polynomial(sess.ring, e));
            Declared d;
            d.kind = Declared::Kind::Ideal;
            d.submodule = Submodule::ideal(sess.ring, gens);
            sess.objects.emplace(name, std::move(d));
            continue;
        }

        // module / matrix: [[...],[...]]
        cur.expect('[');
        std::vector<std::vector<std::string>> lists;
        while (true) {
            cur.expect('[');
            lists.push_back(split_list(cur, ']'));
            char c = cur.get();
            if (c == ']') break;
            if (c != ',') cur.fail("expected ',' or ']' between lists");
        }
        cur.expect(';');
        if (lists.empty()) cur.fail("empty list literal");
        size_t width = lists[0].size();
        for (const auto& l : lists)
            if (l.size() != width) cur.fail("ragged list literal");

        if (kw == "module") {
            // outer list = generator columns
            int rank = static_cast<int>(width);
            std::vector<RingVector> cols;
            for (const auto& l : lists) {
                std::vector<Polynomial> comps;
                for (const auto& e : l) comps.push_back(parse_polynomial(sess.ring, e));
                cols.push_back(RingVector(sess.ring, comps));
            }
            Declared d;
            d.kind = Declared::Kind::Module;
            d.submodule = Submodule::from_columns(sess.ring, rank, cols);
            sess.objects.emplace(name, std::move(d));
        } else {
            RingMatrix m(sess.ring, static_cast<int>(lists.size()), static_cast<int>(width));
            for (size_t i = 0; i < lists.size(); ++i)
                for (size_t j = 0; j < width; ++j)
                    m.at(static_cast<int>(i), static_cast<int>(j)) = parse_polynomial(sess.ring, lists[i][j]);
            Declared d;
            d.kind = Declared::Kind::Matrix;
            d.matrix = std::move(m);
            sess.objects.emplace(name, std::move(d));
        }
    }
    if (!sess.ring) throw parse_error("no ring declared", 1, 1);
    return sess;
}

}  // namespace ccalg::cli
