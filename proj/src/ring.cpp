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

#include "ccalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ccalg/errors.hpp"

namespace ccalg {

int total_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0) throw precondition_error("monomial division with negative exponent");
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

namespace {

int cmp_lex(const int* a, const int* b, int n) {
    for (int i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
}

// degrevlex: higher total degree wins; on ties the last nonzero entry of
// a-b decides, negative meaning a is larger.
int cmp_degrevlex(const int* a, const int* b, int n) {
    int da = 0, db = 0;
    for (int i = 0; i < n; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = n - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonoOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw shape_error("monomial length mismatch in comparison");
    int n = static_cast<int>(a.size());
    switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(a.data(), b.data(), n);
        case OrderKind::DegRevLex:
            return cmp_degrevlex(a.data(), b.data(), n);
        case OrderKind::Elim: {
            int k = std::min(elim_block, n);
            int c = cmp_degrevlex(a.data(), b.data(), k);
            if (c != 0) return c;
            return cmp_degrevlex(a.data() + k, b.data() + k, n - k);
        }
    }
    return 0;
}

std::string MonoOrder::str() const {
    switch (kind) {
        case OrderKind::Lex:
            return "lex";
        case OrderKind::DegRevLex:
            return "degrevlex";
        case OrderKind::Elim:
            return "elim(" + std::to_string(elim_block) + ")";
    }
    return "?";
}

RingPtr Ring::make(Field f, std::vector<std::string> vars, MonoOrder ord) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw precondition_error("duplicate variable name '" + vars[i] + "'");
    auto r = std::make_shared<Ring>();
    r->field = f;
    r->vars = std::move(vars);
    r->order = ord;
    return r;
}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !(*a == *b)) throw session_error("operands belong to different ring sessions");
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    normalize();
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
    if (c.is_zero()) return Polynomial(std::move(ring));
    Monomial m(ring->nvars(), 0);
    std::vector<Term> t{{std::move(m), c}};
    Polynomial p;
    p.ring_ = std::move(ring);
    p.terms_ = std::move(t);
    return p;
}

Polynomial Polynomial::constant(RingPtr ring, long v) {
    Scalar c = Scalar::of_int(ring->field, v);
    return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, int index, int power) {
    if (index < 0 || index >= ring->nvars()) throw precondition_error("variable index out of range");
    Monomial m(ring->nvars(), 0);
    m[index] = power;
    Scalar c = Scalar::one(ring->field);
    return monomial(std::move(ring), std::move(m), c);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Scalar& c) {
    if (static_cast<int>(m.size()) != ring->nvars()) throw shape_error("monomial length does not match ring");
    Polynomial p;
    p.ring_ = std::move(ring);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
    return p;
}

void Polynomial::normalize() {
    if (!ring_) throw precondition_error("polynomial without a ring");
    for (auto& t : terms_)
        if (static_cast<int>(t.mono.size()) != ring_->nvars())
            throw shape_error("term exponent length does not match ring");
    std::stable_sort(terms_.begin(), terms_.end(),
                     [&](const Term& a, const Term& b) { return ring_->order.cmp(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = out.back().coeff + t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].mono) == 0);
}

bool Polynomial::is_unit_constant() const {
    return terms_.size() == 1 && total_degree(terms_[0].mono) == 0;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_[0].mono);
    for (const auto& t : terms_)
        if (total_degree(t.mono) != d) return false;
    return true;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw precondition_error("leading term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    // merge of two strictly descending term lists
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->order.cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ring_->order.cmp(a, b) > 0; };
    std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            Scalar c = a.coeff * b.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), c);
            } else {
                it->second = it->second + c;
            }
        }
    }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({m, c});
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
}

Polynomial Polynomial::term_multiplied(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) {
        t.mono = mono_mul(t.mono, m);
        t.coeff = t.coeff * c;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    check_same_ring(ring_, o.ring_);
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) {
                os << "-";
                c = c.substr(1);
            }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) c = c.substr(1);
        }
        first = false;
        bool mono_trivial = total_degree(t.mono) == 0;
        bool coeff_trivial = (c == "1");
        if (coeff_trivial && !mono_trivial) {
            // coefficient 1 omitted
        } else {
            os << c;
        }
        bool printed = coeff_trivial && !mono_trivial ? false : true;
        for (int i = 0; i < static_cast<int>(t.mono.size()); ++i) {
            if (t.mono[i] == 0) continue;
            if (printed) os << "*";
            os << ring_->vars[i];
            if (t.mono[i] > 1) os << "^" << t.mono[i];
            printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// polynomial expression parser (shared by the CLI grammar)

namespace {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
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
        return s[i++];
    }
};

class PolyParser {
public:
    PolyParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), lex_{text} {}

    Polynomial parse() {
        Polynomial p = expression();
        if (!lex_.eof()) fail("trailing input after polynomial");
        return p;
    }

private:
    RingPtr ring_;
    PolyLexer lex_;

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, 1, static_cast<int>(lex_.i) + 1); }

    Polynomial expression() {
        bool neg = false;
        char c = lex_.peek();
        if (c == '+' || c == '-') {
            lex_.get();
            neg = c == '-';
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char op = lex_.peek();
            if (op != '+' && op != '-') break;
            lex_.get();
            Polynomial t = term();
            acc = op == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek() == '*') {
            lex_.get();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lex_.peek() == '^') {
            lex_.get();
            long e = integer();
            if (e < 0) fail("negative exponent");
            Polynomial acc = Polynomial::constant(ring_, 1);
            for (long k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    Polynomial atom() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.get();
            Polynomial p = expression();
            if (lex_.peek() != ')') fail("expected ')'");
            lex_.get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (lex_.peek() == '/') {
                lex_.get();
                long den = integer();
                if (den == 0) fail("zero denominator");
                if (ring_->field.kind == FieldKind::Rational) {
                    mpq_class q(num, den);
                    q.canonicalize();
                    return Polynomial::constant(ring_, Scalar::of_rational(q));
                }
                Scalar s = Scalar::of_int(ring_->field, num) / Scalar::of_int(ring_->field, den);
                return Polynomial::constant(ring_, s);
            }
            return Polynomial::constant(ring_, num);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = identifier();
            int idx = ring_->var_index(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring_, idx);
        }
        fail("unexpected character in polynomial");
    }

    long integer() {
        lex_.skip_ws();
        size_t start = lex_.i;
        while (lex_.i < lex_.s.size() && std::isdigit(static_cast<unsigned char>(lex_.s[lex_.i]))) ++lex_.i;
        if (lex_.i == start) fail("expected integer");
        return std::stol(lex_.s.substr(start, lex_.i - start));
    }

    std::string identifier() {
        lex_.skip_ws();
        size_t start = lex_.i;
        while (lex_.i < lex_.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lex_.s[lex_.i])) || lex_.s[lex_.i] == '_'))
            ++lex_.i;
        return lex_.s.substr(start, lex_.i - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return PolyParser(ring, text).parse();
}

}  // namespace ccalg
