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

#ifndef CCALG_RING_HPP
#define CCALG_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "ccalg/field.hpp"

namespace ccalg {

/// Exponent vector; length always equals the session variable count.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b, b | a required
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, DegRevLex, Elim };

/// Total multiplicative order on monomials. Elim(k) makes the first k
/// variables dominate everything else (block elimination order).
struct MonoOrder {
    OrderKind kind = OrderKind::DegRevLex;
    int elim_block = 0;

    static MonoOrder lex() { return {OrderKind::Lex, 0}; }
    static MonoOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
    static MonoOrder elim(int k) { return {OrderKind::Elim, k}; }

    /// -1, 0, +1 for a < b, a == b, a > b. Lengths must agree.
    int cmp(const Monomial& a, const Monomial& b) const;

    bool operator==(const MonoOrder&) const = default;
    std::string str() const;
};

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A polynomial-ring session: field, named variables and the session order.
struct Ring {
    Field field;
    std::vector<std::string> vars;
    MonoOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }
    bool operator==(const Ring&) const = default;

    static RingPtr make(Field f, std::vector<std::string> vars, MonoOrder ord = MonoOrder::degrevlex());

    /// Index of a variable name, -1 if unknown.
    int var_index(const std::string& name) const;
};

/// Throws session_error unless both rings are structurally identical.
void check_same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Monomial mono;
    Scalar coeff;
};

/// Immutable sparse polynomial; terms strictly descending in the session
/// order, no zero coefficients, no duplicate monomials.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring);                          // zero
    Polynomial(RingPtr ring, std::vector<Term> terms);          // normalizes
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial constant(RingPtr ring, long v);
    static Polynomial variable(RingPtr ring, int index, int power = 1);
    static Polynomial monomial(RingPtr ring, Monomial m, const Scalar& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Nonzero scalar with zero exponent vector (a unit of the graded ring).
    bool is_unit_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_homogeneous() const;
    int degree() const;  // -1 for the zero polynomial

    const Term& leading_term() const;  // throws on zero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial term_multiplied(const Monomial& m, const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Canonical text form in the CLI grammar, e.g. "3*x^2*y - 1/2*z".
    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void normalize();
};

/// Parse a polynomial in the CLI grammar against a ring. Coefficients are
/// integers or a/b rationals; explicit '*' is required between factors.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace ccalg

#endif
