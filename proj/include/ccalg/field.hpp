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

#ifndef CCALG_FIELD_HPP
#define CCALG_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ccalg {

enum class FieldKind { Rational, Prime };

/// Coefficient field descriptor, shared per session: Q or F_q for a prime q.
struct Field {
    FieldKind kind = FieldKind::Rational;
    std::uint32_t prime = 0;

    static Field rationals() { return Field{FieldKind::Rational, 0}; }
    static Field prime_field(std::uint32_t q);  // throws unless q is prime

    bool operator==(const Field&) const = default;
    std::string str() const;
};

/// An exact field element: an arbitrary-precision rational (canonical form,
/// positive denominator) or a reduced residue mod the session prime.
class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar of_int(const Field& f, long v);
    static Scalar of_rational(const mpq_class& q);  // rational field only via field check in ops

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on zero divisor
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "3", "-1/2"; residues print as 0..q-1.
    std::string str() const;

    const mpq_class& rational_value() const { return rat_; }
    std::uint32_t residue_value() const { return res_; }

private:
    Field field_;
    mpq_class rat_;          // valid when kind == Rational
    std::uint32_t res_ = 0;  // valid when kind == Prime

    void check_same(const Scalar& o) const;
};

}  // namespace ccalg

#endif
