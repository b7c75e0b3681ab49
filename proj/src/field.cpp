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

#include "ccalg/field.hpp"

#include "ccalg/errors.hpp"

namespace ccalg {

namespace {

bool is_prime_u32(std::uint32_t q) {
    if (q < 2) return false;
    if (q % 2 == 0) return q == 2;
    for (std::uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
    std::uint64_t acc = 1 % q;
    b %= q;
    while (e) {
        if (e & 1) acc = acc * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

}  // namespace

Field Field::prime_field(std::uint32_t q) {
    if (!is_prime_u32(q)) throw precondition_error("field characteristic " + std::to_string(q) + " is not prime");
    return Field{FieldKind::Prime, q};
}

std::string Field::str() const {
    return kind == FieldKind::Rational ? "Q" : "Fp(" + std::to_string(prime) + ")";
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::Rational) {
        s.rat_ = v;
    } else {
        long m = v % static_cast<long>(f.prime);
        if (m < 0) m += f.prime;
        s.res_ = static_cast<std::uint32_t>(m);
    }
    return s;
}

Scalar Scalar::of_rational(const mpq_class& q) {
    Scalar s;
    s.field_ = Field::rationals();
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::Rational ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::Rational ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw session_error("scalar field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational) {
        r.rat_ += o.rat_;
    } else {
        std::uint64_t v = static_cast<std::uint64_t>(res_) + o.res_;
        r.res_ = static_cast<std::uint32_t>(v % field_.prime);
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational) {
        r.rat_ *= o.rat_;
    } else {
        std::uint64_t v = static_cast<std::uint64_t>(res_) * o.res_;
        r.res_ = static_cast<std::uint32_t>(v % field_.prime);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational) {
        r.rat_ = -rat_;
    } else if (res_ != 0) {
        r.res_ = field_.prime - res_;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw precondition_error("division by zero scalar");
    Scalar r = *this;
    if (field_.kind == FieldKind::Rational) {
        r.rat_ = 1 / rat_;
    } else {
        r.res_ = mod_pow(res_, field_.prime - 2, field_.prime);
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == FieldKind::Rational ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (field_.kind == FieldKind::Prime) return std::to_string(res_);
    return rat_.get_str();
}

}  // namespace ccalg
