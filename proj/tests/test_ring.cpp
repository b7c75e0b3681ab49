#include "doctest.h"

#include <random>

#include "ccalg/errors.hpp"
#include "support.hpp"

using namespace ccalg;

namespace {

Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int max_terms = 4, int max_deg = 3) {
    std::vector<Term> terms;
    int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < count; ++t) {
        Monomial m(r->nvars(), 0);
        for (int v = 0; v < r->nvars(); ++v) m[v] = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
        long c = static_cast<long>(rng() % 19) - 9;
        if (c == 0) c = 1;
        terms.push_back({m, Scalar::of_int(r->field, c)});
    }
    return Polynomial(r, std::move(terms));
}

Monomial random_mono(int n, std::mt19937_64& rng, int max_deg = 4) {
    Monomial m(n, 0);
    for (int v = 0; v < n; ++v) m[v] = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    return m;
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    auto r = ts::ringQ({"x", "y"});
    CHECK(ts::P(r, "x+y") + ts::P(r, "x-y") == ts::P(r, "2*x"));
    CHECK(ts::P(r, "x+y") * ts::P(r, "x-y") == ts::P(r, "x^2-y^2"));
    CHECK(ts::P(r, "x+y") - ts::P(r, "x+y") == Polynomial(r));

    auto f7 = Ring::make(Field::prime_field(7), {"x"});
    CHECK(ts::P(f7, "3*x") * ts::P(f7, "5*x") == ts::P(f7, "x^2"));
}

TEST_CASE("session mismatch is rejected") {
    auto r1 = ts::ringQ({"x", "y"});
    auto r2 = ts::ringQ({"x", "z"});
    CHECK_THROWS_AS(ts::P(r1, "x") + ts::P(r2, "x"), session_error);
}

TEST_CASE("monomial orders on the spec examples") {
    // n = 3, vars x > y > z
    Monomial a{2, 1, 1};  // x^2 y z
    Monomial b{1, 3, 0};  // x y^3
    CHECK(MonoOrder::degrevlex().cmp(a, b) < 0);
    CHECK(MonoOrder::lex().cmp(a, b) > 0);
    CHECK(MonoOrder::degrevlex().cmp(a, a) == 0);
    CHECK(MonoOrder::lex().cmp(b, b) == 0);
    CHECK_THROWS_AS(MonoOrder::lex().cmp(a, Monomial{1, 0}), shape_error);
}

TEST_CASE("monomial order laws on random triples") {
    std::mt19937_64 rng(42);
    for (MonoOrder ord : {MonoOrder::lex(), MonoOrder::degrevlex(), MonoOrder::elim(1)}) {
        for (int it = 0; it < 200; ++it) {
            Monomial a = random_mono(3, rng), b = random_mono(3, rng), c = random_mono(3, rng);
            // antisymmetry
            CHECK(ord.cmp(a, b) == -ord.cmp(b, a));
            CHECK((ord.cmp(a, b) == 0) == (a == b));
            // transitivity
            if (ord.cmp(a, b) > 0 && ord.cmp(b, c) > 0) CHECK(ord.cmp(a, c) > 0);
            // compatibility with multiplication
            if (ord.cmp(a, b) != 0) CHECK(ord.cmp(mono_mul(a, c), mono_mul(b, c)) == ord.cmp(a, b));
        }
    }
}

TEST_CASE("ring axioms hold exactly on random triples") {
    auto r = ts::ringQ({"x", "y", "z"});
    std::mt19937_64 rng(7);
    for (int it = 0; it < 40; ++it) {
        Polynomial a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("determinants") {
    auto r = ts::ringQ({"x", "y", "z", "w"});
    CHECK(det(ts::matrix(r, {{"1", "0"}, {"1", "1"}})) == ts::P(r, "1"));
    CHECK(det(ts::matrix(r, {{"2", "0"}, {"0", "3"}})) == ts::P(r, "6"));
    CHECK(det(ts::matrix(r, {{"x", "y"}, {"z", "w"}})) == ts::P(r, "x*w - y*z"));
    CHECK_THROWS_AS(det(RingMatrix(r, 2, 3)), shape_error);
}

TEST_CASE("det is multiplicative on random 3x3 matrices") {
    auto r = ts::ringQ({"x", "y"});
    std::mt19937_64 rng(11);
    for (int it = 0; it < 10; ++it) {
        RingMatrix a(r, 3, 3), b(r, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                a.at(i, j) = random_poly(r, rng, 2, 2);
                b.at(i, j) = random_poly(r, rng, 2, 2);
            }
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("scalar canonical forms") {
    auto q = Field::rationals();
    Scalar half = Scalar::of_rational(mpq_class(2, 4));
    CHECK(half.str() == "1/2");
    CHECK((half + half).is_one());
    Scalar m = Scalar::of_int(Field::prime_field(32003), -1);
    CHECK(m.residue_value() == 32002);
    CHECK((m * m).is_one());
    CHECK_THROWS_AS(Scalar::zero(q).inverse(), precondition_error);
    CHECK_THROWS_AS(Field::prime_field(32004), precondition_error);
}

TEST_CASE("polynomial text round trip") {
    auto r = ts::ringQ({"x", "y", "z"});
    for (const char* text : {"3*x^2*y - 1/2*z", "x^2 - y", "0", "1", "-x + y - 1", "x*y*z"}) {
        Polynomial p = ts::P(r, text);
        CHECK(ts::P(r, p.str()) == p);
    }
    CHECK_THROWS_AS(ts::P(r, "q + 1"), parse_error);
    CHECK_THROWS_AS(ts::P(r, "x +"), parse_error);
}
