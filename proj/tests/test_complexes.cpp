#include "doctest.h"

#include "ccalg/complexes.hpp"
#include "ccalg/errors.hpp"
#include "support.hpp"

using namespace ccalg;

namespace {

// Taylor complex of three monomials, used as a non-minimal resolution input.
FreeComplex taylor3(const RingPtr& r, const std::vector<std::string>& monos) {
    std::vector<Monomial> m;
    for (const auto& s : monos) m.push_back(ts::P(r, s).leading_term().mono);
    auto lcm2 = [&](int i, int j) { return mono_lcm(m[i], m[j]); };
    Monomial l12 = lcm2(0, 1), l13 = lcm2(0, 2), l23 = lcm2(1, 2);
    Monomial l123 = mono_lcm(l12, m[2]);
    auto mono = [&](const Monomial& mm) { return Polynomial::monomial(r, mm, Scalar::one(r->field)); };

    RingMatrix d1(r, 1, 3);
    for (int j = 0; j < 3; ++j) d1.at(0, j) = mono(m[j]);
    RingMatrix d2(r, 3, 3);  // columns {12},{13},{23}
    d2.at(1, 0) = mono(mono_div(l12, m[1]));
    d2.at(0, 0) = -mono(mono_div(l12, m[0]));
    d2.at(2, 1) = mono(mono_div(l13, m[2]));
    d2.at(0, 1) = -mono(mono_div(l13, m[0]));
    d2.at(2, 2) = mono(mono_div(l23, m[2]));
    d2.at(1, 2) = -mono(mono_div(l23, m[1]));
    RingMatrix d3(r, 3, 1);
    d3.at(2, 0) = mono(mono_div(l123, l23));
    d3.at(1, 0) = -mono(mono_div(l123, l13));
    d3.at(0, 0) = mono(mono_div(l123, l12));
    return FreeComplex(r, {1, 3, 3, 1}, {d1, d2, d3});
}

}  // namespace

TEST_CASE("koszul complexes") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex k1 = koszul({ts::P(r, "x")});
    CHECK(k1.length() == 1);
    CHECK(k1.rank(0) == 1);
    CHECK(k1.rank(1) == 1);
    CHECK(k1.differential(1).at(0, 0) == ts::P(r, "x"));

    FreeComplex k2 = koszul({ts::P(r, "x"), ts::P(r, "y")});
    CHECK(k2.rank(0) == 1);
    CHECK(k2.rank(1) == 2);
    CHECK(k2.rank(2) == 1);
    CHECK(k2.differential(1) == ts::matrix(r, {{"x", "y"}}));
    // contraction convention: e_{12} -> f_1 e_2 - f_2 e_1
    CHECK(k2.differential(2) == ts::matrix(r, {{"-y"}, {"x"}}));

    auto rz = ts::ringQ({"z", "w"});
    FreeComplex k3 = koszul({ts::P(rz, "z^2"), ts::P(rz, "w")});
    CHECK(k3.differential(1) == ts::matrix(rz, {{"z^2", "w"}}));
    CHECK(k3.differential(2) == ts::matrix(rz, {{"-w"}, {"z^2"}}));

    CHECK_THROWS_AS(koszul({}), precondition_error);
}

TEST_CASE("schreyer resolutions") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex res = schreyer_resolution(ts::matrix(r, {{"x^2", "x*y"}}), 2);
    REQUIRE(res.length() == 2);
    CHECK(res.rank(0) == 1);
    CHECK(res.rank(1) == 2);
    CHECK(res.rank(2) == 1);
    RingVector col = res.differential(2).column(0);
    CHECK((col == ts::vec(r, {"y", "-x"}) || col == ts::vec(r, {"-y", "x"})));

    FreeComplex res2 = schreyer_resolution(ts::matrix(r, {{"x", "y"}}), 2);
    CHECK(res2.rank(0) == 1);
    CHECK(res2.rank(1) == 2);
    CHECK(res2.rank(2) == 1);

    auto rz = ts::ringQ({"z", "w"});
    FreeComplex res3 = schreyer_resolution(ts::matrix(rz, {{"z^2", "z*w", "w^2"}}), 2);
    MinimizeResult min3 = minimize(res3);
    REQUIRE(min3.minimized);
    CHECK(min3.complex.rank(0) == 1);
    CHECK(min3.complex.rank(1) == 3);
    CHECK(min3.complex.rank(2) == 2);
    CHECK(min3.complex.length() == 2);
}

TEST_CASE("resolution of a free module is trivial") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex res = schreyer_resolution(RingMatrix(r, 2, 0), 2);
    CHECK(res.length() == 0);
    CHECK(res.rank(0) == 2);
}

TEST_CASE("minimize removes trivial summands") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex base = koszul({ts::P(r, "x"), ts::P(r, "y")});
    for (int k = 0; k <= 1; ++k) {
        FreeComplex padded = pad_with_trivial_summand(base, k);
        MinimizeResult m = minimize(padded);
        REQUIRE(m.minimized);
        CHECK(m.complex.length() == 2);
        CHECK(m.complex.rank(0) == 1);
        CHECK(m.complex.rank(1) == 2);
        CHECK(m.complex.rank(2) == 1);
    }

    // Taylor complex of (z^2, zw, w^2) minimizes to ranks (1, 3, 2)
    auto rz = ts::ringQ({"z", "w"});
    FreeComplex taylor = taylor3(rz, {"z^2", "z*w", "w^2"});
    MinimizeResult m = minimize(taylor);
    REQUIRE(m.minimized);
    CHECK(m.complex.rank(0) == 1);
    CHECK(m.complex.rank(1) == 3);
    CHECK(m.complex.rank(2) == 2);
    CHECK(m.complex.length() == 2);

    // already minimal input is unchanged
    MinimizeResult m2 = minimize(base);
    REQUIRE(m2.minimized);
    CHECK(m2.complex.rank(1) == 2);

    // non-homogeneous differentials are left alone
    FreeComplex nh(r, {1, 1}, {ts::matrix(r, {{"x + 1"}})});
    MinimizeResult m3 = minimize(nh);
    CHECK(!m3.minimized);
    CHECK(m3.complex.rank(1) == 1);
}

TEST_CASE("minimize preserves the presented cokernel") {
    auto rz = ts::ringQ({"z", "w"});
    FreeComplex taylor = taylor3(rz, {"z^2", "z*w", "w^2"});
    MinimizeResult m = minimize(taylor);
    Submodule before(rz, 1, taylor.differential(1));
    Submodule after(rz, 1, m.complex.differential(1));
    CHECK(before.equals(after));
}

TEST_CASE("hom dual is an involution") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex k = koszul({ts::P(r, "x"), ts::P(r, "y")});
    FreeComplex d = hom_dual(k);
    CHECK(d.rank(0) == 1);
    CHECK(d.rank(1) == 2);
    CHECK(d.differential(1) == k.differential(2).transpose());
    FreeComplex dd = hom_dual(d);
    for (int i = 1; i <= k.length(); ++i) CHECK(dd.differential(i) == k.differential(i));

    FreeComplex zero(r, {0}, {});
    FreeComplex dz = hom_dual(zero);
    CHECK(dz.length() == 0);
    CHECK(dz.rank(0) == 0);
}

TEST_CASE("homology presentations") {
    auto r = ts::ringQ({"x", "y"});

    // Ext^1 of O/(x^2, xy) is O/(x) with generator row (x, y)
    FreeComplex res = schreyer_resolution(ts::matrix(r, {{"x^2", "x*y"}}), 2);
    SubquotientPresentation h1 = homology_presentation(res, 1);
    REQUIRE(h1.ngens() == 1);
    CHECK(h1.generators[0] == ts::vec(r, {"x", "y"}));
    CHECK(h1.relations.equals(ts::ideal(r, {"x"})));

    // regular sequence: dualized Koszul is exact in the middle
    FreeComplex k = koszul({ts::P(r, "x"), ts::P(r, "y")});
    SubquotientPresentation mid = homology_presentation(k, 1);
    CHECK(mid.is_zero_module());

    // Ext^2(O/(x,y), O) = O/(x,y) with generator the top dual basis vector
    SubquotientPresentation top = homology_presentation(k, 2);
    REQUIRE(top.ngens() == 1);
    CHECK(top.generators[0] == ts::vec(r, {"1"}));
    CHECK(top.relations.equals(ts::ideal(r, {"x", "y"})));

    CHECK_THROWS_AS(homology_presentation(k, 5), shape_error);
}

TEST_CASE("homology of koszul detects non-regularity") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex k = koszul({ts::P(r, "x"), ts::P(r, "x")});
    SubquotientPresentation h1 = homology_presentation(k, 1);
    CHECK(!h1.is_zero_module());
}

TEST_CASE("chain map lifting") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex k = koszul({ts::P(r, "x"), ts::P(r, "y")});

    // identity lifts to the identity in degree zero, chain identity exact
    ChainMap id = lift_chain_map(RingMatrix::identity(r, 1), k, k);
    CHECK(id.map(0) == RingMatrix::identity(r, 1));
    for (int d = 1; d <= 2; ++d) {
        RingMatrix lhs = k.differential(d) * id.map(d);
        RingMatrix rhs = id.map(d - 1) * k.differential(d);
        CHECK((lhs - rhs).is_zero());
    }

    // generator swap: a_2 is multiplication by the determinant -1 (mod (x,y))
    FreeComplex kswap = koszul({ts::P(r, "y"), ts::P(r, "x")});
    ChainMap sw = lift_chain_map(RingMatrix::identity(r, 1), kswap, k);
    Polynomial a2 = sw.map(2).at(0, 0);
    Polynomial diff = normal_form(a2 + ts::P(r, "1"), *ts::ideal(r, {"x", "y"}).groebner());
    CHECK(diff.is_zero());

    // a non-descending map is rejected
    auto rz = ts::ringQ({"z", "w"});
    FreeComplex a = koszul({ts::P(rz, "z")});
    FreeComplex b = koszul({ts::P(rz, "w")});
    CHECK_THROWS_AS(lift_chain_map(RingMatrix::identity(rz, 1), a, b), precondition_error);
}

TEST_CASE("surjection onto the artinian monomial module lifts") {
    auto rz = ts::ringQ({"z", "w"});
    FreeComplex kci = koszul({ts::P(rz, "z^2"), ts::P(rz, "w^2")});
    FreeComplex hull = schreyer_resolution(ts::matrix(rz, {{"z^2", "z*w", "w^2"}}), 2);
    ChainMap a = lift_chain_map(RingMatrix::identity(rz, 1), kci, hull);
    for (int d = 1; d <= 2; ++d) {
        RingMatrix lhs = hull.differential_or_zero(d) * a.map(d);
        RingMatrix rhs = a.map(d - 1) * kci.differential(d);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("homotopies between lifts") {
    auto r = ts::ringQ({"x", "y"});
    FreeComplex k = koszul({ts::P(r, "x"), ts::P(r, "y")});

    ChainMap a = lift_chain_map(RingMatrix::identity(r, 1), k, k);
    HomotopyResult same = homotopy_between(a, a);
    CHECK(same.ok);

    // two different lifts of the same map are homotopic
    auto rz = ts::ringQ({"z", "w"});
    FreeComplex kci = koszul({ts::P(rz, "z^2"), ts::P(rz, "w^2")});
    FreeComplex hull = schreyer_resolution(ts::matrix(rz, {{"z^2", "z*w", "w^2"}}), 2);
    ChainMap l1 = lift_chain_map(RingMatrix::identity(rz, 1), kci, hull);
    ChainMap l2 = lift_chain_map(RingMatrix::identity(rz, 1), kci, hull, 99);
    HomotopyResult h = homotopy_between(l1, l2);
    CHECK(h.ok);

    // maps inducing different cokernel maps admit no homotopy
    RingMatrix zero(r, 1, 1);
    ChainMap za = lift_chain_map(zero, k, k);
    HomotopyResult no = homotopy_between(a, za);
    CHECK(!no.ok);
}

TEST_CASE("d squared is checked at construction") {
    auto r = ts::ringQ({"x", "y"});
    RingMatrix d1 = ts::matrix(r, {{"x", "y"}});
    RingMatrix bad = ts::matrix(r, {{"y"}, {"x"}});
    CHECK_THROWS_AS(FreeComplex(r, {1, 2, 1}, {d1, bad}), precondition_error);
}
