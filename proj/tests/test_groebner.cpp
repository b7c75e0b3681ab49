#include "doctest.h"

#include <map>
#include <random>

#include "ccalg/errors.hpp"
#include "ccalg/oracle.hpp"
#include "support.hpp"

using namespace ccalg;

namespace {

std::vector<RingVector> gb_vectors(const Submodule& m) {
    std::vector<RingVector> out;
    for (const auto& e : m.groebner()->elements()) out.push_back(e.vec);
    return out;
}

// Exact linear-algebra oracle for graded syzygy pieces: for homogeneous
// generators, the syzygies in one internal degree are the nullspace of an
// exact linear system. Used to certify completeness of the engine's output.
struct GradedOracle {
    RingPtr ring;
    std::vector<RingVector> gens;
    std::vector<int> shifts;  // internal degree of each generator

    static std::vector<Monomial> monomials_of_degree(int n, int d) {
        std::vector<Monomial> out;
        Monomial cur(n, 0);
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == n - 1) {
                cur[var] = left;
                out.push_back(cur);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                cur[var] = e;
                rec(var + 1, left - e);
            }
        };
        if (n == 0) return out;
        rec(0, d);
        return out;
    }

    // rank of a set of vectors over Q via exact elimination
    static int rank_of(std::vector<std::vector<mpq_class>> rows) {
        int rank = 0;
        size_t cols = rows.empty() ? 0 : rows[0].size();
        size_t lead = 0;
        for (size_t r = 0; r < rows.size() && lead < cols; ++lead) {
            size_t piv = r;
            while (piv < rows.size() && rows[piv][lead] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[r], rows[piv]);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][lead] == 0) continue;
                mpq_class f = rows[i][lead] / rows[r][lead];
                for (size_t c = lead; c < cols; ++c) rows[i][c] -= f * rows[r][c];
            }
            ++r;
            ++rank;
        }
        return rank;
    }

    // coordinates of a homogeneous vector in degree d
    std::vector<mpq_class> coords(const RingVector& v, int d) const {
        int n = ring->nvars();
        int rank = v.length();
        std::map<std::pair<int, Monomial>, size_t> index;
        size_t dim = 0;
        for (int pos = 0; pos < rank; ++pos)
            for (const auto& m : monomials_of_degree(n, d)) index[{pos, m}] = dim++;
        std::vector<mpq_class> out(dim, 0);
        for (int pos = 0; pos < rank; ++pos)
            for (const auto& t : v[pos].terms()) {
                auto it = index.find({pos, t.mono});
                REQUIRE(it != index.end());
                out[it->second] = t.coeff.rational_value();
            }
        return out;
    }

    // dimension of the degree-d piece of the syzygy module, by brute force
    int syzygy_dim(int d) const {
        int n = ring->nvars();
        std::vector<std::vector<mpq_class>> candidates;  // coefficient tuples
        std::vector<std::pair<int, Monomial>> unknowns;
        for (size_t i = 0; i < gens.size(); ++i) {
            int cd = d - shifts[i];
            if (cd < 0) continue;
            for (const auto& m : monomials_of_degree(n, cd)) unknowns.push_back({static_cast<int>(i), m});
        }
        if (unknowns.empty()) return 0;
        // value matrix: row per unknown, columns = coordinates of m * g_i
        std::vector<std::vector<mpq_class>> rows;
        for (const auto& [i, m] : unknowns) {
            RingVector scaled = gens[i].term_multiplied(m, Scalar::one(ring->field));
            rows.push_back(coords(scaled, d));
        }
        int r = rank_of(rows);
        return static_cast<int>(unknowns.size()) - r;
    }

    // dimension of the degree-d piece spanned by the given syzygy vectors
    int spanned_dim(const Submodule& syz, int d) const {
        int n = ring->nvars();
        std::vector<std::vector<mpq_class>> rows;
        for (int j = 0; j < syz.ngens(); ++j) {
            RingVector s = syz.generator(j);
            // internal degree of s
            int e = -1;
            for (int i = 0; i < s.length(); ++i) {
                if (s[i].is_zero()) continue;
                REQUIRE(s[i].is_homogeneous());
                int cand = s[i].degree() + shifts[i];
                if (e < 0) e = cand;
                REQUIRE(e == cand);
            }
            if (e < 0 || e > d) continue;
            // coordinates of each m * s in the coefficient space of degree d
            for (const auto& m : monomials_of_degree(n, d - e)) {
                RingVector scaled = s.term_multiplied(m, Scalar::one(ring->field));
                std::vector<mpq_class> row;
                for (int i = 0; i < s.length(); ++i) {
                    int cd = d - shifts[i];
                    std::vector<mpq_class> part;
                    if (cd >= 0) {
                        RingVector single(ring, std::vector<Polynomial>{scaled[i]});
                        part = coords(single, cd);
                    }
                    row.insert(row.end(), part.begin(), part.end());
                }
                rows.push_back(std::move(row));
            }
        }
        return rank_of(rows);
    }
};

}  // namespace

TEST_CASE("groebner bases on the basic examples") {
    auto r = Ring::make(Field::rationals(), {"x", "y"}, MonoOrder::lex());
    Submodule I = ts::ideal(r, {"x^2 - y", "y^2"});
    auto gb = I.groebner();
    REQUIRE(gb->size() == 2);
    CHECK(gb->elements()[0].vec[0] == ts::P(r, "x^2 - y"));
    CHECK(gb->elements()[1].vec[0] == ts::P(r, "y^2"));
    CHECK(buchberger_criterion_holds(*gb));

    auto r2 = ts::ringQ({"x", "y"});
    Submodule M = ts::ideal(r2, {"x^2*y", "x*y^3"});
    auto gb2 = M.groebner();
    CHECK(gb2->size() == 2);
    CHECK(buchberger_criterion_holds(*gb2));

    Submodule sub = ts::submodule(r2, 2, {{"x", "0"}, {"y", "0"}, {"0", "1"}});
    auto gb3 = sub.groebner();
    CHECK(gb3->size() == 3);
    CHECK(buchberger_criterion_holds(*gb3));
}

TEST_CASE("transition matrix reproduces every basis element") {
    auto r = ts::ringQ({"x", "y", "z"});
    Submodule I = ts::ideal(r, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z"});
    auto gb = I.groebner();
    for (const auto& e : gb->elements()) {
        RingVector rebuilt(r, 1);
        for (int j = 0; j < I.ngens(); ++j) rebuilt = rebuilt + I.generator(j).scaled(e.expr[j]);
        CHECK(rebuilt == e.vec);
    }
    CHECK(buchberger_criterion_holds(*gb));
}

TEST_CASE("normal forms") {
    auto r = ts::ringQ({"x", "y"});
    CHECK(normal_form(ts::P(r, "x^2"), *ts::ideal(r, {"x^2 - y"}).groebner()) == ts::P(r, "y"));
    CHECK(normal_form(ts::P(r, "y"), *ts::ideal(r, {"x"}).groebner()) == ts::P(r, "y"));
    CHECK(normal_form(ts::P(r, "x^2 + x*y"), *ts::ideal(r, {"x^2", "x*y"}).groebner()).is_zero());
}

TEST_CASE("lift certificates") {
    auto r = ts::ringQ({"x", "y"});
    Submodule I = ts::ideal(r, {"x^2", "x*y"});
    LiftResult res = lift(ts::vec(r, {"x^2*y"}), I);
    REQUIRE(res.ok);
    RingVector rebuilt(r, 1);
    for (int j = 0; j < I.ngens(); ++j) rebuilt = rebuilt + I.generator(j).scaled(res.coefficients[j]);
    CHECK(rebuilt == ts::vec(r, {"x^2*y"}));

    LiftResult res2 = lift(ts::vec(r, {"y"}), ts::ideal(r, {"x"}));
    CHECK(!res2.ok);
    CHECK(res2.witness == ts::vec(r, {"y"}));

    Submodule M = ts::submodule(r, 2, {{"x^2", "0"}, {"0", "x"}});
    LiftResult res3 = lift(ts::vec(r, {"x^2*y", "x^3"}), M);
    REQUIRE(res3.ok);
    CHECK(res3.coefficients == ts::vec(r, {"y", "x^2"}));
}

TEST_CASE("lift / normal form duality on random vectors") {
    auto r = ts::ringQ({"x", "y"});
    Submodule M = ts::submodule(r, 2, {{"x^2", "x*y"}, {"y^2", "0"}, {"0", "x - y"}});
    std::mt19937_64 rng(5);
    auto gb = M.groebner();
    for (int it = 0; it < 20; ++it) {
        std::vector<Polynomial> comps;
        for (int i = 0; i < 2; ++i) {
            Monomial m(2, 0);
            m[0] = static_cast<int>(rng() % 3);
            m[1] = static_cast<int>(rng() % 3);
            comps.push_back(Polynomial::monomial(r, m, Scalar::of_int(r->field, 1 + static_cast<int>(rng() % 5))));
        }
        RingVector v(r, comps);
        RingVector nf = normal_form(v, *gb);
        LiftResult lr = lift(v - nf, M);
        REQUIRE(lr.ok);
        RingVector rebuilt(r, 2);
        for (int j = 0; j < M.ngens(); ++j) rebuilt = rebuilt + M.generator(j).scaled(lr.coefficients[j]);
        CHECK(rebuilt == v - nf);
        CHECK((M.contains(v) == nf.is_zero()));
    }
}

TEST_CASE("syzygies of the spec examples") {
    auto r = ts::ringQ({"x", "y"});
    Submodule s1 = syzygies(ts::ideal(r, {"x^2", "x*y"}));
    REQUIRE(s1.ngens() == 1);
    RingVector c = s1.generator(0);
    CHECK((c == ts::vec(r, {"y", "-x"}) || c == ts::vec(r, {"-y", "x"})));

    Submodule s2 = syzygies(ts::ideal(r, {"x", "y"}));
    REQUIRE(s2.ngens() == 1);
    CHECK((s2.generator(0) == ts::vec(r, {"y", "-x"}) || s2.generator(0) == ts::vec(r, {"-y", "x"})));

    Submodule s3 = syzygies(ts::ideal(r, {"x^2 + x*y + 1"}));
    CHECK(s3.ngens() == 0);
}

TEST_CASE("syzygy columns kill the generator matrix, and compose to zero") {
    auto r = ts::ringQ({"x", "y", "z"});
    Submodule M = ts::submodule(r, 2, {{"x*y", "z"}, {"y*z", "x"}, {"z^2", "y"}, {"x*z", "x"}});
    Submodule s = syzygies(M);
    for (int j = 0; j < s.ngens(); ++j) CHECK((M.generators() * s.generator(j)).is_zero());
    Submodule s2 = syzygies(s);
    for (int j = 0; j < s2.ngens(); ++j) CHECK((s.generators() * s2.generator(j)).is_zero());
}

TEST_CASE("graded oracle certifies syzygy completeness") {
    auto r = ts::ringQ({"x", "y", "z"});
    // homogeneous generators with mixed shifts
    std::vector<std::vector<std::string>> cols = {{"x^2", "x*y"}, {"y^2", "0"}, {"x*z", "z^2"}, {"0", "y*z"}};
    Submodule M = ts::submodule(r, 2, cols);
    Submodule s = syzygies(M);
    GradedOracle oracle;
    oracle.ring = r;
    for (int j = 0; j < M.ngens(); ++j) oracle.gens.push_back(M.generator(j));
    oracle.shifts = {2, 2, 2, 2};
    for (int d = 2; d <= 6; ++d) {
        CHECK(oracle.spanned_dim(s, d) == oracle.syzygy_dim(d));
    }

    // ideal case with different generator degrees
    Submodule I = ts::ideal(r, {"x^2", "x*y", "y^3"});
    Submodule si = syzygies(I);
    GradedOracle o2;
    o2.ring = r;
    for (int j = 0; j < I.ngens(); ++j) o2.gens.push_back(I.generator(j));
    o2.shifts = {2, 2, 3};
    for (int d = 3; d <= 7; ++d) CHECK(o2.spanned_dim(si, d) == o2.syzygy_dim(d));
}

TEST_CASE("intersections") {
    auto r = ts::ringQ({"x", "y"});
    CHECK(intersect(ts::ideal(r, {"x"}), ts::ideal(r, {"y"})).equals(ts::ideal(r, {"x*y"})));
    CHECK(intersect(ts::ideal(r, {"x", "y"}), ts::ideal(r, {"x", "y"})).equals(ts::ideal(r, {"x", "y"})));

    auto rz = ts::ringQ({"z", "w"});
    Submodule inter = intersect(ts::ideal(rz, {"z^2", "w"}), ts::ideal(rz, {"z", "w^2"}));
    CHECK(inter.equals(ts::ideal(rz, {"z^2", "z*w", "w^2"})));
}

TEST_CASE("module intersection") {
    auto r = ts::ringQ({"x", "y"});
    Submodule A = ts::submodule(r, 2, {{"x", "0"}, {"0", "1"}});
    Submodule B = ts::submodule(r, 2, {{"y", "0"}, {"0", "1"}});
    Submodule C = intersect(A, B);
    CHECK(C.contains(ts::vec(r, {"x*y", "0"})));
    CHECK(C.contains(ts::vec(r, {"0", "1"})));
    CHECK(!C.contains(ts::vec(r, {"x", "0"})));
    CHECK(!C.contains(ts::vec(r, {"y", "0"})));
}

TEST_CASE("quotients") {
    auto r = ts::ringQ({"x", "y"});
    CHECK(quotient(ts::ideal(r, {"x^2"}), ts::ideal(r, {"x^2", "x*y"})).equals(ts::ideal(r, {"x"})));
    CHECK(quotient(ts::ideal(r, {"x^2"}), ts::ideal(r, {"x"})).equals(ts::ideal(r, {"x"})));
    Submodule I = ts::ideal(r, {"x^2 - y", "y^2"});
    CHECK(quotient(I, ts::ideal(r, {"1"})).equals(I));
}

TEST_CASE("colon functionals") {
    auto r = ts::ringQ({"x", "y"});
    // rank 1 agrees with the ideal quotient
    Submodule q1 = colon_functionals(ts::ideal(r, {"x^2"}), ts::ideal(r, {"x^2", "x*y"}));
    CHECK(q1.equals(ts::ideal(r, {"x"})));

    // g(O^2) in (x,y) iff both components lie in (x,y)
    Submodule q2 = colon_functionals(ts::ideal(r, {"x", "y"}), Submodule::full(r, 2));
    Submodule expected2 = ts::submodule(r, 2, {{"x", "0"}, {"y", "0"}, {"0", "x"}, {"0", "y"}});
    CHECK(q2.equals(expected2));

    // J = column (0,1): g = (g1, g2) with g2 in (x)
    Submodule q3 = colon_functionals(ts::ideal(r, {"x"}), ts::submodule(r, 2, {{"0", "1"}}));
    Submodule expected3 = ts::submodule(r, 2, {{"1", "0"}, {"0", "x"}});
    CHECK(q3.equals(expected3));
}

TEST_CASE("annihilators") {
    auto r = ts::ringQ({"x", "y"});
    CHECK(annihilator(ts::ideal(r, {"x^2", "x*y"})).equals(ts::ideal(r, {"x^2", "x*y"})));

    // O/(x) + O/(y) has annihilator (xy)
    Submodule rel = ts::submodule(r, 2, {{"x", "0"}, {"0", "y"}});
    CHECK(annihilator(rel).equals(ts::ideal(r, {"x*y"})));

    CHECK(annihilator(Submodule::zero(r, 2)).equals(Submodule::zero(r, 1)));
}

TEST_CASE("dimension and codimension") {
    auto r = ts::ringQ({"x", "y"});
    DimensionResult d = dimension(ts::ideal(r, {"x^2", "x*y"}));
    CHECK(d.dimension == 1);
    CHECK(codimension(ts::ideal(r, {"x^2", "x*y"})) == 1);

    auto r4 = ts::ringQ({"x", "y", "z", "w"});
    CHECK(codimension(ts::ideal(r4, {"x*z", "x*w", "y*z", "y*w"})) == 2);

    auto r3 = ts::ringQ({"x", "y", "z"});
    CHECK(codimension(ts::ideal(r3, {"x", "y", "z"})) == 3);
    CHECK(codimension(Submodule::zero(r3, 1)) == 0);
    DimensionResult unit = dimension(ts::ideal(r3, {"1"}));
    CHECK(unit.unit_ideal);
    CHECK(unit.dimension == -1);
}

TEST_CASE("dimension agrees with the monomial oracle on random ideals") {
    auto r = ts::ringQ({"x", "y", "z"});
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto I = oracle::random_monomial_ideal(3, 5, 4, seed);
        Submodule sub = oracle::to_submodule(r, I);
        CHECK(dimension(sub).dimension == oracle::mono_dimension(I));
    }
}
