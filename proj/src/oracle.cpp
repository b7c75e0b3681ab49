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

#include "ccalg/oracle.hpp"

#include <algorithm>
#include <random>

#include "ccalg/errors.hpp"

namespace ccalg::oracle {

bool MonomialIdeal::is_unit() const {
    for (const auto& g : gens)
        if (total_degree(g) == 0) return true;
    return false;
}

MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != nvars) throw shape_error("monomial length mismatch");
    // minimalize: keep only divisibility-minimal generators
    std::vector<Monomial> kept;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && divides(gens[j], gens[i])) redundant = true;
        if (!redundant) kept.push_back(gens[i]);
    }
    std::sort(kept.begin(), kept.end());
    return MonomialIdeal{nvars, std::move(kept)};
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    for (const auto& g : I.gens)
        if (divides(g, m)) return true;
    return false;
}

bool contains(const MonomialIdeal& big, const MonomialIdeal& small) {
    for (const auto& g : small.gens)
        if (!contains(big, g)) return false;
    return true;
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens == b.gens; }

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Monomial> gens;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) gens.push_back(mono_lcm(x, y));
    return make_monomial_ideal(a.nvars, std::move(gens));
}

MonomialIdeal mono_quotient(const MonomialIdeal& I, const MonomialIdeal& J) {
    bool first = true;
    MonomialIdeal acc;
    for (const auto& m : J.gens) {
        std::vector<Monomial> gens;
        for (const auto& g : I.gens) gens.push_back(mono_div(g, mono_gcd(g, m)));
        MonomialIdeal colon = make_monomial_ideal(I.nvars, std::move(gens));
        acc = first ? colon : mono_intersect(acc, colon);
        first = false;
    }
    if (first) {
        // J = 0: the quotient is the unit ideal
        return make_monomial_ideal(I.nvars, {Monomial(I.nvars, 0)});
    }
    return acc;
}

int mono_dimension(const MonomialIdeal& I) {
    if (I.is_unit()) return -1;
    int n = I.nvars;
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& g : I.gens) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v)
                if (g[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

int mono_codimension(const MonomialIdeal& I) {
    int d = mono_dimension(I);
    return d < 0 ? I.nvars + 1 : I.nvars - d;
}

namespace {

bool is_irreducible(const MonomialIdeal& I) {
    for (const auto& g : I.gens) {
        int support = 0;
        for (int e : g)
            if (e > 0) ++support;
        if (support > 1) return false;
    }
    return true;
}

void decompose_rec(const MonomialIdeal& I, std::vector<MonomialIdeal>& out) {
    if (is_irreducible(I)) {
        out.push_back(I);
        return;
    }
    // first generator with mixed support, split on its lowest variable
    for (const auto& g : I.gens) {
        int support = 0, lowest = -1;
        for (int v = 0; v < I.nvars; ++v)
            if (g[v] > 0) {
                ++support;
                if (lowest < 0) lowest = v;
            }
        if (support <= 1) continue;
        Monomial u(I.nvars, 0);
        u[lowest] = g[lowest];
        Monomial v = mono_div(g, u);
        std::vector<Monomial> g1 = I.gens;
        g1.push_back(u);
        std::vector<Monomial> g2 = I.gens;
        g2.push_back(v);
        decompose_rec(make_monomial_ideal(I.nvars, std::move(g1)), out);
        decompose_rec(make_monomial_ideal(I.nvars, std::move(g2)), out);
        return;
    }
}

}  // namespace

std::vector<MonomialIdeal> mono_primary_decomposition(const MonomialIdeal& I) {
    if (I.is_unit()) throw precondition_error("decomposition of the unit ideal");
    if (I.is_zero()) throw precondition_error("decomposition of the zero ideal");
    std::vector<MonomialIdeal> comps;
    decompose_rec(I, comps);
    // prune: drop C_i when some other component is contained in it
    std::vector<MonomialIdeal> pruned;
    for (size_t i = 0; i < comps.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < comps.size() && !redundant; ++j) {
            if (j == i) continue;
            if (equal(comps[i], comps[j]) ? j < i : contains(comps[i], comps[j])) redundant = true;
        }
        if (!redundant) pruned.push_back(comps[i]);
    }
    std::sort(pruned.begin(), pruned.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens < b.gens; });

    // re-verify: the intersection of the components reproduces the input
    MonomialIdeal check = pruned[0];
    for (size_t i = 1; i < pruned.size(); ++i) check = mono_intersect(check, pruned[i]);
    if (!equal(check, I)) throw error("internal: decomposition does not intersect back to the input");
    return pruned;
}

MonomialIdeal mono_top_part(const MonomialIdeal& I, int p) {
    if (mono_codimension(I) != p)
        throw precondition_error("top part expects codimension " + std::to_string(p));
    auto comps = mono_primary_decomposition(I);
    MonomialIdeal acc;
    bool first = true;
    for (const auto& c : comps) {
        if (mono_codimension(c) != p) continue;
        acc = first ? c : mono_intersect(acc, c);
        first = false;
    }
    if (first) throw error("internal: no component of the expected codimension");
    return acc;
}

MonomialIdeal random_monomial_ideal(int nvars, int max_degree, int max_gens, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    while (true) {
        int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens));
        std::vector<Monomial> gens;
        for (int i = 0; i < count; ++i) {
            Monomial m(nvars, 0);
            int deg = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree));
            for (int d = 0; d < deg; ++d) m[static_cast<int>(rng() % static_cast<std::uint64_t>(nvars))] += 1;
            gens.push_back(std::move(m));
        }
        MonomialIdeal I = make_monomial_ideal(nvars, std::move(gens));
        if (!I.is_zero() && !I.is_unit()) return I;
    }
}

Submodule to_submodule(const RingPtr& ring, const MonomialIdeal& I) {
    if (ring->nvars() != I.nvars) throw shape_error("ring/monomial-ideal variable count mismatch");
    std::vector<Polynomial> gens;
    gens.reserve(I.gens.size());
    for (const auto& m : I.gens) gens.push_back(Polynomial::monomial(ring, m, Scalar::one(ring->field)));
    return Submodule::ideal(ring, gens);
}

MonomialIdeal from_submodule(const Submodule& ideal) {
    if (ideal.rank() != 1) throw shape_error("from_submodule expects an ideal");
    std::vector<Monomial> gens;
    for (const auto& p : ideal.ideal_generators()) {
        if (p.is_zero()) continue;
        if (!p.is_monomial()) throw precondition_error("ideal generator is not a monomial");
        gens.push_back(p.leading_term().mono);
    }
    return make_monomial_ideal(ideal.ring()->nvars(), std::move(gens));
}

}  // namespace ccalg::oracle
