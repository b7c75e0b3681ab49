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

#ifndef CCALG_ORACLE_HPP
#define CCALG_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "ccalg/groebner.hpp"

namespace ccalg::oracle {

/// A monomial ideal by its minimal generators (an antichain under
/// divisibility), kept sorted for determinism. Pure lcm/divisibility
/// combinatorics - deliberately independent of the Groebner engine.
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> gens;

    bool is_unit() const;
    bool is_zero() const { return gens.empty(); }
};

MonomialIdeal make_monomial_ideal(int nvars, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& I, const Monomial& m);
/// small <= big as ideals.
bool contains(const MonomialIdeal& big, const MonomialIdeal& small);
bool equal(const MonomialIdeal& a, const MonomialIdeal& b);

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_quotient(const MonomialIdeal& I, const MonomialIdeal& J);
int mono_dimension(const MonomialIdeal& I);  // -1 for the unit ideal
int mono_codimension(const MonomialIdeal& I);

/// Irreducible decomposition by recursive generator splitting: a generator
/// with mixed support x^a = u*v splits I into (I+(u)) intersect (I+(v)),
/// pivoting on the lowest variable. Redundant components are pruned.
std::vector<MonomialIdeal> mono_primary_decomposition(const MonomialIdeal& I);

/// Intersection of the codimension-p components; requires codim I = p.
MonomialIdeal mono_top_part(const MonomialIdeal& I, int p);

/// Seeded random proper monomial ideal for corpus tests.
MonomialIdeal random_monomial_ideal(int nvars, int max_degree, int max_gens, std::uint64_t seed);

// bridges to the engine
Submodule to_submodule(const RingPtr& ring, const MonomialIdeal& I);
MonomialIdeal from_submodule(const Submodule& ideal);  // generators must be monomials

}  // namespace ccalg::oracle

#endif
