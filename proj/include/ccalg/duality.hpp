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

#ifndef CCALG_DUALITY_HPP
#define CCALG_DUALITY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ccalg/complexes.hpp"

namespace ccalg {

/// An ordered regular sequence f_1..f_p together with the ideal it generates.
/// Every prefix (f_1..f_k) is certified to have codimension exactly k.
struct CompleteIntersection {
    std::vector<Polynomial> gens;
    Submodule ideal;
    int p = 0;
};

/// Validates the regular-sequence certificate and builds the value.
CompleteIntersection make_complete_intersection(std::vector<Polynomial> f);

/// Deterministic search for a regular sequence of length p inside the ideal:
/// integer combinations of the generators in boxes of increasing size.
/// Requires codimension(ideal) >= p; throws search_error on exhaustion.
CompleteIntersection find_regular_sequence(const Submodule& ideal, int p, std::uint64_t seed);

/// An Ext class in degree p over a fixed free resolution (E, phi):
/// a row xi0 in Hom(E_p, O) with phi_{p+1}^* xi0 = 0.
struct ExtClass {
    std::shared_ptr<const FreeComplex> resolution;
    int degree = 0;
    RingVector row;
};

/// Ext^k(G, O) presented as a subquotient, bundled with the resolution it
/// was computed over (needed to evaluate pairings against its generators).
struct ExtData {
    std::shared_ptr<const FreeComplex> resolution;
    SubquotientPresentation pres;

    ExtClass generator_class(int j) const;
};

/// Ext^k(O^r/J, O) via the dualized Schreyer resolution of the presentation.
ExtData ext_module(const Submodule& relations, int k);

/// Resolution plus all Ext presentations in a degree range; resolves once.
struct ExtTower {
    std::shared_ptr<const FreeComplex> resolution;
    std::vector<SubquotientPresentation> levels;  // degrees lo..hi
    int lo = 0;
};
ExtTower ext_tower(const Submodule& relations, int lo, int hi);

/// The class (e_1 ^ ... ^ e_p)^* over the Koszul resolution of I, after
/// certifying Ext^p(O/I, O) iso O/I by mutual lift.
ExtClass ci_ext_generator(const CompleteIntersection& I);

/// A local cohomology class held at complete-intersection level: the level I
/// and a residue value stored as a normal form in O/I.
struct CohClass {
    CompleteIntersection level;
    Polynomial value;

    bool is_zero() const { return value.is_zero(); }
};

/// Refine a class from its level to a finer complete intersection
/// I_fine <= level of the same codimension; multiplies by det A where
/// f_fine = A f. Refinement is injective, so equality may be decided after
/// refining both sides to a common level.
CohClass ci_level_map(const CohClass& c, const CompleteIntersection& fine);

/// Equality of CohClass values after refinement to a common level inside the
/// intersection of the two level ideals.
bool coh_classes_equal(const CohClass& a, const CohClass& b, std::uint64_t seed = 0);

/// The duality pairing <g, xi> = pi(eps_g^* xi) at level I <= Ann(O^r/J),
/// computed by lifting eps_g over the Koszul complex of I and contracting
/// with xi. The result does not depend on the lift or the resolution.
CohClass pairing_eval(const Submodule& J, const RingVector& g, const ExtClass& xi,
                      const CompleteIntersection& I, std::uint64_t lift_seed = 0);

/// Row presentation of the pairing: one row w_j per Ext^p generator with
/// <g, xi_j> = [w_j . g] in O/I.
struct PairingMatrix {
    ExtData ext;
    CompleteIntersection level;
    std::vector<RingVector> rows;
};
PairingMatrix pairing_matrix(const Submodule& J, const CompleteIntersection& I);

/// {g : w_j . g in I for all j} - by the duality theorem this equals the
/// equidimensional hull of J.
Submodule pairing_left_kernel(const Submodule& J, const CompleteIntersection& I);

/// Equidimensional hull J_[p] via linkage: I : (I : J) for a regular
/// sequence I inside Ann(O^r/J). Requires codim O^r/J = p.
Submodule equidimensional_hull(const Submodule& J, int p, std::uint64_t seed);

struct InjectivityReport {
    bool injective = false;
    std::vector<RingVector> kernel_witnesses;  // nonzero classes killed by the map
};

/// Kernel of alpha^* : Ext^p(G, O) -> Ext^p((O/I)^r, O); must be zero for
/// codim G >= p.
InjectivityReport right_injectivity_check(const Submodule& J, const CompleteIntersection& I);

/// alpha^* on Ext^p presentations for alpha : O^rF/JF -> O^rG/JG given on the
/// free covers, with the underlying chain map retained.
struct ExtMapData {
    ExtData source_ext;  // Ext^p(G, O)
    ExtData target_ext;  // Ext^p(F, O)
    RingMatrix matrix;   // target gens x source gens
    ChainMap chain;      // resolution of F -> resolution of G
};
ExtMapData induced_ext_map(const RingMatrix& alpha, const Submodule& JF, const Submodule& JG, int p);

/// Transport a class between two resolutions of the same presentation via an
/// identity chain lift.
ExtClass transport_ext_class(const ExtClass& xi, const std::shared_ptr<const FreeComplex>& other);

struct CodimRow {
    int ell = 0;
    std::optional<int> codim;  // nullopt = zero module (infinite codimension)
    int required = 0;
    bool ok = false;
};

struct SkReport {
    bool verdict = false;
    int p = 0, k = 0;
    std::vector<CodimRow> rows;
};

/// Serre condition S_k via Ext supports: codim supp Ext^l >= l + k for
/// l >= p+1. Vacuously true when p+1 > n.
SkReport sk_test(const Submodule& J, int p, int k);

struct PurityReport {
    bool pure = false;
    std::vector<CodimRow> rows;  // requirement codim Ext^l >= l + 1
};

/// Pure codimension p iff codim Ext^l(G, O) >= l + 1 for all l > p.
PurityReport purity_test(const Submodule& J, int p);

struct RoosReport {
    bool injective = false;
    bool surjective = false;
    ExtData double_ext;                // Ext^p(Ext^p(G,O),O)
    RingMatrix map;                    // O^r -> generator coordinates of double_ext
    Submodule kernel;                  // kernel of the induced map on O^r
    Submodule hull;                    // equidimensional hull used for the verdicts
    std::optional<int> cokernel_length;
};

/// The natural map G^(p) = O^r/hull(J) -> Ext^p(Ext^p(G,O),O); injective,
/// surjective exactly when G^(p) is S_2.
RoosReport roos_map(const Submodule& J, int p, std::uint64_t seed);

struct TransformationReport {
    bool chain_map_ok = false;
    bool classes_ok = false;
    Polynomial det_a;
};

/// For f = A g (both regular sequences), checks that the wedge powers of A
/// form a chain map Koszul(f) -> Koszul(g) and that the induced map on the
/// top Ext is multiplication by det A.
TransformationReport transformation_check(const CompleteIntersection& g, const CompleteIntersection& f,
                                          const RingMatrix& A);

/// Vector-space length of O^q / N when finite.
std::optional<int> quotient_length(const Submodule& N);

/// True when every generator of every listed object is a single term or all
/// its terms share one total degree (certifies local semantics).
bool generators_certified_local(const Submodule& m);

}  // namespace ccalg

#endif
