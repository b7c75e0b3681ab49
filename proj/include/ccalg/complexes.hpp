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

#ifndef CCALG_COMPLEXES_HPP
#define CCALG_COMPLEXES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ccalg/groebner.hpp"

namespace ccalg {

enum class ComplexOrigin { Koszul, Schreyer, Manual };

/// A finite complex of free modules ... -> O^{r_k} -> O^{r_{k-1}} -> ... with
/// d_{k-1} d_k = 0 checked exactly at construction.
class FreeComplex {
public:
    FreeComplex() = default;
    FreeComplex(RingPtr ring, std::vector<int> ranks, std::vector<RingMatrix> differentials,
                ComplexOrigin origin = ComplexOrigin::Manual);

    const RingPtr& ring() const { return ring_; }
    int length() const { return static_cast<int>(diffs_.size()); }
    int rank(int k) const;  // 0 for k outside [0, length]
    /// d_k : O^{r_k} -> O^{r_{k-1}}, defined for 1 <= k <= length.
    const RingMatrix& differential(int k) const;
    /// d_k, with correctly shaped zero matrices outside the stored range.
    RingMatrix differential_or_zero(int k) const;
    ComplexOrigin origin() const { return origin_; }

    /// r copies of the complex, differentials block-diagonal; basis of the
    /// k-th module is ordered copy-major: (copy, basis-of-copy).
    FreeComplex direct_sum_power(int copies) const;

private:
    RingPtr ring_;
    std::vector<int> ranks_;
    std::vector<RingMatrix> diffs_;
    ComplexOrigin origin_ = ComplexOrigin::Manual;
};

/// Koszul complex of f_1..f_p. Ranks C(p,k); the basis of the k-th module is
/// the k-element index sets sorted lexicographically, and the differential is
/// contraction: e_S -> sum_i (-1)^{pos(i,S)+1} f_i e_{S-i}.
FreeComplex koszul(const std::vector<Polynomial>& f);

/// Free resolution of coker(presentation) by iterated syzygies under induced
/// Schreyer orders; the first differential is the presentation itself.
/// Terminates at a zero kernel (at or shortly after degree n).
FreeComplex schreyer_resolution(const RingMatrix& presentation, int min_length);

struct MinimizeResult {
    FreeComplex complex;
    bool minimized = false;  // false when non-homogeneous input was left as-is
};

/// Cancels nonzero-scalar entries of the differentials. Only applied when all
/// differential entries are homogeneous; otherwise the input is returned with
/// minimized = false.
MinimizeResult minimize(const FreeComplex& c);

/// Hom(-, O): ranks reversed, differentials transposed.
FreeComplex hom_dual(const FreeComplex& c);

/// Test helper: splice a trivial summand O --1--> O between degrees k+1 and k.
FreeComplex pad_with_trivial_summand(const FreeComplex& c, int k);

/// Presentation of H^k(Hom(C, O)) as a subquotient of the dual free module:
/// generators span ker d_{k+1}^*, relations express membership of a generator
/// combination in im d_k^* (and include the generators' own syzygies).
struct SubquotientPresentation {
    RingPtr ring;
    int ambient_rank = 0;
    int degree = 0;
    std::vector<RingVector> generators;  // vectors of length ambient_rank
    Submodule relations;                 // submodule of O^m, m = generators.size()
    Submodule image;                     // im d_k^* inside the ambient

    bool is_zero_module() const { return generators.empty(); }
    int ngens() const { return static_cast<int>(generators.size()); }
    RingMatrix generator_matrix() const;  // ambient_rank x m

    /// Coefficients expressing v over the generators modulo the image, if v
    /// lies in the subquotient's ambient cycle space.
    std::optional<RingVector> express(const RingVector& v) const;

    /// Does the ambient vector represent the zero class?
    bool class_is_zero(const RingVector& v) const;
    bool classes_equal(const RingVector& a, const RingVector& b) const;
};

SubquotientPresentation homology_presentation(const FreeComplex& c, int k);

/// A morphism of complexes a_k : source_k -> target_k with
/// target.d_k a_k = a_{k-1} source.d_k, checked exactly.
struct ChainMap {
    FreeComplex source;
    FreeComplex target;
    std::vector<RingMatrix> maps;  // maps[k] : source_k -> target_k, k = 0..source.length()

    const RingMatrix& map(int k) const { return maps.at(k); }
};

/// Lifts alpha : coker(source.d_1) -> coker(target.d_1) (given on the free
/// covers) to a morphism of complexes. The target must be a resolution.
/// perturb_seed != 0 adds seeded kernel elements to the lift at each degree,
/// producing a different but equally valid chain map (used by tests).
ChainMap lift_chain_map(const RingMatrix& alpha, const FreeComplex& source, const FreeComplex& target,
                        std::uint64_t perturb_seed = 0);

struct HomotopyResult {
    bool ok = false;
    /// s_k : source_k -> target_{k+1} with a_k - b_k = d_{k+1} s_k + s_{k-1} d_k.
    std::vector<RingMatrix> maps;
};

/// Homotopy between two chain maps inducing the same map on cokernels;
/// fails (ok = false) exactly when the induced maps differ.
HomotopyResult homotopy_between(const ChainMap& a, const ChainMap& b);

}  // namespace ccalg

#endif
