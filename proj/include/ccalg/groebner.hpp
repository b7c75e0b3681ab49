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

#ifndef CCALG_GROEBNER_HPP
#define CCALG_GROEBNER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ccalg/matrix.hpp"
#include "ccalg/order.hpp"

namespace ccalg {

/// One Groebner basis element together with its expression in the original
/// generators (vec == generators * expr).
struct GBElement {
    RingVector vec;   // element of O^r
    RingVector expr;  // element of O^s, s = number of original generators
    ModTerm lt;
};

class Submodule;

/// Buchberger-complete, inter-reduced, monic basis of a submodule, with the
/// transition data back to the generators it was computed from.
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr ring, int ambient_rank, int ngens, ModuleOrder order, std::vector<GBElement> elems);

    const RingPtr& ring() const { return ring_; }
    int ambient_rank() const { return ambient_rank_; }
    int ngens() const { return ngens_; }
    const ModuleOrder& order() const { return order_; }
    const std::vector<GBElement>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }

    /// Expression of basis element k in the original generators.
    const RingVector& expression(int k) const { return elems_[k].expr; }

private:
    RingPtr ring_;
    int ambient_rank_;
    int ngens_;
    ModuleOrder order_;
    std::vector<GBElement> elems_;
};

/// A submodule of a free module O^r, held by generator columns. Groebner
/// bases are cached per order; the cache is computed-once and safe to share.
class Submodule {
public:
    Submodule() = default;
    Submodule(RingPtr ring, int rank, RingMatrix gens);
    static Submodule from_columns(RingPtr ring, int rank, const std::vector<RingVector>& cols);
    static Submodule ideal(RingPtr ring, const std::vector<Polynomial>& gens);
    static Submodule zero(RingPtr ring, int rank);
    static Submodule full(RingPtr ring, int rank);  // generated by the unit vectors

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    int ngens() const { return gens_.cols(); }
    const RingMatrix& generators() const { return gens_; }
    RingVector generator(int j) const { return gens_.column(j); }
    std::vector<Polynomial> ideal_generators() const;  // rank 1 only

    /// Cached Groebner basis; default order is TOP over the ring order.
    std::shared_ptr<const GroebnerBasis> groebner(std::optional<ModuleOrder> ord = std::nullopt) const;

    bool contains(const RingVector& v) const;
    bool contains_poly(const Polynomial& p) const;  // rank 1
    bool contains(const Submodule& other) const;
    bool equals(const Submodule& other) const;
    bool is_zero_module() const;

    std::string str() const;

private:
    RingPtr ring_;
    int rank_ = 0;
    RingMatrix gens_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache_;

public:
    Submodule(const Submodule& o);
    Submodule& operator=(const Submodule& o);
    Submodule(Submodule&& o) noexcept;
    Submodule& operator=(Submodule&& o) noexcept;
};

// --- core operations -------------------------------------------------------

GroebnerBasis groebner_basis(const Submodule& m, const ModuleOrder& ord);

/// Fully reduced normal form; no term is divisible by a basis leading term.
RingVector normal_form(const RingVector& v, const GroebnerBasis& gb);
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct LiftResult {
    bool ok = false;
    RingVector coefficients;  // over the submodule generators; gens * coefficients == v
    RingVector witness;       // nonzero normal form when not in the module
};

/// Express v in the generators of m, or report the nonzero normal form.
LiftResult lift(const RingVector& v, const Submodule& m);

/// Same with a precomputed basis; coefficients refer to the generators the
/// basis was computed from.
LiftResult lift_against(const GroebnerBasis& gb, const RingVector& v);

/// Column-wise lift of a whole matrix; throws precondition_error on failure.
RingMatrix lift_matrix(const RingMatrix& cols, const Submodule& m);

/// Generators of the syzygy module ker(O^s -> O^r, e_i -> gen_i).
Submodule syzygies(const Submodule& m);

Submodule intersect(const Submodule& m, const Submodule& n);

/// Ideal {a in O : a*N <= M} for submodules of the same O^r.
Submodule quotient(const Submodule& m, const Submodule& n);

/// Functionals g in Hom(O^r, O) with g(J) <= I, returned as a submodule of
/// O^r whose columns are the functionals.
Submodule colon_functionals(const Submodule& I, const Submodule& J);

/// Ann(O^r / relations).
Submodule annihilator(const Submodule& relations);

struct DimensionResult {
    int dimension = 0;       // -1 for the unit ideal
    bool unit_ideal = false;
};

/// Krull dimension of O/I via independent variable subsets of the leading
/// term ideal; dimension of the zero ideal is n.
DimensionResult dimension(const Submodule& ideal);

/// n - dimension; 0 for the zero ideal; n + 1 flags the unit ideal.
int codimension(const Submodule& ideal);

/// Codimension of the module O^r / relations (via its annihilator).
/// Returns n + 1 for the zero module.
int module_codimension(const Submodule& relations);

// --- helpers used across modules -------------------------------------------

/// Kernel of the composite O^a -> O^b -> O^b/N where the first map is the
/// matrix M (b x a).
Submodule kernel_mod(const RingMatrix& M, const Submodule& N);

/// Concatenation of generators (the sum of the submodules).
Submodule module_sum(const Submodule& a, const Submodule& b);

/// I * O^rank for an ideal I.
Submodule ideal_times_free(const Submodule& I, int rank);

/// Leading module term of a vector under an order; throws on zero.
ModTerm leading_term(const RingVector& v, const ModuleOrder& ord);

/// Internal Buchberger record: syzygy candidates collected on the way.
struct BuchbergerResult {
    std::vector<GBElement> basis;
    std::vector<RingVector> syzygy_candidates;  // in original generator coordinates
};

BuchbergerResult buchberger(const RingPtr& ring, int rank, const std::vector<RingVector>& gens,
                            const ModuleOrder& ord);

/// Checks that every S-vector of the basis reduces to zero (test support).
bool buchberger_criterion_holds(const GroebnerBasis& gb);

}  // namespace ccalg

#endif
