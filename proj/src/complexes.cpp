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

#include "ccalg/complexes.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ccalg/errors.hpp"

namespace ccalg {

FreeComplex::FreeComplex(RingPtr ring, std::vector<int> ranks, std::vector<RingMatrix> differentials,
                         ComplexOrigin origin)
    : ring_(std::move(ring)), ranks_(std::move(ranks)), diffs_(std::move(differentials)), origin_(origin) {
    if (ranks_.empty()) throw shape_error("complex needs at least one module");
    if (diffs_.size() + 1 != ranks_.size()) throw shape_error("complex rank/differential count mismatch");
    for (size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != ranks_[k] || diffs_[k].cols() != ranks_[k + 1])
            throw shape_error("differential " + std::to_string(k + 1) + " has the wrong shape");
    }
    for (size_t k = 0; k + 1 < diffs_.size(); ++k) {
        if (!(diffs_[k] * diffs_[k + 1]).is_zero())
            throw precondition_error("complex property d*d = 0 fails at degree " + std::to_string(k + 2));
    }
}

int FreeComplex::rank(int k) const {
    if (k < 0 || k > length()) return 0;
    return ranks_[k];
}

const RingMatrix& FreeComplex::differential(int k) const {
    if (k < 1 || k > length()) throw shape_error("differential index out of range");
    return diffs_[k - 1];
}

RingMatrix FreeComplex::differential_or_zero(int k) const {
    if (k >= 1 && k <= length()) return diffs_[k - 1];
    return RingMatrix(ring_, rank(k - 1), rank(k));
}

FreeComplex FreeComplex::direct_sum_power(int copies) const {
    std::vector<int> ranks;
    ranks.reserve(ranks_.size());
    for (int r : ranks_) ranks.push_back(r * copies);
    std::vector<RingMatrix> diffs;
    diffs.reserve(diffs_.size());
    for (const auto& d : diffs_) {
        RingMatrix big(ring_, d.rows() * copies, d.cols() * copies);
        for (int c = 0; c < copies; ++c)
            for (int i = 0; i < d.rows(); ++i)
                for (int j = 0; j < d.cols(); ++j) big.at(c * d.rows() + i, c * d.cols() + j) = d.at(i, j);
        diffs.push_back(std::move(big));
    }
    return FreeComplex(ring_, std::move(ranks), std::move(diffs), origin_);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> subsets_of_size(int p, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // lexicographic enumeration
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < p; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int subset_index(const std::vector<std::vector<int>>& sets, const std::vector<int>& s) {
    auto it = std::lower_bound(sets.begin(), sets.end(), s);
    return static_cast<int>(it - sets.begin());
}

}  // namespace

FreeComplex koszul(const std::vector<Polynomial>& f) {
    if (f.empty()) throw precondition_error("koszul complex of an empty tuple");
    RingPtr ring = f[0].ring();
    for (const auto& g : f) check_same_ring(ring, g.ring());
    int p = static_cast<int>(f.size());

    std::vector<int> ranks;
    std::vector<RingMatrix> diffs;
    std::vector<std::vector<std::vector<int>>> bases;
    for (int k = 0; k <= p; ++k) bases.push_back(subsets_of_size(p, k));
    for (int k = 0; k <= p; ++k) ranks.push_back(static_cast<int>(bases[k].size()));

    for (int k = 1; k <= p; ++k) {
        RingMatrix d(ring, ranks[k - 1], ranks[k]);
        for (int col = 0; col < ranks[k]; ++col) {
            const auto& S = bases[k][col];
            for (int posi = 0; posi < k; ++posi) {
                int i = S[posi];
                std::vector<int> rest;
                rest.reserve(k - 1);
                for (int x : S)
                    if (x != i) rest.push_back(x);
                int row = subset_index(bases[k - 1], rest);
                // contraction sign (-1)^{pos+1} with pos counted from 1
                Polynomial entry = (posi % 2 == 0) ? f[i] : -f[i];
                d.at(row, col) = d.at(row, col) + entry;
            }
        }
        diffs.push_back(std::move(d));
    }
    return FreeComplex(ring, std::move(ranks), std::move(diffs), ComplexOrigin::Koszul);
}

// ---------------------------------------------------------------------------
// Schreyer resolution: iterated syzygies under induced orders. Mirrors
// ccalg::syzygies but keeps the order chain along the spine.

FreeComplex schreyer_resolution(const RingMatrix& presentation, int min_length) {
    const RingPtr& ring = presentation.ring();
    int n = ring->nvars();
    if (min_length > n)
        throw precondition_error("min_length exceeds the number of variables");
    std::vector<int> ranks{presentation.rows()};
    std::vector<RingMatrix> diffs;
    if (presentation.cols() == 0)
        return FreeComplex(ring, std::move(ranks), std::move(diffs), ComplexOrigin::Schreyer);

    ranks.push_back(presentation.cols());
    diffs.push_back(presentation);

    std::vector<RingVector> gens = presentation.columns();
    auto order = std::make_shared<ModuleOrder>(ModuleOrder::top(ring->order));
    int rank = presentation.rows();
    const int hard_cap = n + 4;

    for (int level = 1; level <= hard_cap; ++level) {
        BuchbergerResult res = buchberger(ring, rank, gens, *order);
        std::vector<RingVector> cands = std::move(res.syzygy_candidates);

        // redundancy relations of the generators against their basis
        {
            GroebnerBasis gb(ring, rank, static_cast<int>(gens.size()), *order, res.basis);
            for (size_t i = 0; i < gens.size(); ++i) {
                if (gens[i].is_zero()) continue;
                LiftResult lr = lift_against(gb, gens[i]);
                RingVector cand = RingVector::unit(ring, static_cast<int>(gens.size()), static_cast<int>(i)) -
                                  lr.coefficients;
                if (!cand.is_zero()) cands.push_back(std::move(cand));
            }
        }

        std::vector<ModTerm> leads;
        leads.reserve(gens.size());
        for (const auto& g : gens) {
            if (g.is_zero()) {
                leads.push_back(ModTerm{Monomial(ring->nvars(), 0), 0});
            } else {
                leads.push_back(leading_term(g, *order));
            }
        }
        auto next_order = std::make_shared<ModuleOrder>(ModuleOrder::schreyer(order, std::move(leads)));
        BuchbergerResult reduced = buchberger(ring, static_cast<int>(gens.size()), cands, *next_order);
        if (reduced.basis.empty()) break;

        std::vector<RingVector> next_gens;
        next_gens.reserve(reduced.basis.size());
        for (auto& e : reduced.basis) next_gens.push_back(std::move(e.vec));
        diffs.push_back(RingMatrix::from_columns(ring, static_cast<int>(gens.size()), next_gens));
        ranks.push_back(static_cast<int>(next_gens.size()));
        rank = static_cast<int>(gens.size());
        gens = std::move(next_gens);
        order = next_order;
        if (level == hard_cap)
            throw error("internal: resolution did not terminate within the Hilbert bound");
    }
    return FreeComplex(ring, std::move(ranks), std::move(diffs), ComplexOrigin::Schreyer);
}

// ---------------------------------------------------------------------------

MinimizeResult minimize(const FreeComplex& c) {
    const RingPtr& ring = c.ring();
    for (int k = 1; k <= c.length(); ++k) {
        const RingMatrix& d = c.differential(k);
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                if (!d.at(i, j).is_homogeneous()) return MinimizeResult{c, false};
    }

    std::vector<int> ranks;
    std::vector<RingMatrix> diffs;
    for (int k = 0; k <= c.length(); ++k) ranks.push_back(c.rank(k));
    for (int k = 1; k <= c.length(); ++k) diffs.push_back(c.differential(k));

    auto erase_row = [](RingMatrix& m, int row) {
        RingMatrix out(m.ring(), m.rows() - 1, m.cols());
        for (int i = 0, ii = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            for (int j = 0; j < m.cols(); ++j) out.at(ii, j) = m.at(i, j);
            ++ii;
        }
        m = out;
    };
    auto erase_col = [](RingMatrix& m, int col) {
        RingMatrix out(m.ring(), m.rows(), m.cols() - 1);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0, jj = 0; j < m.cols(); ++j) {
                if (j == col) continue;
                out.at(i, jj++) = m.at(i, j);
            }
        m = out;
    };

    while (true) {
        int fk = -1, fi = -1, fj = -1;
        for (int k = 1; k <= static_cast<int>(diffs.size()) && fk < 0; ++k) {
            const RingMatrix& d = diffs[k - 1];
            for (int i = 0; i < d.rows() && fk < 0; ++i)
                for (int j = 0; j < d.cols() && fk < 0; ++j)
                    if (d.at(i, j).is_unit_constant()) {
                        fk = k;
                        fi = i;
                        fj = j;
                    }
        }
        if (fk < 0) break;

        RingMatrix& dk = diffs[fk - 1];
        Scalar cval = dk.at(fi, fj).leading_term().coeff;
        Polynomial cinv = Polynomial::constant(ring, 1).scaled(cval.inverse());

        std::vector<Polynomial> lambda(dk.cols());
        for (int l = 0; l < dk.cols(); ++l) lambda[l] = dk.at(fi, l) * cinv;

        // row fj of d_{k+1} absorbs the other rows; it must come out zero
        if (fk < static_cast<int>(diffs.size())) {
            RingMatrix& dnext = diffs[fk];
            for (int q = 0; q < dnext.cols(); ++q) {
                Polynomial acc = dnext.at(fj, q);
                for (int l = 0; l < dk.cols(); ++l) {
                    if (l == fj) continue;
                    acc = acc + lambda[l] * dnext.at(l, q);
                }
                dnext.at(fj, q) = acc;
            }
        }

        // clear row fi of d_k outside the pivot column
        for (int l = 0; l < dk.cols(); ++l) {
            if (l == fj) continue;
            if (lambda[l].is_zero()) continue;
            for (int i = 0; i < dk.rows(); ++i) dk.at(i, l) = dk.at(i, l) - lambda[l] * dk.at(i, fj);
        }

        // column fi of d_{k-1} absorbs the other columns; it must come out zero
        if (fk > 1) {
            RingMatrix& dprev = diffs[fk - 2];
            for (int i = 0; i < dprev.rows(); ++i) {
                Polynomial acc = dprev.at(i, fi);
                for (int ii = 0; ii < dk.rows(); ++ii) {
                    if (ii == fi) continue;
                    acc = acc + dprev.at(i, ii) * (dk.at(ii, fj) * cinv);
                }
                dprev.at(i, fi) = acc;
                if (!acc.is_zero()) throw error("internal: minimize left a nonzero column");
            }
        }
        if (fk < static_cast<int>(diffs.size())) {
            for (int q = 0; q < diffs[fk].cols(); ++q)
                if (!diffs[fk].at(fj, q).is_zero()) throw error("internal: minimize left a nonzero row");
        }

        erase_row(dk, fi);
        erase_col(dk, fj);
        if (fk < static_cast<int>(diffs.size())) erase_row(diffs[fk], fj);
        if (fk > 1) erase_col(diffs[fk - 2], fi);
        ranks[fk] -= 1;
        ranks[fk - 1] -= 1;
    }

    while (!ranks.empty() && ranks.back() == 0) {
        ranks.pop_back();
        diffs.pop_back();
    }
    return MinimizeResult{FreeComplex(ring, std::move(ranks), std::move(diffs), c.origin()), true};
}

FreeComplex hom_dual(const FreeComplex& c) {
    int n = c.length();
    std::vector<int> ranks;
    std::vector<RingMatrix> diffs;
    for (int k = 0; k <= n; ++k) ranks.push_back(c.rank(n - k));
    for (int k = 1; k <= n; ++k) diffs.push_back(c.differential(n - k + 1).transpose());
    return FreeComplex(c.ring(), std::move(ranks), std::move(diffs), ComplexOrigin::Manual);
}

FreeComplex pad_with_trivial_summand(const FreeComplex& c, int k) {
    if (k < 0 || k > c.length()) throw shape_error("pad position out of range");
    const RingPtr& ring = c.ring();
    int n = std::max(c.length(), k + 1);
    std::vector<int> ranks;
    std::vector<RingMatrix> diffs;
    for (int d = 0; d <= n; ++d) ranks.push_back(c.rank(d));
    ranks[k] += 1;
    ranks[k + 1] += 1;
    for (int d = 1; d <= n; ++d) {
        RingMatrix m(ring, ranks[d - 1], ranks[d]);
        RingMatrix old = c.differential_or_zero(d);
        for (int i = 0; i < old.rows(); ++i)
            for (int j = 0; j < old.cols(); ++j) m.at(i, j) = old.at(i, j);
        if (d == k + 1) m.at(ranks[d - 1] - 1, ranks[d] - 1) = Polynomial::constant(ring, 1);
        diffs.push_back(std::move(m));
    }
    return FreeComplex(ring, std::move(ranks), std::move(diffs), ComplexOrigin::Manual);
}

// ---------------------------------------------------------------------------

RingMatrix SubquotientPresentation::generator_matrix() const {
    return RingMatrix::from_columns(ring, ambient_rank, generators);
}

std::optional<RingVector> SubquotientPresentation::express(const RingVector& v) const {
    if (v.length() != ambient_rank) throw shape_error("express: ambient rank mismatch");
    Submodule combined = module_sum(Submodule::from_columns(ring, ambient_rank, generators), image);
    LiftResult r = lift(v, combined);
    if (!r.ok) return std::nullopt;
    std::vector<Polynomial> head;
    for (int i = 0; i < ngens(); ++i) head.push_back(r.coefficients[i]);
    return RingVector(ring, std::move(head));
}

bool SubquotientPresentation::class_is_zero(const RingVector& v) const {
    return image.ngens() == 0 ? v.is_zero() : image.contains(v);
}

bool SubquotientPresentation::classes_equal(const RingVector& a, const RingVector& b) const {
    return class_is_zero(a - b);
}

SubquotientPresentation homology_presentation(const FreeComplex& c, int k) {
    if (k < 0 || k > c.length()) throw shape_error("homology degree out of range");
    const RingPtr& ring = c.ring();
    int r = c.rank(k);

    SubquotientPresentation out;
    out.ring = ring;
    out.ambient_rank = r;
    out.degree = k;

    // ker d_{k+1}^* inside (O^{r_k})^*
    Submodule kernel = Submodule::full(ring, r);
    if (k < c.length()) {
        RingMatrix dual_next = c.differential(k + 1).transpose();  // r_{k+1} x r_k
        kernel = syzygies(Submodule(ring, dual_next.rows(), dual_next));
    } else if (r == 0) {
        kernel = Submodule::zero(ring, 0);
    }

    // im d_k^*
    Submodule image = k >= 1 ? Submodule(ring, r, c.differential(k).transpose())
                             : Submodule::zero(ring, r);
    out.image = image;

    // canonical zero module when ker <= im
    bool all_in = true;
    for (int j = 0; j < kernel.ngens() && all_in; ++j) all_in = image.contains(kernel.generator(j));
    if (kernel.ngens() == 0 || all_in) {
        out.relations = Submodule::zero(ring, 0);
        return out;
    }

    out.generators = kernel.generators().columns();
    out.relations = kernel_mod(kernel.generators(), image);

    // invariants: generators are cocycles, relations land in the image
    if (k < c.length()) {
        RingMatrix dual_next = c.differential(k + 1).transpose();
        for (const auto& g : out.generators)
            if (!(dual_next * g).is_zero()) throw error("internal: homology generator is not a cocycle");
    }
    RingMatrix genmat = out.generator_matrix();
    for (int j = 0; j < out.relations.ngens(); ++j) {
        RingVector pushed = genmat * out.relations.generator(j);
        if (!image.contains(pushed) && !pushed.is_zero())
            throw error("internal: homology relation does not land in the image");
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// lift every column of rhs through the image of d, optionally perturbed by
// seeded kernel elements
RingMatrix lift_columns_through(const RingMatrix& rhs, const RingMatrix& d, std::uint64_t perturb_seed, int degree) {
    const RingPtr& ring = rhs.ring();
    if (d.cols() == 0) {
        if (!rhs.is_zero())
            throw precondition_error("chain lift hit a zero target module with nonzero right-hand side");
        return RingMatrix(ring, 0, rhs.cols());
    }
    Submodule im(ring, d.rows(), d);
    RingMatrix out = lift_matrix(rhs, im);
    if (perturb_seed != 0) {
        Submodule ker = syzygies(im);
        if (ker.ngens() > 0) {
            std::mt19937_64 rng(perturb_seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(degree));
            for (int j = 0; j < out.cols(); ++j) {
                int pick = static_cast<int>(rng() % static_cast<std::uint64_t>(ker.ngens() + 1));
                if (pick == ker.ngens()) continue;
                RingVector kcol = ker.generator(pick);
                for (int i = 0; i < out.rows(); ++i) out.at(i, j) = out.at(i, j) + kcol[i];
            }
        }
    }
    return out;
}

}  // namespace

ChainMap lift_chain_map(const RingMatrix& alpha, const FreeComplex& source, const FreeComplex& target,
                        std::uint64_t perturb_seed) {
    check_same_ring(source.ring(), target.ring());
    if (alpha.rows() != target.rank(0) || alpha.cols() != source.rank(0))
        throw shape_error("chain map lift: alpha shape mismatch");

    // alpha must descend to the cokernels
    if (source.length() >= 1) {
        RingMatrix pushed = alpha * source.differential(1);
        Submodule im1 = target.length() >= 1 ? Submodule(target.ring(), target.rank(0), target.differential(1))
                                             : Submodule::zero(target.ring(), target.rank(0));
        for (int j = 0; j < pushed.cols(); ++j) {
            RingVector col = pushed.column(j);
            if (col.is_zero()) continue;
            if (!im1.contains(col))
                throw precondition_error("alpha does not descend to the cokernels; failing column " +
                                         std::to_string(j) + " = " + col.str());
        }
    }

    ChainMap cm{source, target, {alpha}};
    for (int k = 1; k <= source.length(); ++k) {
        RingMatrix rhs = cm.maps[k - 1] * source.differential(k);
        RingMatrix dk = target.differential_or_zero(k);
        RingMatrix ak = lift_columns_through(rhs, dk, perturb_seed, k);
        cm.maps.push_back(std::move(ak));
    }
    // exact verification of the chain identity
    for (int k = 1; k <= source.length(); ++k) {
        RingMatrix lhs = target.differential_or_zero(k) * cm.maps[k];
        RingMatrix rhs = cm.maps[k - 1] * source.differential(k);
        if (!(lhs - rhs).is_zero()) throw error("internal: chain map identity failed at degree " + std::to_string(k));
    }
    return cm;
}

HomotopyResult homotopy_between(const ChainMap& a, const ChainMap& b) {
    const FreeComplex& K = a.source;
    const FreeComplex& E = a.target;
    HomotopyResult out;

    // the induced cokernel maps must agree: columns of a_0 - b_0 lie in im d_1
    RingMatrix diff0 = a.map(0) - b.map(0);
    Submodule im1 = E.length() >= 1 ? Submodule(E.ring(), E.rank(0), E.differential(1))
                                    : Submodule::zero(E.ring(), E.rank(0));
    for (int j = 0; j < diff0.cols(); ++j) {
        RingVector col = diff0.column(j);
        if (col.is_zero()) continue;
        if (!im1.contains(col)) return out;  // no homotopy exists
    }

    std::vector<RingMatrix> s;
    for (int k = 0; k <= K.length(); ++k) {
        RingMatrix rhs = a.map(k) - b.map(k);
        if (k >= 1) rhs = rhs - s[k - 1] * K.differential(k);
        RingMatrix dnext = E.differential_or_zero(k + 1);
        s.push_back(lift_columns_through(rhs, dnext, 0, k));
    }
    // verify a_k - b_k = d_{k+1} s_k + s_{k-1} psi_k exactly
    for (int k = 0; k <= K.length(); ++k) {
        RingMatrix lhs = a.map(k) - b.map(k);
        RingMatrix rhs = E.differential_or_zero(k + 1) * s[k];
        if (k >= 1) rhs = rhs + s[k - 1] * K.differential(k);
        if (!(lhs - rhs).is_zero()) throw error("internal: homotopy identity failed at degree " + std::to_string(k));
    }
    out.ok = true;
    out.maps = std::move(s);
    return out;
}

}  // namespace ccalg
