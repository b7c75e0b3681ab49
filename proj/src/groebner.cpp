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

#include "ccalg/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "ccalg/errors.hpp"

namespace ccalg {

namespace {

struct VTerm {
    ModTerm t;
    Scalar c;
};

// Leading module term under an arbitrary order; scans every term so the
// order does not have to agree with the ring's storage order.
std::optional<VTerm> leading_vterm(const RingVector& v, const ModuleOrder& ord) {
    std::optional<VTerm> best;
    for (int pos = 0; pos < v.length(); ++pos) {
        for (const auto& t : v[pos].terms()) {
            ModTerm mt{t.mono, pos};
            if (!best || ord.cmp(mt, best->t) > 0) best = VTerm{mt, t.coeff};
        }
    }
    return best;
}

RingVector subtract_term(const RingVector& v, const ModTerm& t, const Scalar& c) {
    RingVector r = v;
    r[t.pos] = r[t.pos] + Polynomial::monomial(v.ring(), t.mono, -c);
    return r;
}

RingVector add_term(const RingVector& v, const ModTerm& t, const Scalar& c) {
    RingVector r = v;
    r[t.pos] = r[t.pos] + Polynomial::monomial(v.ring(), t.mono, c);
    return r;
}

struct WorkBasis {
    std::vector<GBElement> elems;
    const ModuleOrder* ord;

    // first basis element whose leading term divides t
    int find_reducer(const ModTerm& t, int skip = -1) const {
        for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
            if (k == skip) continue;
            if (divides(elems[k].lt, t)) return k;
        }
        return -1;
    }
};

struct FullReduction {
    RingVector remainder;
    RingVector expr;                  // running expression in original generators
    std::vector<Polynomial> quotient;  // over the basis elements
};

FullReduction reduce_full_tracked(RingVector v, RingVector expr, const WorkBasis& basis, bool want_quotient,
                                  int skip = -1) {
    const RingPtr& ring = v.ring();
    FullReduction out;
    out.remainder = RingVector(ring, v.length());
    std::vector<Polynomial> quot;
    if (want_quotient) quot.assign(basis.elems.size(), Polynomial(ring));
    while (true) {
        auto lt = leading_vterm(v, *basis.ord);
        if (!lt) break;
        int k = basis.find_reducer(lt->t, skip);
        if (k >= 0) {
            Monomial m = mono_div(lt->t.mono, basis.elems[k].lt.mono);
            v = v - basis.elems[k].vec.term_multiplied(m, lt->c);
            expr = expr - basis.elems[k].expr.term_multiplied(m, lt->c);
            if (want_quotient) quot[k] = quot[k] + Polynomial::monomial(ring, m, lt->c);
        } else {
            out.remainder = add_term(out.remainder, lt->t, lt->c);
            v = subtract_term(v, lt->t, lt->c);
        }
    }
    out.expr = std::move(expr);
    out.quotient = std::move(quot);
    return out;
}

}  // namespace

ModTerm leading_term(const RingVector& v, const ModuleOrder& ord) {
    auto lt = leading_vterm(v, ord);
    if (!lt) throw precondition_error("leading term of the zero vector");
    return lt->t;
}

// ---------------------------------------------------------------------------
// Buchberger with expression tracking.
//
// Pair selection: minimal lcm degree first, ties by (i, j) in creation
// order. Product criterion only in ambient rank one, where the Koszul
// syzygy of the skipped pair is recorded instead. Chain criterion drops
// pairs whose companion pairs are already settled.

BuchbergerResult buchberger(const RingPtr& ring, int rank, const std::vector<RingVector>& gens,
                            const ModuleOrder& ord) {
    int s = static_cast<int>(gens.size());
    WorkBasis basis;
    basis.ord = &ord;
    std::vector<RingVector> syz;

    auto mk_expr_unit = [&](int i) { return RingVector::unit(ring, s, i); };

    // pair queue keyed by (lcm degree, i, j)
    struct Pair {
        int deg, i, j;
        Monomial lcm;
        bool operator<(const Pair& o) const { return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j); }
    };
    std::set<Pair> queue;
    std::set<std::pair<int, int>> settled;
    std::vector<Pair> chain_dropped;

    auto push_pairs_with = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis.elems[i].lt.pos != basis.elems[j].lt.pos) continue;
            Monomial l = mono_lcm(basis.elems[i].lt.mono, basis.elems[j].lt.mono);
            queue.insert(Pair{total_degree(l), i, j, std::move(l)});
        }
    };

    auto append_element = [&](RingVector v, RingVector expr) {
        auto lt = leading_vterm(v, ord);
        Scalar inv = lt->c.inverse();
        v = v.term_multiplied(Monomial(ring->nvars(), 0), inv);
        expr = expr.term_multiplied(Monomial(ring->nvars(), 0), inv);
        basis.elems.push_back(GBElement{std::move(v), std::move(expr), lt->t});
        push_pairs_with(static_cast<int>(basis.elems.size()) - 1);
    };

    for (int i = 0; i < s; ++i) {
        if (gens[i].length() != rank) throw shape_error("generator length does not match ambient rank");
        if (gens[i].is_zero()) {
            syz.push_back(mk_expr_unit(i));  // a zero generator is its own relation
            continue;
        }
        append_element(gens[i], mk_expr_unit(i));
    }

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        const GBElement& bi = basis.elems[pr.i];
        const GBElement& bj = basis.elems[pr.j];

        // product criterion (ideals only): record the Koszul syzygy
        if (rank == 1 && mono_mul(bi.lt.mono, bj.lt.mono) == pr.lcm) {
            RingVector k = bi.expr.scaled(bj.vec[0]) - bj.expr.scaled(bi.vec[0]);
            if (!k.is_zero()) syz.push_back(std::move(k));
            settled.insert({pr.i, pr.j});
            continue;
        }

        // chain criterion
        bool dropped = false;
        for (int k = 0; k < static_cast<int>(basis.elems.size()) && !dropped; ++k) {
            if (k == pr.i || k == pr.j) continue;
            const ModTerm& lk = basis.elems[k].lt;
            if (lk.pos != bi.lt.pos || !divides(lk.mono, pr.lcm)) continue;
            auto key = [&](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (settled.count(key(pr.i, k)) && settled.count(key(k, pr.j))) dropped = true;
        }
        if (dropped) {
            settled.insert({pr.i, pr.j});
            chain_dropped.push_back(pr);
            continue;
        }

        Monomial ui = mono_div(pr.lcm, bi.lt.mono);
        Monomial uj = mono_div(pr.lcm, bj.lt.mono);
        Scalar one = Scalar::one(ring->field);
        RingVector sv = bi.vec.term_multiplied(ui, one) - bj.vec.term_multiplied(uj, one);
        RingVector sx = bi.expr.term_multiplied(ui, one) - bj.expr.term_multiplied(uj, one);
        FullReduction red = reduce_full_tracked(std::move(sv), std::move(sx), basis, false);
        settled.insert({pr.i, pr.j});
        if (red.remainder.is_zero()) {
            if (!red.expr.is_zero()) syz.push_back(std::move(red.expr));
        } else {
            append_element(std::move(red.remainder), std::move(red.expr));
        }
    }

    // The tau-syzygies of chain-dropped pairs are recovered against the
    // completed basis so the collected candidates generate the full syzygy
    // module, not just the processed-pair part.
    for (const Pair& pr : chain_dropped) {
        const GBElement& bi = basis.elems[pr.i];
        const GBElement& bj = basis.elems[pr.j];
        Scalar one = Scalar::one(ring->field);
        RingVector sv = bi.vec.term_multiplied(mono_div(pr.lcm, bi.lt.mono), one) -
                        bj.vec.term_multiplied(mono_div(pr.lcm, bj.lt.mono), one);
        RingVector sx = bi.expr.term_multiplied(mono_div(pr.lcm, bi.lt.mono), one) -
                        bj.expr.term_multiplied(mono_div(pr.lcm, bj.lt.mono), one);
        FullReduction red = reduce_full_tracked(std::move(sv), std::move(sx), basis, false);
        if (!red.remainder.is_zero()) throw error("internal: chain-dropped pair does not reduce to zero");
        if (!red.expr.is_zero()) syz.push_back(std::move(red.expr));
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<GBElement> kept;
    for (int k = 0; k < static_cast<int>(basis.elems.size()); ++k) {
        bool redundant = false;
        auto covered_by = [&](const GBElement& other, int idx) {
            if (!divides(other.lt, basis.elems[k].lt)) return false;
            return other.lt.mono != basis.elems[k].lt.mono || idx < k;
        };
        for (int j = 0; j < static_cast<int>(kept.size()) && !redundant; ++j)
            if (covered_by(kept[j], -1)) redundant = true;
        for (int j = k + 1; j < static_cast<int>(basis.elems.size()) && !redundant; ++j)
            if (basis.elems[j].lt.pos == basis.elems[k].lt.pos && covered_by(basis.elems[j], j)) redundant = true;
        if (redundant) {
            // reduces to zero against the rest; its expression is a syzygy
            WorkBasis rest;
            rest.ord = &ord;
            for (int j = 0; j < static_cast<int>(basis.elems.size()); ++j)
                if (j != k) rest.elems.push_back(basis.elems[j]);
            FullReduction red = reduce_full_tracked(basis.elems[k].vec, basis.elems[k].expr, rest, false);
            if (!red.remainder.is_zero())
                throw error("internal: redundant basis element did not reduce to zero");
            if (!red.expr.is_zero()) syz.push_back(std::move(red.expr));
        } else {
            kept.push_back(basis.elems[k]);
        }
    }
    basis.elems = std::move(kept);

    // tail-reduce each element against the others
    for (int k = 0; k < static_cast<int>(basis.elems.size()); ++k) {
        FullReduction red = reduce_full_tracked(basis.elems[k].vec, basis.elems[k].expr, basis, false, k);
        basis.elems[k].vec = std::move(red.remainder);
        basis.elems[k].expr = std::move(red.expr);
    }

    std::sort(basis.elems.begin(), basis.elems.end(),
              [&](const GBElement& a, const GBElement& b) { return ord.cmp(a.lt, b.lt) > 0; });

    return BuchbergerResult{std::move(basis.elems), std::move(syz)};
}

// ---------------------------------------------------------------------------

GroebnerBasis::GroebnerBasis(RingPtr ring, int ambient_rank, int ngens, ModuleOrder order,
                             std::vector<GBElement> elems)
    : ring_(std::move(ring)), ambient_rank_(ambient_rank), ngens_(ngens), order_(std::move(order)),
      elems_(std::move(elems)) {}

GroebnerBasis groebner_basis(const Submodule& m, const ModuleOrder& ord) {
    BuchbergerResult res = buchberger(m.ring(), m.rank(), m.generators().columns(), ord);
    return GroebnerBasis(m.ring(), m.rank(), m.ngens(), ord, std::move(res.basis));
}

RingVector normal_form(const RingVector& v, const GroebnerBasis& gb) {
    if (v.length() != gb.ambient_rank()) throw shape_error("normal form: ambient rank mismatch");
    WorkBasis basis{gb.elements(), &gb.order()};
    RingVector dummy(v.ring(), gb.ngens());
    return reduce_full_tracked(v, dummy, basis, false).remainder;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    RingVector v(p.ring(), std::vector<Polynomial>{p});
    return normal_form(v, gb)[0];
}

// ---------------------------------------------------------------------------

Submodule::Submodule(RingPtr ring, int rank, RingMatrix gens) : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
    if (gens_.rows() != rank_) throw shape_error("generator matrix rows must equal ambient rank");
}

Submodule::Submodule(const Submodule& o) : ring_(o.ring_), rank_(o.rank_), gens_(o.gens_) {}

Submodule& Submodule::operator=(const Submodule& o) {
    if (this != &o) {
        ring_ = o.ring_;
        rank_ = o.rank_;
        gens_ = o.gens_;
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.clear();
    }
    return *this;
}

Submodule::Submodule(Submodule&& o) noexcept : ring_(std::move(o.ring_)), rank_(o.rank_), gens_(std::move(o.gens_)) {}

Submodule& Submodule::operator=(Submodule&& o) noexcept {
    if (this != &o) {
        ring_ = std::move(o.ring_);
        rank_ = o.rank_;
        gens_ = std::move(o.gens_);
        std::lock_guard<std::mutex> lock(cache_mutex_);
        cache_.clear();
    }
    return *this;
}

Submodule Submodule::from_columns(RingPtr ring, int rank, const std::vector<RingVector>& cols) {
    return Submodule(ring, rank, RingMatrix::from_columns(ring, rank, cols));
}

Submodule Submodule::ideal(RingPtr ring, const std::vector<Polynomial>& gens) {
    std::vector<RingVector> cols;
    cols.reserve(gens.size());
    for (const auto& g : gens) cols.push_back(RingVector(ring, std::vector<Polynomial>{g}));
    return from_columns(ring, 1, cols);
}

Submodule Submodule::zero(RingPtr ring, int rank) { return Submodule(ring, rank, RingMatrix(ring, rank, 0)); }

Submodule Submodule::full(RingPtr ring, int rank) { return Submodule(ring, rank, RingMatrix::identity(ring, rank)); }

std::vector<Polynomial> Submodule::ideal_generators() const {
    if (rank_ != 1) throw shape_error("ideal_generators on a submodule of rank != 1");
    std::vector<Polynomial> out;
    out.reserve(ngens());
    for (int j = 0; j < ngens(); ++j) out.push_back(gens_.at(0, j));
    return out;
}

std::shared_ptr<const GroebnerBasis> Submodule::groebner(std::optional<ModuleOrder> ord) const {
    ModuleOrder o = ord ? *ord : ModuleOrder::top(ring_->order);
    std::string key = o.key();
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    auto gb = std::make_shared<GroebnerBasis>(groebner_basis(*this, o));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(std::move(key), gb);
    return it->second;
}

bool Submodule::contains(const RingVector& v) const {
    if (v.length() != rank_) throw shape_error("membership test: rank mismatch");
    return normal_form(v, *groebner()).is_zero();
}

bool Submodule::contains_poly(const Polynomial& p) const {
    return contains(RingVector(ring_, std::vector<Polynomial>{p}));
}

bool Submodule::contains(const Submodule& other) const {
    if (other.rank() != rank_) throw shape_error("containment test: rank mismatch");
    for (int j = 0; j < other.ngens(); ++j)
        if (!contains(other.generator(j))) return false;
    return true;
}

bool Submodule::equals(const Submodule& other) const { return contains(other) && other.contains(*this); }

bool Submodule::is_zero_module() const {
    for (int j = 0; j < ngens(); ++j)
        if (!generator(j).is_zero()) return false;
    return true;
}

std::string Submodule::str() const { return gens_.str(); }

// ---------------------------------------------------------------------------

LiftResult lift_against(const GroebnerBasis& gb, const RingVector& v) {
    if (v.length() != gb.ambient_rank()) throw shape_error("lift: ambient rank mismatch");
    WorkBasis basis{gb.elements(), &gb.order()};
    RingVector zero_expr(v.ring(), gb.ngens());
    FullReduction red = reduce_full_tracked(v, zero_expr, basis, true);
    LiftResult out;
    if (!red.remainder.is_zero()) {
        out.ok = false;
        out.witness = red.remainder;
        return out;
    }
    // v = sum_k quot_k * gb_k  and  gb_k = gens * expr_k
    RingVector coeffs(v.ring(), gb.ngens());
    for (int k = 0; k < gb.size(); ++k) {
        if (red.quotient[k].is_zero()) continue;
        coeffs = coeffs + gb.expression(k).scaled(red.quotient[k]);
    }
    out.ok = true;
    out.coefficients = std::move(coeffs);
    return out;
}

LiftResult lift(const RingVector& v, const Submodule& m) {
    if (v.length() != m.rank()) throw shape_error("lift: ambient rank mismatch");
    return lift_against(*m.groebner(), v);
}

RingMatrix lift_matrix(const RingMatrix& cols, const Submodule& m) {
    RingMatrix out(cols.ring(), m.ngens(), cols.cols());
    for (int j = 0; j < cols.cols(); ++j) {
        LiftResult r = lift(cols.column(j), m);
        if (!r.ok)
            throw precondition_error("lift_matrix: column " + std::to_string(j) + " is not in the submodule");
        for (int i = 0; i < m.ngens(); ++i) out.at(i, j) = r.coefficients[i];
    }
    return out;
}

Submodule syzygies(const Submodule& m) {
    const RingPtr& ring = m.ring();
    int s = m.ngens();
    ModuleOrder top = ModuleOrder::top(ring->order);
    std::vector<RingVector> gens = m.generators().columns();

    BuchbergerResult res = buchberger(ring, m.rank(), gens, top);
    std::vector<RingVector> cands = std::move(res.syzygy_candidates);

    // columns of I - P*Q: redundancy relations of the input generators
    WorkBasis basis{res.basis, &top};
    for (int i = 0; i < s; ++i) {
        if (gens[i].is_zero()) continue;  // already covered by the unit syzygy
        RingVector zero_expr(ring, s);
        FullReduction red = reduce_full_tracked(gens[i], zero_expr, basis, false);
        if (!red.remainder.is_zero()) throw error("internal: generator not in its own module");
        RingVector cand = RingVector::unit(ring, s, i) + red.expr;
        if (!cand.is_zero()) cands.push_back(std::move(cand));
    }

    // inter-reduce the candidate set under the induced Schreyer order
    std::vector<ModTerm> leads;
    leads.reserve(s);
    for (int i = 0; i < s; ++i) {
        if (gens[i].is_zero()) {
            leads.push_back(ModTerm{Monomial(ring->nvars(), 0), 0});
        } else {
            leads.push_back(leading_term(gens[i], top));
        }
    }
    ModuleOrder schreyer = ModuleOrder::schreyer(std::make_shared<ModuleOrder>(top), std::move(leads));
    BuchbergerResult reduced = buchberger(ring, s, cands, schreyer);

    std::vector<RingVector> out;
    out.reserve(reduced.basis.size());
    for (auto& e : reduced.basis) out.push_back(std::move(e.vec));
    return Submodule::from_columns(ring, s, out);
}

// ---------------------------------------------------------------------------
// ring extension with an auxiliary elimination variable

namespace {

RingPtr extended_ring(const RingPtr& ring) {
    std::vector<std::string> vars;
    vars.reserve(ring->vars.size() + 1);
    vars.push_back("@t");
    for (const auto& v : ring->vars) vars.push_back(v);
    return Ring::make(ring->field, std::move(vars), MonoOrder::elim(1));
}

Polynomial promote(const RingPtr& ext, const Polynomial& p) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m;
        m.reserve(t.mono.size() + 1);
        m.push_back(0);
        m.insert(m.end(), t.mono.begin(), t.mono.end());
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial(ext, std::move(terms));
}

bool involves_t(const Polynomial& p) {
    for (const auto& t : p.terms())
        if (t.mono[0] != 0) return true;
    return false;
}

Polynomial restrict_poly(const RingPtr& ring, const Polynomial& p) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m(t.mono.begin() + 1, t.mono.end());
        terms.push_back({std::move(m), t.coeff});
    }
    return Polynomial(ring, std::move(terms));
}

}  // namespace

Submodule intersect(const Submodule& m, const Submodule& n) {
    check_same_ring(m.ring(), n.ring());
    if (m.rank() != n.rank()) throw shape_error("intersection: ambient rank mismatch");
    const RingPtr& ring = m.ring();
    int r = m.rank();
    RingPtr ext = extended_ring(ring);
    Polynomial t = Polynomial::variable(ext, 0);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    std::vector<RingVector> gens;
    auto push_scaled = [&](const Submodule& src, const Polynomial& factor) {
        for (int j = 0; j < src.ngens(); ++j) {
            std::vector<Polynomial> comps;
            comps.reserve(r);
            for (int i = 0; i < r; ++i) comps.push_back(promote(ext, src.generators().at(i, j)) * factor);
            gens.push_back(RingVector(ext, std::move(comps)));
        }
    };
    push_scaled(m, t);
    push_scaled(n, one_minus_t);

    BuchbergerResult res = buchberger(ext, r, gens, ModuleOrder::top(ext->order));
    std::vector<RingVector> out;
    for (const auto& e : res.basis) {
        bool has_t = false;
        for (int i = 0; i < r && !has_t; ++i) has_t = involves_t(e.vec[i]);
        if (has_t) continue;
        std::vector<Polynomial> comps;
        comps.reserve(r);
        for (int i = 0; i < r; ++i) comps.push_back(restrict_poly(ring, e.vec[i]));
        out.push_back(RingVector(ring, std::move(comps)));
    }
    return Submodule::from_columns(ring, r, out);
}

Submodule kernel_mod(const RingMatrix& M, const Submodule& N) {
    check_same_ring(M.ring(), N.ring());
    if (M.rows() != N.rank()) throw shape_error("kernel_mod: target rank mismatch");
    const RingPtr& ring = M.ring();
    int a = M.cols();
    RingMatrix combined = RingMatrix::concat_columns(M, N.generators());
    Submodule big(ring, M.rows(), combined);
    Submodule syz = syzygies(big);
    std::vector<RingVector> out;
    for (int j = 0; j < syz.ngens(); ++j) {
        RingVector full = syz.generator(j);
        std::vector<Polynomial> head;
        head.reserve(a);
        for (int i = 0; i < a; ++i) head.push_back(full[i]);
        RingVector h(ring, std::move(head));
        if (!h.is_zero()) out.push_back(std::move(h));
    }
    return Submodule::from_columns(ring, a, out);
}

Submodule module_sum(const Submodule& a, const Submodule& b) {
    check_same_ring(a.ring(), b.ring());
    if (a.rank() != b.rank()) throw shape_error("module sum: ambient rank mismatch");
    return Submodule(a.ring(), a.rank(), RingMatrix::concat_columns(a.generators(), b.generators()));
}

Submodule ideal_times_free(const Submodule& I, int rank) {
    if (I.rank() != 1) throw shape_error("ideal_times_free expects an ideal");
    const RingPtr& ring = I.ring();
    std::vector<RingVector> cols;
    cols.reserve(static_cast<size_t>(rank) * I.ngens());
    for (int pos = 0; pos < rank; ++pos) {
        for (int j = 0; j < I.ngens(); ++j) {
            RingVector v(ring, rank);
            v[pos] = I.generators().at(0, j);
            cols.push_back(std::move(v));
        }
    }
    return Submodule::from_columns(ring, rank, cols);
}

Submodule quotient(const Submodule& m, const Submodule& n) {
    check_same_ring(m.ring(), n.ring());
    if (m.rank() != n.rank()) throw shape_error("quotient: ambient rank mismatch");
    const RingPtr& ring = m.ring();
    int r = m.rank();
    int s = n.ngens();
    if (s == 0) return Submodule::ideal(ring, {Polynomial::constant(ring, 1)});

    // a * n_j in M for all j  <=>  a is in ker(O -> (O^r/M)^s)
    RingMatrix stacked(ring, r * s, 1);
    for (int j = 0; j < s; ++j)
        for (int i = 0; i < r; ++i) stacked.at(j * r + i, 0) = n.generators().at(i, j);
    std::vector<RingVector> target;
    for (int j = 0; j < s; ++j) {
        for (int g = 0; g < m.ngens(); ++g) {
            RingVector v(ring, r * s);
            for (int i = 0; i < r; ++i) v[j * r + i] = m.generators().at(i, g);
            target.push_back(std::move(v));
        }
    }
    Submodule N = Submodule::from_columns(ring, r * s, target);
    return kernel_mod(stacked, N);
}

Submodule colon_functionals(const Submodule& I, const Submodule& J) {
    check_same_ring(I.ring(), J.ring());
    if (I.rank() != 1) throw shape_error("colon_functionals: I must be an ideal");
    const RingPtr& ring = I.ring();
    int r = J.rank();
    int s = J.ngens();
    if (s == 0) return Submodule::full(ring, r);
    RingMatrix M = J.generators().transpose();  // s x r: g -> (g . v_j)_j
    return kernel_mod(M, ideal_times_free(I, s));
}

Submodule annihilator(const Submodule& relations) {
    const RingPtr& ring = relations.ring();
    int r = relations.rank();
    if (r == 0) return Submodule::ideal(ring, {Polynomial::constant(ring, 1)});
    // a * e_i in J for all i  <=>  a in ker(O -> (O^r/J)^r)
    RingMatrix stacked(ring, r * r, 1);
    for (int i = 0; i < r; ++i) stacked.at(i * r + i, 0) = Polynomial::constant(ring, 1);
    std::vector<RingVector> target;
    for (int blk = 0; blk < r; ++blk) {
        for (int g = 0; g < relations.ngens(); ++g) {
            RingVector v(ring, r * r);
            for (int i = 0; i < r; ++i) v[blk * r + i] = relations.generators().at(i, g);
            target.push_back(std::move(v));
        }
    }
    Submodule N = Submodule::from_columns(ring, r * r, target);
    return kernel_mod(stacked, N);
}

DimensionResult dimension(const Submodule& ideal) {
    if (ideal.rank() != 1) throw shape_error("dimension expects an ideal");
    auto gb = ideal.groebner();
    int n = ideal.ring()->nvars();
    std::vector<Monomial> lts;
    for (const auto& e : gb->elements()) {
        if (total_degree(e.lt.mono) == 0) return DimensionResult{-1, true};
        lts.push_back(e.lt.mono);
    }
    // max cardinality S with no leading monomial supported inside S
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& m : lts) {
            bool inside = true;
            for (int v = 0; v < n && inside; ++v)
                if (m[v] > 0 && !(mask & (1u << v))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return DimensionResult{best, false};
}

int codimension(const Submodule& ideal) {
    DimensionResult d = dimension(ideal);
    int n = ideal.ring()->nvars();
    if (d.unit_ideal) return n + 1;
    return n - d.dimension;
}

int module_codimension(const Submodule& relations) { return codimension(annihilator(relations)); }

bool buchberger_criterion_holds(const GroebnerBasis& gb) {
    WorkBasis basis{gb.elements(), &gb.order()};
    const auto& e = gb.elements();
    for (size_t i = 0; i < e.size(); ++i) {
        for (size_t j = i + 1; j < e.size(); ++j) {
            if (e[i].lt.pos != e[j].lt.pos) continue;
            Monomial l = mono_lcm(e[i].lt.mono, e[j].lt.mono);
            Scalar one = Scalar::one(gb.ring()->field);
            RingVector sv = e[i].vec.term_multiplied(mono_div(l, e[i].lt.mono), one) -
                            e[j].vec.term_multiplied(mono_div(l, e[j].lt.mono), one);
            RingVector dummy(sv.ring(), gb.ngens());
            if (!reduce_full_tracked(sv, dummy, basis, false).remainder.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace ccalg
