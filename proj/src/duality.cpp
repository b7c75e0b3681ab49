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

#include "ccalg/duality.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "ccalg/errors.hpp"

namespace ccalg {

namespace {

Submodule ideal_of(const CompleteIntersection& I) { return I.ideal; }

Polynomial nf_mod(const Polynomial& v, const CompleteIntersection& I) {
    return normal_form(v, *I.ideal.groebner());
}

}  // namespace

CompleteIntersection make_complete_intersection(std::vector<Polynomial> f) {
    if (f.empty()) throw precondition_error("complete intersection needs at least one generator");
    RingPtr ring = f[0].ring();
    for (size_t k = 0; k < f.size(); ++k) {
        check_same_ring(ring, f[k].ring());
        std::vector<Polynomial> prefix(f.begin(), f.begin() + k + 1);
        Submodule pre = Submodule::ideal(ring, prefix);
        int c = codimension(pre);
        if (c != static_cast<int>(k) + 1)
            throw precondition_error("prefix of length " + std::to_string(k + 1) +
                                     " has codimension " + std::to_string(c) + ", not a regular sequence");
    }
    CompleteIntersection ci;
    ci.p = static_cast<int>(f.size());
    ci.ideal = Submodule::ideal(ring, f);
    ci.gens = std::move(f);
    return ci;
}

// ---------------------------------------------------------------------------
// regular sequence search

namespace {

// Candidate coefficient vectors over the generators, enumerated level by
// level: level L covers support <= min(m, L+1) with max |coeff| == L (or any
// magnitude when the support bound grows). Deterministic; a nonzero seed
// permutes each level.
std::vector<std::vector<std::pair<int, int>>> candidate_level(int m, int L) {
    std::vector<std::vector<std::pair<int, int>>> out;  // list of (index, coeff)
    int max_support = std::min(m, L + 1);
    // nonzero coefficients ordered 1, -1, 2, -2, ...
    std::vector<int> vals;
    for (int a = 1; a <= L; ++a) {
        vals.push_back(a);
        vals.push_back(-a);
    }
    std::vector<int> idx;
    std::function<void(int, int)> rec_idx = [&](int start, int need) {
        if (need == 0) {
            int s = static_cast<int>(idx.size());
            std::vector<int> pick(s, 0);  // indices into vals, leftmost slowest
            while (true) {
                int maxabs = 0;
                for (int t = 0; t < s; ++t) maxabs = std::max(maxabs, std::abs(vals[pick[t]]));
                // classify to exactly one level: max |c| == L, or the support
                // size only became admissible at this level
                bool new_support = (s - 1) == L;
                if (maxabs == L || (new_support && maxabs <= L)) {
                    std::vector<std::pair<int, int>> cand;
                    for (int t = 0; t < s; ++t) cand.push_back({idx[t], vals[pick[t]]});
                    out.push_back(std::move(cand));
                }
                int t = s - 1;
                while (t >= 0 && pick[t] + 1 == static_cast<int>(vals.size())) pick[t--] = 0;
                if (t < 0) break;
                ++pick[t];
            }
            return;
        }
        for (int i = start; i <= m - need; ++i) {
            idx.push_back(i);
            rec_idx(i + 1, need - 1);
            idx.pop_back();
        }
    };
    for (int s = 1; s <= max_support; ++s) rec_idx(0, s);
    return out;
}

void seeded_permute(std::vector<std::vector<std::pair<int, int>>>& v, std::uint64_t seed) {
    if (seed == 0 || v.size() < 2) return;
    std::mt19937_64 rng(seed);
    for (size_t i = v.size() - 1; i > 0; --i) {
        size_t j = static_cast<size_t>(rng() % (i + 1));
        std::swap(v[i], v[j]);
    }
}

}  // namespace

CompleteIntersection find_regular_sequence(const Submodule& ideal, int p, std::uint64_t seed) {
    if (ideal.rank() != 1) throw shape_error("regular sequence search expects an ideal");
    const RingPtr& ring = ideal.ring();
    int have = codimension(ideal);
    if (have < p)
        throw precondition_error("ideal has codimension " + std::to_string(have) +
                                 " < requested sequence length " + std::to_string(p));

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.ideal_generators())
        if (!g.is_zero()) gens.push_back(g);
    int m = static_cast<int>(gens.size());

    std::vector<Polynomial> chosen;
    const int max_level = 8;
    for (int k = 1; k <= p; ++k) {
        bool found = false;
        for (int L = 1; L <= max_level && !found; ++L) {
            auto level = candidate_level(m, L);
            seeded_permute(level, seed == 0 ? 0 : seed + 1000003ull * static_cast<std::uint64_t>(L) + k);
            for (const auto& cand : level) {
                Polynomial f(ring);
                for (auto [i, c] : cand) f = f + gens[i].scaled(Scalar::of_int(ring->field, c));
                if (f.is_zero()) continue;
                std::vector<Polynomial> prefix = chosen;
                prefix.push_back(f);
                if (codimension(Submodule::ideal(ring, prefix)) == k) {
                    chosen.push_back(std::move(f));
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw search_error("regular sequence search exhausted box size " + std::to_string(max_level) +
                               " at position " + std::to_string(k) + " (seed " + std::to_string(seed) + ")");
    }
    CompleteIntersection ci;
    ci.p = p;
    ci.gens = chosen;
    ci.ideal = Submodule::ideal(ring, chosen);
    return ci;
}

// ---------------------------------------------------------------------------
// Ext modules

ExtClass ExtData::generator_class(int j) const {
    ExtClass c;
    c.resolution = resolution;
    c.degree = pres.degree;
    c.row = pres.generators.at(j);
    return c;
}

ExtData ext_module(const Submodule& relations, int k) {
    const RingPtr& ring = relations.ring();
    auto res = std::make_shared<FreeComplex>(schreyer_resolution(relations.generators(), ring->nvars()));
    ExtData out;
    out.resolution = res;
    if (k <= res->length()) {
        out.pres = homology_presentation(*res, k);
    } else {
        out.pres.ring = ring;
        out.pres.ambient_rank = 0;
        out.pres.degree = k;
        out.pres.relations = Submodule::zero(ring, 0);
        out.pres.image = Submodule::zero(ring, 0);
    }
    return out;
}

ExtTower ext_tower(const Submodule& relations, int lo, int hi) {
    const RingPtr& ring = relations.ring();
    auto res = std::make_shared<FreeComplex>(schreyer_resolution(relations.generators(), ring->nvars()));
    ExtTower t;
    t.resolution = res;
    t.lo = lo;
    for (int k = lo; k <= hi; ++k) {
        if (k <= res->length()) {
            t.levels.push_back(homology_presentation(*res, k));
        } else {
            SubquotientPresentation z;
            z.ring = ring;
            z.ambient_rank = 0;
            z.degree = k;
            z.relations = Submodule::zero(ring, 0);
            z.image = Submodule::zero(ring, 0);
            t.levels.push_back(std::move(z));
        }
    }
    return t;
}

namespace {

std::optional<int> presentation_codim(const SubquotientPresentation& pres) {
    if (pres.is_zero_module()) return std::nullopt;  // zero module, infinite codimension
    return module_codimension(pres.relations);
}

}  // namespace

ExtClass ci_ext_generator(const CompleteIntersection& I) {
    FreeComplex K = koszul(I.gens);
    auto res = std::make_shared<FreeComplex>(K);
    SubquotientPresentation pres = homology_presentation(K, I.p);
    const RingPtr& ring = K.ring();

    RingVector xi0 = RingVector::unit(ring, 1, 0);  // (e_1 ^ ... ^ e_p)^*

    // certify O/I -> Ext^p(O/I, O), 1 -> [xi0], as an isomorphism
    for (const auto& f : I.gens)
        if (!pres.class_is_zero(xi0.scaled(f))) throw error("internal: CI Ext map not well defined");
    RingMatrix xicol = RingMatrix::from_columns(ring, 1, {xi0});
    Submodule back = kernel_mod(xicol, pres.image);  // (im : xi0)
    for (int j = 0; j < back.ngens(); ++j)
        if (!I.ideal.contains(back.generator(j)))
            throw error("internal: CI Ext map has a kernel, O/I does not inject");
    Submodule span = module_sum(Submodule::from_columns(ring, 1, {xi0}), pres.image);
    for (const auto& g : pres.generators)
        if (!span.contains(g)) throw error("internal: CI Ext generator not reached by O/I");

    ExtClass cls;
    cls.resolution = res;
    cls.degree = I.p;
    cls.row = xi0;
    return cls;
}

// ---------------------------------------------------------------------------
// CohClass machinery

CohClass ci_level_map(const CohClass& c, const CompleteIntersection& fine) {
    if (fine.p != c.level.p) throw precondition_error("level refinement must keep the codimension");
    for (const auto& f : fine.gens)
        if (!c.level.ideal.contains_poly(f))
            throw precondition_error("refinement level is not contained in the class level");
    const RingPtr& ring = c.value.ring();
    // A with f_fine = A f, found column by column
    int p = fine.p;
    RingMatrix A(ring, p, p);
    for (int i = 0; i < p; ++i) {
        LiftResult lr = lift(RingVector(ring, std::vector<Polynomial>{fine.gens[i]}), c.level.ideal);
        if (!lr.ok) throw error("internal: refinement generator failed to lift");
        for (int j = 0; j < p; ++j) A.at(i, j) = lr.coefficients[j];
    }
    Polynomial d = det(A);
    CohClass out;
    out.level = fine;
    out.value = nf_mod(c.value * d, fine);
    return out;
}

bool coh_classes_equal(const CohClass& a, const CohClass& b, std::uint64_t seed) {
    if (a.level.p != b.level.p) return false;
    if (a.level.ideal.equals(b.level.ideal)) {
        // same level: compare normal forms at one of them
        Polynomial diff = nf_mod(a.value - b.value, a.level);
        return diff.is_zero();
    }
    Submodule common = intersect(a.level.ideal, b.level.ideal);
    CompleteIntersection fine = find_regular_sequence(common, a.level.p, seed);
    CohClass ra = ci_level_map(a, fine);
    CohClass rb = ci_level_map(b, fine);
    return nf_mod(ra.value - rb.value, fine).is_zero();
}

// ---------------------------------------------------------------------------
// the pairing

namespace {

void check_level_annihilates(const Submodule& J, const CompleteIntersection& I) {
    const RingPtr& ring = J.ring();
    for (int l = 0; l < J.rank(); ++l) {
        RingVector e = RingVector::unit(ring, J.rank(), l);
        for (const auto& f : I.gens) {
            if (!J.contains(e.scaled(f)))
                throw precondition_error("complete intersection is not contained in the annihilator");
        }
    }
}

}  // namespace

CohClass pairing_eval(const Submodule& J, const RingVector& g, const ExtClass& xi,
                      const CompleteIntersection& I, std::uint64_t lift_seed) {
    const RingPtr& ring = J.ring();
    if (g.length() != J.rank()) throw shape_error("pairing: vector length does not match the module");
    check_level_annihilates(J, I);
    const FreeComplex& E = *xi.resolution;
    int p = xi.degree;
    if (p != I.p) throw precondition_error("pairing: class degree and level codimension differ");
    if (xi.row.length() != E.rank(p)) throw shape_error("pairing: class row does not match the resolution");
    {
        RingMatrix dualnext = E.differential_or_zero(p + 1).transpose();
        if (!(dualnext * xi.row).is_zero()) throw precondition_error("pairing: class is not a cocycle");
    }

    FreeComplex K = koszul(I.gens);
    RingMatrix eps(ring, J.rank(), 1);
    for (int i = 0; i < J.rank(); ++i) eps.at(i, 0) = g[i];
    ChainMap c = lift_chain_map(eps, K, E, lift_seed);
    const RingMatrix& cp = c.map(p);
    Polynomial value(ring);
    for (int i = 0; i < cp.rows(); ++i) value = value + xi.row[i] * cp.at(i, 0);
    CohClass out;
    out.level = I;
    out.value = nf_mod(value, I);
    return out;
}

namespace {

PairingMatrix pairing_matrix_with(ExtData ext, const Submodule& J, const CompleteIntersection& I) {
    const RingPtr& ring = J.ring();
    check_level_annihilates(J, I);
    int r = J.rank();
    int p = I.p;
    PairingMatrix out;
    out.ext = std::move(ext);
    out.level = I;
    if (out.ext.pres.is_zero_module()) return out;

    FreeComplex K = koszul(I.gens).direct_sum_power(r);
    ChainMap a = lift_chain_map(RingMatrix::identity(ring, r), K, *out.ext.resolution);
    const RingMatrix& ap = a.map(p);  // K_p has rank r (one top wedge per copy)
    for (int j = 0; j < out.ext.pres.ngens(); ++j) {
        const RingVector& xi = out.ext.pres.generators[j];
        std::vector<Polynomial> w(r, Polynomial(ring));
        for (int l = 0; l < r; ++l) {
            Polynomial acc(ring);
            for (int i = 0; i < ap.rows(); ++i) acc = acc + xi[i] * ap.at(i, l);
            w[l] = normal_form(acc, *I.ideal.groebner());
        }
        out.rows.push_back(RingVector(ring, std::move(w)));
    }
    return out;
}

}  // namespace

PairingMatrix pairing_matrix(const Submodule& J, const CompleteIntersection& I) {
    return pairing_matrix_with(ext_module(J, I.p), J, I);
}

Submodule pairing_left_kernel(const Submodule& J, const CompleteIntersection& I) {
    PairingMatrix pm = pairing_matrix(J, I);
    const RingPtr& ring = J.ring();
    int r = J.rank();
    int q = static_cast<int>(pm.rows.size());
    if (q == 0) return Submodule::full(ring, r);
    RingMatrix W = RingMatrix::from_rows(ring, r, pm.rows);
    return kernel_mod(W, ideal_times_free(ideal_of(I), q));
}

Submodule equidimensional_hull(const Submodule& J, int p, std::uint64_t seed) {
    const RingPtr& ring = J.ring();
    Submodule ann = annihilator(J);
    int cod = codimension(ann);
    if (cod == ring->nvars() + 1) {
        // zero module; hull is the full ambient module
        return Submodule::full(ring, J.rank());
    }
    if (cod != p)
        throw precondition_error("module has codimension " + std::to_string(cod) + ", expected " +
                                 std::to_string(p));
    CompleteIntersection I = find_regular_sequence(ann, p, seed);
    Submodule Q = colon_functionals(I.ideal, J);
    int q = Q.ngens();
    if (q == 0) return Submodule::full(ring, J.rank());
    RingMatrix W = Q.generators().transpose();  // rows are the functionals
    return kernel_mod(W, ideal_times_free(I.ideal, q));
}

InjectivityReport right_injectivity_check(const Submodule& J, const CompleteIntersection& I) {
    const RingPtr& ring = J.ring();
    check_level_annihilates(J, I);
    int r = J.rank();
    int p = I.p;
    InjectivityReport out;
    ExtData ext = ext_module(J, p);
    if (ext.pres.is_zero_module()) {
        out.injective = true;
        return out;
    }
    FreeComplex K = koszul(I.gens).direct_sum_power(r);
    ChainMap a = lift_chain_map(RingMatrix::identity(ring, r), K, *ext.resolution);
    const RingMatrix& ap = a.map(p);

    int m = ext.pres.ngens();
    RingMatrix mapped(ring, r, m);  // alpha^* xi_j in Hom(K_p, O)
    for (int j = 0; j < m; ++j)
        for (int l = 0; l < r; ++l) {
            Polynomial acc(ring);
            for (int i = 0; i < ap.rows(); ++i) acc = acc + ext.pres.generators[j][i] * ap.at(i, l);
            mapped.at(l, j) = acc;
        }
    // relations of Ext^p((O/I)^r, O) inside Hom(K_p, O): the image of psi_p^*
    Submodule target_rel(ring, r, K.differential(p).transpose());
    Submodule T = kernel_mod(mapped, target_rel);
    out.injective = true;
    RingMatrix genmat = ext.pres.generator_matrix();
    for (int j = 0; j < T.ngens(); ++j) {
        RingVector combo = genmat * T.generator(j);
        if (!ext.pres.class_is_zero(combo)) {
            out.injective = false;
            out.kernel_witnesses.push_back(combo);
        }
    }
    return out;
}

ExtMapData induced_ext_map(const RingMatrix& alpha, const Submodule& JF, const Submodule& JG, int p) {
    const RingPtr& ring = alpha.ring();
    check_same_ring(ring, JF.ring());
    check_same_ring(ring, JG.ring());
    if (alpha.rows() != JG.rank() || alpha.cols() != JF.rank())
        throw shape_error("induced_ext_map: alpha shape mismatch");
    // alpha must descend: alpha(JF) <= JG
    for (int j = 0; j < JF.ngens(); ++j) {
        RingVector img = alpha * JF.generator(j);
        if (!img.is_zero() && !JG.contains(img))
            throw precondition_error("alpha does not descend; failing column " + std::to_string(j));
    }
    ExtMapData out{ext_module(JG, p), ext_module(JF, p), RingMatrix(), ChainMap{}};
    out.chain = lift_chain_map(alpha, *out.target_ext.resolution, *out.source_ext.resolution);
    const RingMatrix& ap = out.chain.map(p);

    int msrc = out.source_ext.pres.ngens();
    int mtgt = out.target_ext.pres.ngens();
    out.matrix = RingMatrix(ring, mtgt, msrc);
    for (int j = 0; j < msrc; ++j) {
        const RingVector& xi = out.source_ext.pres.generators[j];
        std::vector<Polynomial> v(ap.cols(), Polynomial(ring));
        for (int l = 0; l < ap.cols(); ++l) {
            Polynomial acc(ring);
            for (int i = 0; i < ap.rows(); ++i) acc = acc + xi[i] * ap.at(i, l);
            v[l] = acc;
        }
        RingVector mappedrow(ring, std::move(v));
        if (mtgt == 0) continue;
        auto coeffs = out.target_ext.pres.express(mappedrow);
        if (!coeffs) throw error("internal: induced Ext class failed to express in the target presentation");
        for (int i = 0; i < mtgt; ++i) out.matrix.at(i, j) = (*coeffs)[i];
    }
    return out;
}

ExtClass transport_ext_class(const ExtClass& xi, const std::shared_ptr<const FreeComplex>& other) {
    const FreeComplex& E = *xi.resolution;
    const FreeComplex& F = *other;
    if (E.rank(0) != F.rank(0)) throw shape_error("transport between resolutions of different covers");
    ChainMap c = lift_chain_map(RingMatrix::identity(E.ring(), E.rank(0)), F, E);
    const RingMatrix& cp = c.map(xi.degree);
    ExtClass out;
    out.resolution = other;
    out.degree = xi.degree;
    std::vector<Polynomial> row(cp.cols(), Polynomial(E.ring()));
    for (int l = 0; l < cp.cols(); ++l) {
        Polynomial acc(E.ring());
        for (int i = 0; i < cp.rows(); ++i) acc = acc + xi.row[i] * cp.at(i, l);
        row[l] = acc;
    }
    out.row = RingVector(E.ring(), std::move(row));
    return out;
}

// ---------------------------------------------------------------------------
// S_k / purity / Roos

SkReport sk_test(const Submodule& J, int p, int k) {
    const RingPtr& ring = J.ring();
    int n = ring->nvars();
    SkReport rep;
    rep.p = p;
    rep.k = k;
    rep.verdict = true;
    if (p + 1 > n) return rep;  // vacuous
    ExtTower tower = ext_tower(J, p + 1, n);
    for (int ell = p + 1; ell <= n; ++ell) {
        const SubquotientPresentation& pres = tower.levels[ell - (p + 1)];
        CodimRow row;
        row.ell = ell;
        row.required = ell + k;
        row.codim = presentation_codim(pres);
        row.ok = !row.codim || *row.codim >= row.required;
        rep.verdict = rep.verdict && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

PurityReport purity_test(const Submodule& J, int p) {
    const RingPtr& ring = J.ring();
    int n = ring->nvars();
    int cod = module_codimension(J);
    if (cod != p)
        throw precondition_error("purity test expects codimension " + std::to_string(p) + ", found " +
                                 std::to_string(cod));
    PurityReport rep;
    rep.pure = true;
    if (p + 1 > n) return rep;
    ExtTower tower = ext_tower(J, p + 1, n);
    for (int ell = p + 1; ell <= n; ++ell) {
        const SubquotientPresentation& pres = tower.levels[ell - (p + 1)];
        CodimRow row;
        row.ell = ell;
        row.required = ell + 1;
        row.codim = presentation_codim(pres);
        row.ok = !row.codim || *row.codim >= row.required;
        rep.pure = rep.pure && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

std::optional<int> quotient_length(const Submodule& N) {
    const RingPtr& ring = N.ring();
    int n = ring->nvars();
    int q = N.rank();
    auto gb = N.groebner();
    // leading-term data per component
    std::vector<std::vector<Monomial>> lts(q);
    for (const auto& e : gb->elements()) lts[e.lt.pos].push_back(e.lt.mono);

    long total = 0;
    for (int pos = 0; pos < q; ++pos) {
        // finite in this component iff each variable has a pure power among
        // the leading terms
        std::vector<int> bound(n, -1);
        for (const auto& m : lts[pos]) {
            int support = 0, var = -1;
            for (int v = 0; v < n; ++v)
                if (m[v] > 0) {
                    ++support;
                    var = v;
                }
            if (support == 0) {
                bound.assign(n, 0);  // unit leading term: component quotient is zero
                break;
            }
            if (support == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
        }
        for (int v = 0; v < n; ++v)
            if (bound[v] < 0) return std::nullopt;  // infinite length

        // enumerate standard monomials inside the bounding box
        std::vector<int> exp(n, 0);
        while (true) {
            Monomial m(exp.begin(), exp.end());
            bool standard = true;
            for (const auto& l : lts[pos])
                if (divides(l, m)) {
                    standard = false;
                    break;
                }
            if (standard) ++total;
            int v = 0;
            while (v < n) {
                if (++exp[v] < bound[v]) break;
                exp[v++] = 0;
            }
            if (v == n) break;
        }
    }
    return static_cast<int>(total);
}

RoosReport roos_map(const Submodule& J, int p, std::uint64_t seed) {
    const RingPtr& ring = J.ring();
    int r = J.rank();
    int cod = module_codimension(J);
    if (cod < p) throw precondition_error("roos map requires codimension >= p");

    RoosReport rep;
    ExtData extG = ext_module(J, p);

    if (extG.pres.is_zero_module()) {
        // codim G > p, so G^(p) = 0 and both sides vanish
        rep.injective = true;
        rep.surjective = true;
        rep.kernel = Submodule::full(ring, r);
        rep.hull = Submodule::full(ring, r);
        rep.map = RingMatrix(ring, 0, r);
        rep.cokernel_length = 0;
        rep.double_ext = ext_module(Submodule::full(ring, 1), p);
        return rep;
    }

    rep.hull = equidimensional_hull(J, p, seed);
    Submodule ann = annihilator(J);
    CompleteIntersection I = find_regular_sequence(ann, p, seed);

    // pairing rows for G and for X = Ext^p(G, O)
    PairingMatrix W = pairing_matrix_with(extG, J, I);
    int m = W.ext.pres.ngens();
    Submodule relX = W.ext.pres.relations;
    PairingMatrix W2 = pairing_matrix_with(ext_module(relX, p), relX, I);
    rep.double_ext = W2.ext;
    int q = rep.double_ext.pres.ngens();

    // h_t = (<xi_j, zeta_t>)_j as columns of an m x q matrix over O
    RingMatrix H(ring, m, q);
    for (int t = 0; t < q; ++t)
        for (int j = 0; j < m; ++j) H.at(j, t) = W2.rows[t][j];

    // Roos image of each basis vector of O^r expressed over the zeta_t
    Submodule expressor = module_sum(Submodule(ring, m, H), ideal_times_free(I.ideal, m));
    rep.map = RingMatrix(ring, q, r);
    for (int l = 0; l < r; ++l) {
        std::vector<Polynomial> target(m, Polynomial(ring));
        for (int j = 0; j < m; ++j) target[j] = W.rows[j][l];
        LiftResult lr = lift(RingVector(ring, std::move(target)), expressor);
        if (!lr.ok) throw error("internal: Roos image failed to express over the double Ext generators");
        for (int t = 0; t < q; ++t) rep.map.at(t, l) = lr.coefficients[t];
    }

    // kernel of O^r -> double Ext classes
    if (q == 0) {
        rep.kernel = Submodule::full(ring, r);
    } else {
        RingMatrix composed = rep.double_ext.pres.generator_matrix() * rep.map;
        rep.kernel = kernel_mod(composed, rep.double_ext.pres.image);
    }
    rep.injective = rep.kernel.equals(rep.hull);

    // surjectivity and cokernel
    Submodule image_cols = module_sum(Submodule(ring, q, rep.map), rep.double_ext.pres.relations);
    rep.surjective = true;
    for (int t = 0; t < q && rep.surjective; ++t)
        rep.surjective = image_cols.contains(RingVector::unit(ring, q, t));
    rep.cokernel_length = quotient_length(image_cols);
    return rep;
}

// ---------------------------------------------------------------------------

TransformationReport transformation_check(const CompleteIntersection& g, const CompleteIntersection& f,
                                          const RingMatrix& A) {
    const RingPtr& ring = A.ring();
    int p = g.p;
    if (f.p != p) throw precondition_error("transformation: codimension mismatch");
    if (A.rows() != p || A.cols() != p) throw shape_error("transformation: A must be p x p");
    for (int i = 0; i < p; ++i) {
        Polynomial fi(ring);
        for (int j = 0; j < p; ++j) fi = fi + A.at(i, j) * g.gens[j];
        if (!(fi == f.gens[i])) throw precondition_error("transformation: f != A g at row " + std::to_string(i));
    }

    TransformationReport rep;
    rep.det_a = det(A);

    FreeComplex Kf = koszul(f.gens);
    FreeComplex Kg = koszul(g.gens);

    // wedge powers of A^T form the chain map Koszul(f) -> Koszul(g)
    rep.chain_map_ok = true;
    std::vector<RingMatrix> wedges;
    {
        std::function<std::vector<std::vector<int>>(int)> subsets = [&](int k) {
            std::vector<std::vector<int>> out;
            std::vector<int> cur;
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
        };
        for (int k = 0; k <= p; ++k) {
            auto sets = subsets(k);
            RingMatrix w(ring, static_cast<int>(sets.size()), static_cast<int>(sets.size()));
            for (size_t row = 0; row < sets.size(); ++row)
                for (size_t col = 0; col < sets.size(); ++col) w.at(static_cast<int>(row), static_cast<int>(col)) =
                    minor_det(A, sets[col], sets[row]);  // wedge of A^T
            wedges.push_back(std::move(w));
        }
    }
    for (int k = 1; k <= p; ++k) {
        RingMatrix lhs = Kg.differential(k) * wedges[k];
        RingMatrix rhs = wedges[k - 1] * Kf.differential(k);
        if (!(lhs - rhs).is_zero()) rep.chain_map_ok = false;
    }

    // classes: [1] at level g refines to [det A] at level f
    CohClass one_g{g, Polynomial::constant(ring, 1)};
    CohClass refined = ci_level_map(one_g, f);
    Polynomial expect = normal_form(rep.det_a, *f.ideal.groebner());
    rep.classes_ok = nf_mod(refined.value - expect, f).is_zero();

    // and the pairing evaluations themselves agree with the identity
    ExtClass xi_g = ci_ext_generator(g);
    ExtClass xi_f = ci_ext_generator(f);
    CohClass pg = pairing_eval(g.ideal, RingVector::unit(ring, 1, 0), xi_g, g);
    CohClass pf = pairing_eval(f.ideal, RingVector::unit(ring, 1, 0), xi_f, f);
    CohClass pg_at_f = ci_level_map(pg, f);
    Polynomial want = nf_mod(pf.value * rep.det_a, f);
    rep.classes_ok = rep.classes_ok && nf_mod(pg_at_f.value - want, f).is_zero();
    return rep;
}

bool generators_certified_local(const Submodule& m) {
    for (int j = 0; j < m.ngens(); ++j) {
        RingVector g = m.generator(j);
        for (const auto& c : g.components())
            if (!c.is_homogeneous()) return false;
    }
    return true;
}

}  // namespace ccalg
