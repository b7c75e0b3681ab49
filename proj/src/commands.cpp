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

#include "ccalg/commands.hpp"

#include <chrono>

#include "ccalg/duality.hpp"
#include "ccalg/errors.hpp"
#include "ccalg/oracle.hpp"

namespace ccalg::cli {

namespace {

Json json_vector(const RingVector& v) {
    Json a = Json::array();
    for (int i = 0; i < v.length(); ++i) a.push_back(v[i].str());
    return a;
}

Json json_matrix(const RingMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_submodule(const Submodule& m) {
    if (m.rank() == 1) {
        Json a = Json::array();
        for (const auto& g : m.ideal_generators()) a.push_back(g.str());
        return a;
    }
    Json cols = Json::array();
    for (int j = 0; j < m.ngens(); ++j) cols.push_back(json_vector(m.generator(j)));
    return cols;
}

Json json_codim(const std::optional<int>& c) {
    if (!c) return nullptr;  // zero module: infinite codimension
    return *c;
}

Json json_codim_rows(const std::vector<CodimRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["ell"] = r.ell;
        row["codim"] = json_codim(r.codim);
        row["required"] = r.required;
        row["ok"] = r.ok;
        out.push_back(std::move(row));
    }
    return out;
}

struct ReportBuilder {
    Json report;
    bool theorem_failure = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    ReportBuilder(const std::string& command, const Session& sess, std::uint64_t seed) {
        report["command"] = command;
        Json ring;
        ring["field"] = sess.ring->field.str();
        ring["vars"] = sess.ring->vars;
        report["ring"] = std::move(ring);
        report["inputs"] = Json::object();
        report["seed"] = seed;
        report["certified"] = true;
        report["result"] = Json::object();
        report["witnesses"] = Json::object();
        report["verdicts"] = Json::object();
    }

    void input(const std::string& name, Json value) { report["inputs"][name] = std::move(value); }

    void certify(const Submodule& m, const RingPtr& /*ring*/) {
        if (!generators_certified_local(m)) {
            report["certified"] = false;
            report["certified_note"] =
                "input has non-homogeneous generators; statements about the local ring at the origin "
                "are unverified for this input";
        }
    }

    void verdict(const std::string& name, bool pass) {
        report["verdicts"][name] = pass;
        if (!pass) theorem_failure = true;
    }

    RunResult finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        Json t;
        t["total"] = static_cast<long>(ms.count());
        report["timings_ms"] = std::move(t);
        return RunResult{std::move(report), theorem_failure ? 1 : 0};
    }
};

int require_int(const std::vector<std::string>& args, size_t idx, const std::string& what) {
    if (idx >= args.size()) throw precondition_error("missing argument: " + what);
    try {
        return std::stoi(args[idx]);
    } catch (...) {
        throw precondition_error("argument '" + args[idx] + "' is not an integer (" + what + ")");
    }
}

const std::string& require_name(const std::vector<std::string>& args, size_t idx, const std::string& what) {
    if (idx >= args.size()) throw precondition_error("missing argument: " + what);
    return args[idx];
}

CompleteIntersection level_for(const Session& sess, const Submodule& J, int p, const CommandOptions& opts) {
    if (opts.fine_ci) {
        const Submodule& forced = sess.submodule(*opts.fine_ci);
        return make_complete_intersection(forced.ideal_generators());
    }
    return find_regular_sequence(annihilator(J), p, opts.seed);
}

// ---------------------------------------------------------------------------

RunResult cmd_resolve(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("resolve", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    rb.input(args[0], json_submodule(M));
    rb.certify(M, sess.ring);

    FreeComplex res = schreyer_resolution(M.generators(), sess.ring->nvars());
    bool minimized = false;
    if (opts.minimize) {
        MinimizeResult m = minimize(res);
        res = m.complex;
        minimized = m.minimized;
    }
    Json ranks = Json::array();
    for (int k = 0; k <= res.length(); ++k) ranks.push_back(res.rank(k));
    rb.report["result"]["ranks"] = std::move(ranks);
    Json diffs = Json::array();
    for (int k = 1; k <= res.length(); ++k) diffs.push_back(json_matrix(res.differential(k)));
    rb.report["result"]["differentials"] = std::move(diffs);
    rb.report["result"]["minimized"] = minimized;
    return rb.finish();
}

RunResult cmd_ext(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("ext", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int k = require_int(args, 1, "ext degree");
    rb.input(args[0], json_submodule(M));
    rb.input("k", k);
    rb.certify(M, sess.ring);

    ExtData ext = ext_module(M, k);
    rb.report["result"]["zero"] = ext.pres.is_zero_module();
    Json gens = Json::array();
    for (const auto& g : ext.pres.generators) gens.push_back(json_vector(g));
    rb.report["result"]["generators"] = std::move(gens);
    rb.report["result"]["relations"] = json_submodule(ext.pres.relations);
    std::optional<int> codim;
    if (!ext.pres.is_zero_module()) codim = module_codimension(ext.pres.relations);
    rb.report["result"]["codim"] = json_codim(codim);
    return rb.finish();
}

RunResult cmd_hull(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("hull", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.certify(M, sess.ring);

    Submodule hull = equidimensional_hull(M, p, opts.seed);
    rb.report["result"]["hull"] = json_submodule(hull);
    // choice independence: a second seed must give the same hull
    Submodule hull2 = equidimensional_hull(M, p, opts.seed + 1);
    rb.verdict("seed_independent", hull.equals(hull2));
    return rb.finish();
}

RunResult cmd_pair(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("pair", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.certify(M, sess.ring);

    CompleteIntersection I = level_for(sess, M, p, opts);
    Json ci = Json::array();
    for (const auto& f : I.gens) ci.push_back(f.str());
    rb.report["result"]["ci"] = std::move(ci);

    PairingMatrix pm = pairing_matrix(M, I);
    rb.report["result"]["ext_generators"] = pm.ext.pres.ngens();
    Json rows = Json::array();
    for (const auto& w : pm.rows) rows.push_back(json_vector(w));
    rb.report["result"]["rows"] = std::move(rows);

    if (opts.g_text) {
        RingVector g = parse_vector(sess.ring, *opts.g_text, M.rank());
        rb.input("g", json_vector(g));
        Json values = Json::array();
        auto gb = I.ideal.groebner();
        for (int j = 0; j < pm.ext.pres.ngens(); ++j) {
            CohClass c = pairing_eval(M, g, pm.ext.generator_class(j), I);
            values.push_back(c.value.str());
            // the matrix row must reproduce the direct evaluation
            Polynomial via = normal_form(dot(pm.rows[j], g), *gb);
            if (!(via == c.value)) rb.verdict("row_matches_eval", false);
        }
        rb.report["result"]["values"] = std::move(values);
        if (!rb.report["verdicts"].contains("row_matches_eval")) rb.verdict("row_matches_eval", true);
    }
    return rb.finish();
}

RunResult cmd_kernel(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("kernel", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.certify(M, sess.ring);

    CompleteIntersection I = level_for(sess, M, p, opts);
    Submodule kernel = pairing_left_kernel(M, I);
    Submodule hull = equidimensional_hull(M, p, opts.seed);
    rb.report["result"]["kernel"] = json_submodule(kernel);
    rb.report["result"]["hull"] = json_submodule(hull);
    rb.verdict("nondegenerate", kernel.equals(hull));

    // echo the oracle decomposition on monomial ideal input
    if (M.rank() == 1) {
        bool monomial = true;
        for (const auto& g : M.ideal_generators())
            if (!g.is_monomial()) monomial = false;
        if (monomial && M.ngens() > 0) {
            auto I0 = oracle::from_submodule(M);
            if (!I0.is_unit() && !I0.is_zero()) {
                Json comps = Json::array();
                for (const auto& c : oracle::mono_primary_decomposition(I0))
                    comps.push_back(json_submodule(oracle::to_submodule(sess.ring, c)));
                rb.report["result"]["oracle_components"] = std::move(comps);
                Submodule top = oracle::to_submodule(sess.ring, oracle::mono_top_part(I0, p));
                rb.verdict("kernel_matches_oracle", kernel.equals(top));
            }
        }
    }
    return rb.finish();
}

RunResult cmd_inject(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("inject", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.certify(M, sess.ring);

    CompleteIntersection I = level_for(sess, M, p, opts);
    InjectivityReport rep = right_injectivity_check(M, I);
    rb.verdict("right_injective", rep.injective);
    Json wit = Json::array();
    for (const auto& w : rep.kernel_witnesses) wit.push_back(json_vector(w));
    rb.report["witnesses"]["kernel_classes"] = std::move(wit);
    return rb.finish();
}

RunResult cmd_s2(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("s2", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    int k = opts.k.value_or(2);
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.input("k", k);
    rb.certify(M, sess.ring);

    SkReport rep = sk_test(M, p, k);
    rb.report["result"]["sk"] = rep.verdict;
    rb.report["result"]["table"] = json_codim_rows(rep.rows);
    return rb.finish();
}

RunResult cmd_purity(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("purity", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.certify(M, sess.ring);

    PurityReport rep = purity_test(M, p);
    rb.report["result"]["pure"] = rep.pure;
    rb.report["result"]["table"] = json_codim_rows(rep.rows);
    // cross-check: pure iff the hull adds nothing
    Submodule hull = equidimensional_hull(M, p, opts.seed);
    rb.verdict("matches_hull", rep.pure == hull.equals(M));
    return rb.finish();
}

RunResult cmd_roos(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("roos", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.certify(M, sess.ring);

    RoosReport rep = roos_map(M, p, opts.seed);
    rb.report["result"]["surjective"] = rep.surjective;
    rb.report["result"]["cokernel_length"] = rep.cokernel_length ? Json(*rep.cokernel_length) : Json(nullptr);
    rb.report["result"]["map"] = json_matrix(rep.map);
    rb.verdict("injective_on_hull_quotient", rep.injective);
    // surjective iff the hull quotient is S2
    SkReport s2 = sk_test(rep.hull, p, 2);
    rb.verdict("s2_consistency", rep.surjective == s2.verdict);
    return rb.finish();
}

RunResult cmd_transform(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("transform", sess, opts.seed);
    const Submodule& G = sess.submodule(require_name(args, 0, "generator ideal"));
    const RingMatrix& A = sess.matrix(require_name(args, 1, "matrix"));
    rb.input(args[0], json_submodule(G));
    rb.input(args[1], json_matrix(A));
    rb.certify(G, sess.ring);

    CompleteIntersection g = make_complete_intersection(G.ideal_generators());
    std::vector<Polynomial> fgens;
    for (int i = 0; i < A.rows(); ++i) {
        Polynomial fi(sess.ring);
        for (int j = 0; j < A.cols(); ++j) fi = fi + A.at(i, j) * g.gens[j];
        fgens.push_back(fi);
    }
    CompleteIntersection f = make_complete_intersection(fgens);
    Json fj = Json::array();
    for (const auto& ff : f.gens) fj.push_back(ff.str());
    rb.report["result"]["f"] = std::move(fj);

    TransformationReport rep = transformation_check(g, f, A);
    rb.report["result"]["det"] = rep.det_a.str();
    rb.verdict("wedge_chain_map", rep.chain_map_ok);
    rb.verdict("classes_transform_by_det", rep.classes_ok);
    return rb.finish();
}

RunResult cmd_check(const Session& sess, const std::vector<std::string>& args, const CommandOptions& opts) {
    ReportBuilder rb("check", sess, opts.seed);
    const Submodule& M = sess.submodule(require_name(args, 0, "module name"));
    int p = require_int(args, 1, "codimension");
    rb.input(args[0], json_submodule(M));
    rb.input("p", p);
    rb.certify(M, sess.ring);
    int n = sess.ring->nvars();

    // hull, twice, and the pairing left kernel
    Submodule hull = equidimensional_hull(M, p, opts.seed);
    rb.verdict("hull_seed_independent", hull.equals(equidimensional_hull(M, p, opts.seed + 1)));
    CompleteIntersection I = level_for(sess, M, p, opts);
    Submodule kernel = pairing_left_kernel(M, I);
    rb.verdict("left_kernel_equals_hull", kernel.equals(hull));
    rb.report["result"]["hull"] = json_submodule(hull);

    if (M.rank() == 1 && M.ngens() > 0) {
        bool monomial = true;
        for (const auto& g : M.ideal_generators())
            if (!g.is_monomial()) monomial = false;
        if (monomial) {
            auto I0 = oracle::from_submodule(M);
            if (!I0.is_unit() && !I0.is_zero())
                rb.verdict("hull_matches_oracle",
                           hull.equals(oracle::to_submodule(sess.ring, oracle::mono_top_part(I0, p))));
        }
    }

    rb.verdict("right_injective", right_injectivity_check(M, I).injective);

    // Ext^p(G, O): pure of codimension p, S2, and higher Ext codimensions
    ExtData ext = ext_module(M, p);
    if (!ext.pres.is_zero_module()) {
        Submodule relX = ext.pres.relations;
        rb.verdict("ext_pure", purity_test(relX, p).pure);
        rb.verdict("ext_is_s2", sk_test(relX, p, 2).verdict);
        bool kp_ok = true;
        ExtTower tower = ext_tower(relX, p + 1, n);
        Json table = Json::array();
        for (int kdeg = p + 1; kdeg <= n; ++kdeg) {
            const auto& pres = tower.levels[kdeg - (p + 1)];
            std::optional<int> c;
            if (!pres.is_zero_module()) c = module_codimension(pres.relations);
            bool ok = !c || *c >= kdeg + 2;
            kp_ok = kp_ok && ok;
            Json row;
            row["ell"] = kdeg;
            row["codim"] = json_codim(c);
            row["required"] = kdeg + 2;
            row["ok"] = ok;
            table.push_back(std::move(row));
        }
        rb.verdict("ext_of_ext_codim", kp_ok);
        rb.report["result"]["ext_of_ext_table"] = std::move(table);

        // pairing well-definedness spot check: a second lift and a second level
        RingVector g0 = RingVector::unit(sess.ring, M.rank(), 0);
        ExtClass xi = ext.generator_class(0);
        CohClass base = pairing_eval(M, g0, xi, I);
        CohClass lifted = pairing_eval(M, g0, xi, I, opts.seed + 17);
        bool well = base.value == lifted.value;
        CompleteIntersection I2 = find_regular_sequence(annihilator(M), p, opts.seed + 5);
        well = well && coh_classes_equal(base, pairing_eval(M, g0, xi, I2));
        rb.verdict("pairing_well_defined", well);
    }

    // Roos consistency
    RoosReport roos = roos_map(M, p, opts.seed);
    rb.verdict("roos_injective", roos.injective);
    rb.verdict("roos_s2_consistency", roos.surjective == sk_test(hull, p, 2).verdict);
    rb.report["result"]["roos_surjective"] = roos.surjective;
    return rb.finish();
}

}  // namespace

RunResult run_command(const std::string& command, const std::vector<std::string>& args, const Session& session,
                      const CommandOptions& opts) {
    try {
        if (command == "resolve") return cmd_resolve(session, args, opts);
        if (command == "ext") return cmd_ext(session, args, opts);
        if (command == "hull") return cmd_hull(session, args, opts);
        if (command == "pair") return cmd_pair(session, args, opts);
        if (command == "kernel") return cmd_kernel(session, args, opts);
        if (command == "inject") return cmd_inject(session, args, opts);
        if (command == "s2") return cmd_s2(session, args, opts);
        if (command == "purity") return cmd_purity(session, args, opts);
        if (command == "roos") return cmd_roos(session, args, opts);
        if (command == "transform") return cmd_transform(session, args, opts);
        if (command == "check") return cmd_check(session, args, opts);
        throw precondition_error("unknown command '" + command + "'");
    } catch (const parse_error& e) {
        Json err;
        err["command"] = command;
        err["error"] = std::string(e.what());
        err["kind"] = "parse";
        return RunResult{std::move(err), 2};
    } catch (const precondition_error& e) {
        Json err;
        err["command"] = command;
        err["error"] = std::string(e.what());
        err["kind"] = "precondition";
        return RunResult{std::move(err), 2};
    } catch (const shape_error& e) {
        Json err;
        err["command"] = command;
        err["error"] = std::string(e.what());
        err["kind"] = "shape";
        return RunResult{std::move(err), 2};
    } catch (const search_error& e) {
        Json err;
        err["command"] = command;
        err["error"] = std::string(e.what());
        err["kind"] = "search";
        return RunResult{std::move(err), 2};
    }
}

namespace {

void render(const Json& v, const std::string& indent, std::string& out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            out += indent + it.key() + ":";
            if (it.value().is_object() || it.value().is_array()) {
                out += "\n";
                render(it.value(), indent + "  ", out);
            } else {
                out += " " + it.value().dump() + "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                out += indent + "-\n";
                render(item, indent + "  ", out);
            } else {
                out += indent + "- " + item.dump() + "\n";
            }
        }
    } else {
        out += indent + v.dump() + "\n";
    }
}

}  // namespace

std::string report_to_text(const Json& report) {
    std::string out;
    render(report, "", out);
    return out;
}

}  // namespace ccalg::cli
