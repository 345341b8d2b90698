// Command-line front end: exact group, form, curve and descent computations
// with JSON reports and stable exit codes.
//
// exit 0: affirmative result (definable, smooth, invariant, found)
// exit 1: negative result (obstructed, not smooth, not invariant, none found)
// exit 2: input or validation error
// exit 3: resource cap hit (closure cap, precision cap)

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fomcert/catalog.hpp"
#include "fomcert/families.hpp"
#include "fomcert/json_io.hpp"

using namespace fomcert;

namespace {

constexpr const char* kSchema = "fomcert-report/1";

struct Output {
    bool json_mode = true;
    int exit_code = 0;
    Json doc;

    void set(const std::string& key, const Json& value) { doc[key] = value; }
    int finish() {
        doc["schema"] = kSchema;
        if (json_mode) {
            std::cout << doc.dump(2) << "\n";
        } else {
            for (auto& [k, v] : doc.items()) {
                if (k == "schema") continue;
                std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                          << "\n";
            }
        }
        return exit_code;
    }
};

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

Json parse_json_arg(const std::string& text) { return Json::parse(text); }

MatGroup<CycElt> cyc_catalog_by_name(const std::string& name, unsigned n, unsigned field_order) {
    CatalogKey key;
    key.name = name;
    key.n = n;
    key.ctx_order = field_order;
    CatalogEntry e = catalog(key);
    if (!e.cyc) throw std::invalid_argument("catalog " + name + " is not a cyclotomic group");
    return *e.cyc;
}

ProjPoint<CycElt> point_from_json(const CtxPtr& ctx, const Json& j) {
    std::vector<CycElt> coords;
    for (const auto& c : j) {
        if (c.is_array())
            coords.push_back(cyc_from_coeffs_json(ctx, c));
        else if (c.is_number_integer())
            coords.push_back(CycElt::from_int(ctx, c.get<long>()));
        else
            coords.push_back(CycElt::from_rat(ctx, rat_parse(c.get<std::string>())));
    }
    return ProjPoint<CycElt>::make(std::move(coords));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for fields of moduli of curves"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_mode = "json";
    unsigned field_order = 0;
    int threads = 0;
    long precision_cap_opt = 4096;
    std::size_t closure_cap_opt = 5000;
    app.add_option("--output", output_mode, "json or text")->envname("FOMCERT_OUTPUT");
    app.add_option("--field-order", field_order, "cyclotomic context order N")
        ->envname("FOMCERT_FIELD_ORDER");
    app.add_option("--threads", threads, "worker thread cap (0 = auto)")
        ->envname("FOMCERT_THREADS");
    app.add_option("--precision-cap", precision_cap_opt, "interval precision cap in bits")
        ->envname("FOMCERT_PRECISION_CAP");
    app.add_option("--closure-cap", closure_cap_opt, "group closure element cap")
        ->envname("FOMCERT_CLOSURE_CAP");

    // ---- group ----
    auto* grp = app.add_subcommand("group", "finite subgroup catalogs and orbits");
    std::string g_catalog, g_point, g_inner;
    unsigned g_n = 0;
    auto* g_closure = grp->add_subcommand("closure", "close a catalog group, report the order");
    g_closure->add_option("--catalog", g_catalog, "catalog name")->required();
    g_closure->add_option("--n", g_n, "parameter n for C_n / D_2n");
    auto* g_orbit = grp->add_subcommand("orbit", "orbit of a projective point");
    g_orbit->add_option("--catalog", g_catalog)->required();
    g_orbit->add_option("--point", g_point, "JSON point, e.g. [\"1\",\"0\",\"0\"]")->required();
    g_orbit->add_option("--n", g_n);
    auto* g_stab = grp->add_subcommand("stabilizer", "stabilizer of a projective point");
    g_stab->add_option("--catalog", g_catalog)->required();
    g_stab->add_option("--point", g_point)->required();
    g_stab->add_option("--n", g_n);
    auto* g_norm = grp->add_subcommand("normalizes", "does every element of H normalize G?");
    g_norm->add_option("--catalog", g_catalog, "the group G")->required();
    g_norm->add_option("--by", g_inner, "the group H")->required();
    g_norm->add_option("--n", g_n);

    // ---- form ----
    auto* frm = app.add_subcommand("form", "homogeneous forms under the projective action");
    std::string f_form, f_matrix, f_other, f_name;
    unsigned f_index = 0;
    auto* f_act = frm->add_subcommand("act", "substitute a matrix into a form");
    f_act->add_option("--form", f_form, "form JSON file")->required();
    f_act->add_option("--matrix", f_matrix, "matrix JSON file")->required();
    auto* f_inv = frm->add_subcommand("invariant", "is the form invariant under the catalog group?");
    f_inv->add_option("--form", f_form)->required();
    f_inv->add_option("--catalog", f_name)->required();
    auto* f_stab = frm->add_subcommand("stabilizer", "stabilizer of a form inside a catalog group");
    f_stab->add_option("--form", f_form)->required();
    f_stab->add_option("--catalog", f_name)->required();
    auto* f_sqf = frm->add_subcommand("squarefree", "binary form squarefreeness");
    f_sqf->add_option("--form", f_form)->required();
    std::string r_f, r_g;
    auto* f_res = frm->add_subcommand("resultant", "Sylvester resultant of two polynomials");
    f_res->add_option("--f", r_f, "JSON coefficient list, ascending")->required();
    f_res->add_option("--g", r_g)->required();

    // ---- hyperell ----
    auto* hyp = app.add_subcommand("hyperell", "hyperelliptic models y^2 = f(x)");
    std::string h_curve, h_other;
    auto* h_aut = hyp->add_subcommand("aut", "reduced automorphism group");
    h_aut->add_option("--curve", h_curve, "curve JSON file")->required();
    auto* h_isom = hyp->add_subcommand("isom", "isomorphisms between two curves");
    h_isom->add_option("--curve", h_curve)->required();
    h_isom->add_option("--other", h_other)->required();
    auto* h_weil = hyp->add_subcommand("weil", "Weil cocycle search over {1, conj}");
    h_weil->add_option("--curve", h_curve)->required();
    auto* h_cls = hyp->add_subcommand("classify", "definability classification");
    h_cls->add_option("--curve", h_curve)->required();

    // ---- plane ----
    auto* pln = app.add_subcommand("plane", "smooth plane curves F = 0");
    std::string p_curve, p_other, p_group, p_reps, p_cands;
    auto* p_smooth = pln->add_subcommand("smooth", "symmetry-assisted smoothness certificate");
    p_smooth->add_option("--curve", p_curve, "form JSON file")->required();
    p_smooth->add_option("--group", p_group, "catalog group (G18 or G36)")->required();
    auto* p_stab = pln->add_subcommand("stab", "stabilizer of the defining form");
    p_stab->add_option("--curve", p_curve)->required();
    p_stab->add_option("--catalog", p_group)->required();
    auto* p_conj = pln->add_subcommand("conj", "complex-conjugate curve");
    p_conj->add_option("--curve", p_curve)->required();
    auto* p_isom = pln->add_subcommand("isom-check", "filter isomorphism candidates");
    p_isom->add_option("--curve", p_curve)->required();
    p_isom->add_option("--other", p_other)->required();
    p_isom->add_option("--candidates", p_cands, "JSON file: array of matrices")->required();

    // ---- descent ----
    auto* dsc = app.add_subcommand("descent", "cocycle search and norm equations");
    std::string d_u = "2", d_v = "13", d_curve, d_cands, d_quotient;
    long d_bound = 50;
    unsigned d_p = 13, d_k = 2;
    auto* d_normeq = dsc->add_subcommand("normeq", "bounded search for -u = x^2 + v y^2");
    d_normeq->add_option("--u", d_u)->required();
    d_normeq->add_option("--v", d_v)->required();
    d_normeq->add_option("--bound", d_bound);
    auto* d_cert = dsc->add_subcommand("certificate", "modular non-solvability certificate");
    d_cert->add_option("--u", d_u)->required();
    d_cert->add_option("--v", d_v)->required();
    d_cert->add_option("--p", d_p)->required();
    d_cert->add_option("--k", d_k)->required();
    auto* d_search = dsc->add_subcommand("search", "cocycle search over candidate witnesses");
    d_search->add_option("--curve", d_curve, "plane-curve form JSON")->required();
    d_search->add_option("--candidates", d_cands, "JSON: array per quotient element")->required();
    d_search->add_option("--quotient", d_quotient, "JSON exponent list, e.g. [1, 11]")->required();
    auto* d_verify = dsc->add_subcommand("verify", "verify a full cocycle family");
    d_verify->add_option("--curve", d_curve)->required();
    d_verify->add_option("--candidates", d_cands, "JSON: one witness per quotient element")
        ->required();
    d_verify->add_option("--quotient", d_quotient)->required();

    // ---- family ----
    auto* fam = app.add_subcommand("family", "counterexample family pipelines");
    std::string fam_params;
    std::string fam_beta = "1", fam_u = "2", fam_v = "13", fam_a1 = "1", fam_a2 = "1",
                fam_a3 = "1";
    bool fam_verify = false;
    auto* fam_ch5 = fam->add_subcommand("ch5", "conjugate-pair hyperelliptic family");
    fam_ch5->add_option("--params", fam_params, "JSON: {n, r, roots, g_family?}")->required();
    fam_ch5->add_flag("--verify", fam_verify, "run the Weil search");
    auto* fam_diag = fam->add_subcommand("diag", "diagonal plane family");
    fam_diag->add_option("--params", fam_params)->required();
    fam_diag->add_flag("--verify", fam_verify);
    auto* fam_g18 = fam->add_subcommand("g18", "G18 sextic family");
    fam_g18->add_option("--u", fam_u);
    fam_g18->add_option("--v", fam_v);
    fam_g18->add_option("--alpha1", fam_a1);
    fam_g18->add_option("--alpha2", fam_a2);
    fam_g18->add_option("--alpha3", fam_a3);
    fam_g18->add_option("--bound", d_bound);
    fam_g18->add_flag("--verify", fam_verify);
    auto* fam_g36 = fam->add_subcommand("g36", "G36 sextic family");
    fam_g36->add_option("--beta", fam_beta);
    fam_g36->add_flag("--verify", fam_verify);

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* s2 : sub->get_subcommands({})) s2->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.json_mode = output_mode != "text";
    worker_threads() = threads;
    precision_cap() = precision_cap_opt;
    default_closure_cap() = closure_cap_opt;

    try {
        if (g_closure->parsed()) {
            MatGroup<CycElt> g = cyc_catalog_by_name(g_catalog, g_n, field_order);
            out.set("catalog", g_catalog);
            out.set("order", g.order());
            out.set("label", fingerprint(g).classify());
        } else if (g_orbit->parsed() || g_stab->parsed()) {
            MatGroup<CycElt> g = cyc_catalog_by_name(g_catalog, g_n, field_order);
            CtxPtr ctx = g.elements.front().at(0, 0).ctx();
            ProjPoint<CycElt> p = point_from_json(ctx, parse_json_arg(g_point));
            if (g_orbit->parsed()) {
                auto orb = orbit(g, p);
                out.set("orbit_size", orb.size());
            } else {
                auto st = stabilizer(g, p);
                out.set("stabilizer_order", st.order());
            }
        } else if (g_norm->parsed()) {
            MatGroup<CycElt> g = cyc_catalog_by_name(g_catalog, g_n, field_order);
            MatGroup<CycElt> h = cyc_catalog_by_name(g_inner, g_n, field_order);
            bool ok = true;
            for (const auto& m : h.elements)
                if (!normalizes(m, g)) {
                    ok = false;
                    break;
                }
            out.set("normalizes", ok);
            out.exit_code = ok ? 0 : 1;
        } else if (f_act->parsed()) {
            HomForm<CycElt> f = form_from_json(load_json_file(f_form));
            ProjMat<CycElt> m = mat_from_json(load_json_file(f_matrix));
            out.set("result", form_to_json(f.acted_by(m)));
        } else if (f_inv->parsed()) {
            HomForm<CycElt> f = form_from_json(load_json_file(f_form));
            MatGroup<CycElt> g =
                cyc_catalog_by_name(f_name, g_n, f.sample().ctx()->order);
            bool inv = invariant_under_generators(f, g);
            out.set("invariant", inv);
            out.exit_code = inv ? 0 : 1;
        } else if (f_stab->parsed()) {
            HomForm<CycElt> f = form_from_json(load_json_file(f_form));
            MatGroup<CycElt> g =
                cyc_catalog_by_name(f_name, g_n, f.sample().ctx()->order);
            out.set("stabilizer_order", stabilizer_form(f, g).order());
        } else if (f_sqf->parsed()) {
            HomForm<CycElt> f = form_from_json(load_json_file(f_form));
            bool sf = binary_squarefree(f);
            out.set("squarefree", sf);
            out.exit_code = sf ? 0 : 1;
        } else if (f_res->parsed()) {
            CtxPtr ctx = CycCtx::get(field_order ? field_order : 1);
            auto parse_poly = [&](const std::string& text) {
                std::vector<CycElt> c;
                for (const auto& v : parse_json_arg(text))
                    c.push_back(v.is_array() ? cyc_from_coeffs_json(ctx, v)
                               : v.is_number_integer()
                                   ? CycElt::from_int(ctx, v.get<long>())
                                   : CycElt::from_rat(ctx, rat_parse(v.get<std::string>())));
                return Poly<CycElt>(std::move(c));
            };
            CycElt r = resultant(parse_poly(r_f), parse_poly(r_g));
            out.set("resultant", cyc_coeffs_json(r));
        } else if (h_aut->parsed()) {
            HyperCurve x = curve_from_json(load_json_file(h_curve));
            RedAutGroup g = reduced_aut(x);
            out.set("order", g.group.order());
            out.set("label", g.label);
        } else if (h_isom->parsed()) {
            HyperCurve x = curve_from_json(load_json_file(h_curve));
            HyperCurve y = curve_from_json(load_json_file(h_other));
            auto ws = isomorphisms(x, y);
            out.set("count", ws.size());
            out.exit_code = ws.empty() ? 1 : 0;
        } else if (h_weil->parsed()) {
            HyperCurve x = curve_from_json(load_json_file(h_curve));
            WeilC2Report rep = weil_search_C2(x);
            const char* names[] = {"Definable", "Obstructed", "NotIsomorphicToConjugate"};
            out.set("outcome", names[static_cast<int>(rep.outcome)]);
            out.set("definable", rep.outcome == C2Outcome::Definable);
            out.set("candidates_tried", rep.candidates_tried);
            out.exit_code = rep.outcome == C2Outcome::Definable ? 0 : 1;
        } else if (h_cls->parsed()) {
            HyperCurve x = curve_from_json(load_json_file(h_curve));
            MainHypClass c = mainhyp_classify(x);
            out.set("class", c == MainHypClass::GuaranteedDefinable ? "GuaranteedDefinable"
                                                                    : "CyclicUnresolved");
        } else if (p_smooth->parsed()) {
            PlaneCurve x = make_plane_curve(form_from_json(load_json_file(p_curve)));
            SmoothCert cert;
            if (p_group == "G36") {
                MatGroup<CycElt> g = cyc_catalog_by_name("G36", 0, x.ctx->order);
                cert = smooth_by_symmetry(x, g, g36_short_orbit_reps(x.ctx), 18, false);
            } else if (p_group == "G18") {
                MatGroup<CycElt> g = cyc_catalog_by_name("G18", 0, x.ctx->order);
                cert = smooth_by_symmetry(x, g, g18_short_orbit_reps(x.ctx), 18, true);
            } else {
                throw std::invalid_argument("plane smooth supports --group G18 or G36");
            }
            out.set("certificate", cert_to_json(cert));
            out.exit_code = cert.smooth ? 0 : 1;
        } else if (p_stab->parsed()) {
            PlaneCurve x = make_plane_curve(form_from_json(load_json_file(p_curve)));
            MatGroup<CycElt> g = cyc_catalog_by_name(p_group, 0, x.ctx->order);
            out.set("stabilizer_order", stabilizer_form(x.form, g).order());
        } else if (p_conj->parsed()) {
            PlaneCurve x = make_plane_curve(form_from_json(load_json_file(p_curve)));
            PlaneCurve y = conj_plane(GaloisAuto::conjugation(x.ctx), x);
            out.set("result", form_to_json(y.form));
        } else if (p_isom->parsed()) {
            PlaneCurve x = make_plane_curve(form_from_json(load_json_file(p_curve)));
            PlaneCurve y = make_plane_curve(form_from_json(load_json_file(p_other)));
            std::vector<ProjMat<CycElt>> cands;
            for (const auto& mj : load_json_file(p_cands)) cands.push_back(mat_from_json(mj));
            auto hits = isom_candidates_check(x, y, cands);
            out.set("candidates", cands.size());
            out.set("isomorphisms", hits.size());
            out.exit_code = hits.empty() ? 1 : 0;
        } else if (d_normeq->parsed()) {
            NormEqResult r = norm_eq_search({rat_parse(d_u), rat_parse(d_v), d_bound});
            out.set("found", r.found);
            if (r.found) {
                out.set("x", r.x.str());
                out.set("y", r.y.str());
            }
            out.exit_code = r.found ? 0 : 1;
        } else if (d_cert->parsed()) {
            bool ok = mod_certificate_verify(rat_parse(d_u), rat_parse(d_v), d_p, d_k);
            out.set("certified", ok);
            out.exit_code = ok ? 0 : 1;
        } else if (d_search->parsed() || d_verify->parsed()) {
            PlaneCurve x = make_plane_curve(form_from_json(load_json_file(d_curve)));
            std::vector<long> exps;
            for (const auto& e : parse_json_arg(d_quotient)) exps.push_back(e.get<long>());
            GalQuotient q = GalQuotient::make(x.ctx, exps);
            Json cj = load_json_file(d_cands);
            if (d_search->parsed()) {
                std::vector<std::vector<ProjMat<CycElt>>> cands;
                for (const auto& lst : cj) {
                    cands.emplace_back();
                    for (const auto& mj : lst) cands.back().push_back(mat_from_json(mj));
                }
                CocycleSearchReport rep = cocycle_search_plane(x, q, cands);
                out.set("definable", rep.definable);
                out.set("tried", rep.assignments_tried);
                if (rep.no_candidates) out.set("no_candidates", true);
                out.exit_code = rep.definable ? 0 : 1;
            } else {
                PlaneCocycleFamily fam2;
                fam2.quotient = q;
                fam2.object = x;
                for (const auto& mj : cj) fam2.witnesses.push_back(mat_from_json(mj));
                bool ok = cocycle_verify(fam2);
                out.set("cocycle_holds", ok);
                out.exit_code = ok ? 0 : 1;
            }
        } else if (fam_ch5->parsed() || fam_diag->parsed()) {
            Json pj = parse_json_arg(fam_params);
            CtxPtr ctx = CycCtx::get(field_order ? field_order
                                                 : pj.value("N", 4u));
            Ch5Params p;
            p.n = pj.at("n").get<unsigned>();
            p.r = pj.at("r").get<unsigned>();
            p.g_family = pj.value("g_family", false);
            for (const auto& rj : pj.at("roots"))
                p.root_params.push_back(cyc_from_coeffs_json(ctx, rj));
            if (fam_ch5->parsed()) {
                Ch5Build b = ch5_build(p, ctx);
                Json conds;
                conds["params_ok"] = b.report.params_ok;
                conds["squarefree"] = b.report.squarefree;
                conds["not_real"] = b.report.not_real;
                conds["inversion_moves_zeros"] = b.report.inversion_moves_zeros;
                conds["rotation_multiset_ok"] = b.report.rotation_multiset_ok;
                conds["special3_plus"] = b.report.special3_plus;
                conds["special3_minus"] = b.report.special3_minus;
                out.set("conditions", conds);
                out.set("all_conditions", b.report.all());
                out.set("curve", curve_to_json(b.curve));
                ch5_witness(b); // validates; throws on inconsistency
                out.set("witness_lambda", cyc_coeffs_json(b.lambda));
                if (fam_verify) {
                    WeilC2Report rep = weil_search_C2(b.curve);
                    out.set("definable", rep.outcome == C2Outcome::Definable);
                    out.set("candidates_tried", rep.candidates_tried);
                    out.exit_code = rep.outcome == C2Outcome::Definable ? 0 : 1;
                }
            } else {
                DiagBundle b = ch7_diag_build(p, ctx);
                out.set("aut_order", b.aut_order);
                out.set("smooth", b.cert.smooth);
                out.set("efh_invariant", b.efh_invariant);
                out.set("mu_is_isom", b.mu_is_isom);
                out.set("definable", !b.obstructed);
                out.set("candidates_tried", b.candidates_tried);
                out.exit_code = b.obstructed ? 1 : 0;
            }
        } else if (fam_g18->parsed()) {
            G18Params p;
            p.alpha1 = rat_parse(fam_a1);
            p.alpha2 = rat_parse(fam_a2);
            p.alpha3 = rat_parse(fam_a3);
            p.u = rat_parse(fam_u);
            p.v = rat_parse(fam_v);
            p.norm_bound = d_bound;
            G18Bundle b = g18_build(p);
            out.set("context_order", g18_context_order(p.u, p.v));
            out.set("dehom_squarefree", b.dehom_squarefree);
            out.set("stabilizer_order", b.stab_order);
            out.set("stabilizer_is_g18", b.stab_is_g18);
            out.set("omega_fixing_sigma_in_g72", b.omega_fixing_sigma_in_g72);
            out.set("conjugation_in_g72", b.conjugation_in_g72);
            out.set("normeq_empty", b.normeq_empty);
            out.set("certificates", Json{{"u", b.cert_u}, {"neg_u", b.cert_neg_u}});
            out.set("lattice_property", b.lattice_property);
            bool obstructed = b.normeq_empty && b.cert_u && b.cert_neg_u && b.lattice_property;
            out.set("definable", !obstructed);
            out.exit_code = obstructed ? 1 : 0;
        } else if (fam_g36->parsed()) {
            G36Bundle b = g36_build({rat_parse(fam_beta)});
            out.set("smooth", b.cert.smooth);
            out.set("stabilizer_order", b.stab_order);
            out.set("stabilizer_is_g36", b.stab_is_g36);
            out.set("uvu_maps_to_negated", b.uvu_maps_to_negated);
            out.set("definable", !b.obstructed);
            out.set("candidates_tried", b.candidates_tried);
            out.exit_code = b.obstructed ? 1 : 0;
        } else {
            throw std::invalid_argument("no operation selected");
        }
    } catch (const closure_cap_exceeded& e) {
        Json err{{"error", e.what()}, {"kind", "resource_cap"}};
        std::cerr << (out.json_mode ? err.dump() : std::string(e.what())) << "\n";
        return 3;
    } catch (const precision_exhausted& e) {
        Json err{{"error", e.what()}, {"kind", "resource_cap"}};
        std::cerr << (out.json_mode ? err.dump() : std::string(e.what())) << "\n";
        return 3;
    } catch (const std::exception& e) {
        Json err{{"error", e.what()}, {"kind", "validation"}};
        std::cerr << (out.json_mode ? err.dump() : std::string(e.what())) << "\n";
        return 2;
    }
    return out.finish();
}
