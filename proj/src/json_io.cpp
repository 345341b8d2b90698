#include "fomcert/json_io.hpp"

namespace fomcert {

Json cyc_coeffs_json(const CycElt& x) {
    Json coeffs = Json::array();
    for (const Rat& c : x.power_basis()) coeffs.push_back(rat_str(c));
    return coeffs;
}

CycElt cyc_from_coeffs_json(const CtxPtr& ctx, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficient array expected");
    std::vector<Rat> coeffs;
    for (const auto& c : j) {
        if (c.is_number_integer())
            coeffs.push_back(rat(c.get<long>()));
        else
            coeffs.push_back(rat_parse(c.get<std::string>()));
    }
    return CycElt::from_power_basis(ctx, coeffs);
}

Json cyc_to_json(const CycElt& x) {
    Json j;
    j["N"] = x.ctx()->order;
    j["coeffs"] = cyc_coeffs_json(x);
    return j;
}

CycElt cyc_from_json(const Json& j) {
    CtxPtr ctx = CycCtx::get(j.at("N").get<unsigned>());
    return cyc_from_coeffs_json(ctx, j.at("coeffs"));
}

Json mat_to_json(const ProjMat<CycElt>& m) {
    Json j;
    j["N"] = m.at(0, 0).ctx()->order;
    j["dim"] = m.dim();
    Json entries = Json::array();
    for (const CycElt& e : m.entries()) entries.push_back(cyc_coeffs_json(e));
    j["entries"] = entries;
    return j;
}

ProjMat<CycElt> mat_from_json(const Json& j) {
    CtxPtr ctx = CycCtx::get(j.at("N").get<unsigned>());
    unsigned dim = j.at("dim").get<unsigned>();
    std::vector<CycElt> entries;
    for (const auto& e : j.at("entries")) entries.push_back(cyc_from_coeffs_json(ctx, e));
    return ProjMat<CycElt>::make(dim, std::move(entries));
}

Json form_to_json(const HomForm<CycElt>& f) {
    Json j;
    j["N"] = f.sample().ctx()->order;
    j["degree"] = f.degree();
    j["nvars"] = f.nvars();
    Json terms = Json::array();
    for (const Expo& e : f.support()) {
        Json t;
        t["exp"] = Json::array({e[0], e[1], e[2]});
        t["coeff"] = cyc_coeffs_json(f.coeff(e));
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

HomForm<CycElt> form_from_json(const Json& j) {
    CtxPtr ctx = CycCtx::get(j.at("N").get<unsigned>());
    HomForm<CycElt> f(j.at("nvars").get<unsigned>(), j.at("degree").get<unsigned>());
    for (const auto& t : j.at("terms")) {
        const auto& e = t.at("exp");
        Expo exp{e.at(0).get<unsigned>(), e.at(1).get<unsigned>(),
                 e.size() > 2 ? e.at(2).get<unsigned>() : 0};
        f.add_term(exp, cyc_from_coeffs_json(ctx, t.at("coeff")));
    }
    return f;
}

Json curve_to_json(const HyperCurve& x) {
    Json j;
    j["field"] = Json{{"N", x.ctx->order}};
    Json coeffs = Json::array();
    for (const CycElt& c : x.f.coeffs()) coeffs.push_back(cyc_coeffs_json(c));
    j["coeffs"] = coeffs;
    if (x.roots) {
        Json roots = Json::array();
        for (const CycElt& r : *x.roots) roots.push_back(cyc_coeffs_json(r));
        j["roots"] = roots;
    }
    return j;
}

HyperCurve curve_from_json(const Json& j) {
    CtxPtr ctx = CycCtx::get(j.at("field").at("N").get<unsigned>());
    std::vector<CycElt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(cyc_from_coeffs_json(ctx, c));
    std::optional<std::vector<CycElt>> roots;
    if (j.contains("roots")) {
        roots.emplace();
        for (const auto& r : j.at("roots")) roots->push_back(cyc_from_coeffs_json(ctx, r));
    }
    return make_curve(Poly<CycElt>(std::move(coeffs)), std::move(roots));
}

Json cert_to_json(const SmoothCert& c) {
    Json j;
    j["method"] = c.method;
    j["smooth"] = c.smooth;
    if (!c.smooth) j["failure"] = c.failure;
    j["bezout_bound"] = c.bezout_bound;
    j["counting_ok"] = c.counting_ok;
    j["restricted_resultant_nonzero"] = c.resultant_nonzero;
    if (c.line_checked) j["line_squarefree"] = c.line_squarefree;
    Json reps = Json::array();
    for (std::size_t i = 0; i < c.rep_points.size(); ++i) {
        Json r;
        r["point"] = c.rep_points[i];
        r["orbit_size"] = c.rep_orbit_sizes[i];
        r["nonsingular"] = static_cast<bool>(c.rep_nonsingular[i]);
        reps.push_back(r);
    }
    if (!reps.empty()) j["short_orbit_reps"] = reps;
    return j;
}

} // namespace fomcert
