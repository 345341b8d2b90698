#include "fomcert/hyperell.hpp"

#include <algorithm>

namespace fomcert {

HyperCurve make_curve(Poly<CycElt> f, std::optional<std::vector<CycElt>> roots) {
    if (f.is_zero() || f.degree() < 5)
        throw std::invalid_argument("curve polynomial must have degree >= 5");
    if (!poly_squarefree(f)) throw std::invalid_argument("curve polynomial has a repeated root");
    HyperCurve x;
    x.ctx = f.coeffs()[0].ctx();
    x.genus = static_cast<unsigned>((f.degree() - 1) / 2);
    x.infinity_branch = f.degree() % 2 == 1;
    if (roots) {
        if (roots->size() != static_cast<std::size_t>(f.degree()))
            throw std::invalid_argument("root list size does not match the degree");
        Poly<CycElt> prod = Poly<CycElt>::constant(f.leading());
        for (const CycElt& r : *roots) {
            Poly<CycElt> lin(std::vector<CycElt>{-r, CycElt::one(x.ctx)});
            prod = prod * lin;
        }
        if (!(prod == f)) throw std::invalid_argument("root list inconsistent with polynomial");
    }
    x.f = std::move(f);
    x.roots = std::move(roots);
    return x;
}

std::vector<ProjPoint<CycElt>> branch_points(const HyperCurve& x) {
    if (!x.has_roots()) throw std::logic_error("operation requires explicit roots");
    std::vector<ProjPoint<CycElt>> pts;
    CycElt one = CycElt::one(x.ctx);
    for (const CycElt& r : *x.roots) pts.push_back(ProjPoint<CycElt>::make({r, one}));
    if (x.infinity_branch) pts.push_back(ProjPoint<CycElt>::make({one, CycElt::zero(x.ctx)}));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() != x.branch_count()) throw std::logic_error("branch points not distinct");
    return pts;
}

ProjMat<CycElt> mobius_to_standard(const ProjPoint<CycElt>& p1, const ProjPoint<CycElt>& p2,
                                   const ProjPoint<CycElt>& p3) {
    const CycElt &u1 = p1.x[0], &v1 = p1.x[1];
    const CycElt &u2 = p2.x[0], &v2 = p2.x[1];
    const CycElt &u3 = p3.x[0], &v3 = p3.x[1];
    CycElt d23 = u2 * v3 - u3 * v2;
    CycElt d21 = u2 * v1 - u1 * v2;
    return ProjMat<CycElt>::make(2, {v1 * d23, -(u1 * d23), v3 * d21, -(u3 * d21)});
}

IsomWitness compose(const IsomWitness& second, const IsomWitness& first) {
    if (second.genus != first.genus) throw std::invalid_argument("genus mismatch");
    const auto& a = second.m;
    const auto& b = first.m;
    IsomWitness w;
    w.m = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
           a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    w.lambda = second.lambda * first.lambda;
    w.genus = first.genus;
    return w;
}

IsomWitness conj_witness(const GaloisAuto& sigma, const IsomWitness& w) {
    IsomWitness r;
    r.m = {sigma(w.m[0]), sigma(w.m[1]), sigma(w.m[2]), sigma(w.m[3])};
    r.lambda = sigma(w.lambda);
    r.genus = w.genus;
    return r;
}

std::optional<CycElt> witness_lambda(const HyperCurve& x, const HyperCurve& y,
                                     const std::array<CycElt, 4>& lift) {
    // lambda * f_X(t) = F_Y(a t + b, c t + d) with F_Y the degree-(2g+2)
    // homogenization of f_Y; the convention treats odd degree as a root at
    // infinity.
    unsigned target = 2 * x.genus + 2;
    Poly<CycElt> n = mobius_numerator(y.f, lift[0], lift[1], lift[2], lift[3], target);
    if (n.is_zero()) return std::nullopt;
    if (n.degree() != x.f.degree()) return std::nullopt;
    std::size_t k = 0;
    while (x.f.coeff(k).is_zero()) ++k;
    CycElt lambda = n.coeff(k) / x.f.coeff(k);
    if (lambda.is_zero()) return std::nullopt;
    if (!(n == x.f.scaled(lambda))) return std::nullopt;
    return lambda;
}

bool is_isom_witness(const HyperCurve& x, const HyperCurve& y, const IsomWitness& w) {
    if (w.genus != x.genus || x.genus != y.genus) return false;
    auto lambda = witness_lambda(x, y, w.m);
    return lambda && *lambda == w.lambda;
}

std::vector<IsomWitness> isomorphisms(const HyperCurve& x, const HyperCurve& y, bool parallel) {
    if (x.genus != y.genus) return {};
    if (x.ctx->order != y.ctx->order) throw std::invalid_argument("curve context mismatch");
    std::vector<ProjPoint<CycElt>> bx = branch_points(x), by = branch_points(y);
    const std::size_t n = by.size();
    ProjMat<CycElt> base = mobius_to_standard(bx[0], bx[1], bx[2]);

    std::vector<std::array<std::size_t, 3>> triples;
    triples.reserve(n * (n - 1) * (n - 2));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (i != j && j != k && i != k) triples.push_back({i, j, k});

    auto try_triple = [&](std::size_t t) -> std::optional<IsomWitness> {
        const auto& [i, j, k] = triples[t];
        ProjMat<CycElt> cand = mobius_to_standard(by[i], by[j], by[k]).inverse() * base;
        // must map the branch set of X onto the branch set of Y
        for (const auto& p : bx) {
            if (!std::binary_search(by.begin(), by.end(), cand.apply(p))) return std::nullopt;
        }
        std::array<CycElt, 4> lift{cand.at(0, 0), cand.at(0, 1), cand.at(1, 0), cand.at(1, 1)};
        auto lambda = witness_lambda(x, y, lift);
        if (!lambda) throw std::logic_error("branch bijection without polynomial identity");
        IsomWitness w;
        w.m = lift;
        w.lambda = *lambda;
        w.genus = x.genus;
        return w;
    };

    std::vector<std::optional<IsomWitness>> found =
        parallel ? par_map<std::optional<IsomWitness>>(triples.size(), try_triple)
                 : serial_map<std::optional<IsomWitness>>(triples.size(), try_triple);

    // distinct Moebius maps only, in deterministic order
    std::vector<IsomWitness> out;
    std::vector<ProjMat<CycElt>> seen;
    for (auto& w : found) {
        if (!w) continue;
        ProjMat<CycElt> mob = w->mobius();
        if (std::find(seen.begin(), seen.end(), mob) == seen.end()) {
            seen.push_back(std::move(mob));
            out.push_back(std::move(*w));
        }
    }
    return out;
}

RedAutGroup reduced_aut(const HyperCurve& x, bool parallel) {
    std::vector<IsomWitness> autos = isomorphisms(x, x, parallel);
    std::vector<ProjMat<CycElt>> elems;
    elems.reserve(autos.size());
    for (const auto& w : autos) elems.push_back(w.mobius());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    // closure sanity: the stabilizer of the branch set is a group
    for (const auto& a : elems)
        for (const auto& b : elems)
            if (!std::binary_search(elems.begin(), elems.end(), a * b))
                throw std::logic_error("automorphism set is not closed");
    RedAutGroup r;
    r.group.gens = elems;
    r.group.elements = std::move(elems);
    r.fp = fingerprint(r.group);
    r.label = r.fp.classify();
    r.group.label = r.label;
    return r;
}

HyperCurve conj_curve(const GaloisAuto& sigma, const HyperCurve& x) {
    std::vector<CycElt> coeffs;
    coeffs.reserve(x.f.coeffs().size());
    for (const CycElt& c : x.f.coeffs()) coeffs.push_back(sigma(c));
    std::optional<std::vector<CycElt>> roots;
    if (x.roots) {
        roots.emplace();
        roots->reserve(x.roots->size());
        for (const CycElt& r : *x.roots) roots->push_back(sigma(r));
    }
    return make_curve(Poly<CycElt>(std::move(coeffs)), std::move(roots));
}

bool c2_cocycle_holds(const HyperCurve& x, const IsomWitness& w) {
    // phi^c o phi = (M^c M, e^c e) must be the identity isomorphism of X:
    // M^c M = nu * Id and e^c e = nu^(g+1). Since e^c e = |e|^2 is the
    // positive real square root of lambda^c lambda independently of the sign
    // of e, the scalar condition is nu^(g+1) real positive with
    // (nu^(g+1))^2 = lambda^c lambda.
    IsomWitness cc = conj_witness(GaloisAuto::conjugation(x.ctx), w);
    IsomWitness prod = compose(cc, w);
    if (!prod.m[1].is_zero() || !prod.m[2].is_zero()) return false;
    if (!(prod.m[0] == prod.m[3])) return false;
    CycElt nu = prod.m[0];
    if (nu.is_zero()) return false;
    CycElt t = nu.pow(static_cast<long>(x.genus) + 1);
    if (!(t.conj() == t)) return false;
    if (!(t * t == w.lambda.conj() * w.lambda)) return false;
    return certified_real_sign(t) > 0;
}

WeilC2Report weil_search_C2(const HyperCurve& x, bool parallel) {
    if (!x.has_roots()) throw std::logic_error("weil search requires explicit roots");
    GaloisAuto c = GaloisAuto::conjugation(x.ctx);
    HyperCurve xc = conj_curve(c, x);
    std::vector<IsomWitness> cands = isomorphisms(x, xc, parallel);
    WeilC2Report rep;
    rep.candidates_tried = 0;
    if (cands.empty()) {
        rep.outcome = C2Outcome::NotIsomorphicToConjugate;
        return rep;
    }
    for (const auto& w : cands) {
        ++rep.candidates_tried;
        if (c2_cocycle_holds(x, w)) {
            rep.outcome = C2Outcome::Definable;
            rep.witness = w;
            return rep;
        }
    }
    rep.outcome = C2Outcome::Obstructed;
    return rep;
}

MainHypClass mainhyp_classify(const HyperCurve& x) {
    RedAutGroup g = reduced_aut(x);
    if (!g.fp.cyclic) return MainHypClass::GuaranteedDefinable;
    // characteristic zero here, so a cyclic reduced group never matches the
    // characteristic
    return MainHypClass::CyclicUnresolved;
}

} // namespace fomcert
