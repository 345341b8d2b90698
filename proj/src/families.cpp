#include "fomcert/families.hpp"

#include "fomcert/catalog.hpp"

#include <numeric>

namespace fomcert {

HomForm<CycElt> hessian_phi(const CtxPtr& ctx) {
    return HomForm<CycElt>::monomial(3, {1, 1, 1}, CycElt::one(ctx));
}

HomForm<CycElt> hessian_psi(const CtxPtr& ctx) {
    CycElt one = CycElt::one(ctx);
    HomForm<CycElt> f(3, 3);
    f.add_term({3, 0, 0}, one);
    f.add_term({0, 3, 0}, one);
    f.add_term({0, 0, 3}, one);
    return f;
}

HomForm<CycElt> hessian_chi(const CtxPtr& ctx) {
    CycElt one = CycElt::one(ctx);
    HomForm<CycElt> f(3, 6);
    f.add_term({3, 3, 0}, one);
    f.add_term({0, 3, 3}, one);
    f.add_term({3, 0, 3}, one);
    return f;
}

HomForm<CycElt> g36_sextic(const CtxPtr& ctx, const CycElt& a) {
    HomForm<CycElt> phi = hessian_phi(ctx), psi = hessian_psi(ctx), chi = hessian_chi(ctx);
    CycElt c_psi2 = a - CycElt::from_rat(ctx, rat(1, 12));
    return chi + (phi * phi).scaled(CycElt::from_int(ctx, -18) * a) +
           (psi * psi).scaled(c_psi2) + (psi * phi).scaled(CycElt::from_int(ctx, -6) * a);
}

HomForm<CycElt> g18_sextic(const CtxPtr& ctx, const Rat& a1, const Rat& a2, const Rat& a3,
                           const Rat& u, const Rat& v) {
    CycElt w = root_of_unity(ctx, 3);
    CycElt su = embed_quadratic(ctx, u), sv = embed_quadratic(ctx, v);
    CycElt suv = su * sv;
    CycElt A1 = CycElt::from_rat(ctx, a1), A2 = CycElt::from_rat(ctx, a2),
           A3 = CycElt::from_rat(ctx, a3);
    CycElt c_phi2 = A1 * w * su + A2 * sv + A3 * (w * w) * suv;
    CycElt c_phipsi = A1 * (w * w) * su + A2 * sv + A3 * w * suv;
    CycElt c_psi2 = -CycElt::from_rat(ctx, rat(1, 12)) + A1 * su + A2 * sv + A3 * suv;
    HomForm<CycElt> phi = hessian_phi(ctx), psi = hessian_psi(ctx), chi = hessian_chi(ctx);
    return (psi * psi).scaled(c_psi2) + (phi * psi).scaled(CycElt::from_int(ctx, -6) * c_phipsi) +
           (phi * phi).scaled(CycElt::from_int(ctx, -18) * c_phi2) + chi;
}

// ---- conjugate-pair families --------------------------------------------------

namespace {

bool is_root_of_unity(const CycElt& z, unsigned max_order) {
    CycElt p = z;
    for (unsigned k = 1; k <= max_order; ++k) {
        if (p.is_one()) return true;
        p = p * z;
    }
    return false;
}

// multiset equality over CycElt
bool multiset_equal(std::vector<CycElt> a, std::vector<CycElt> b) {
    if (a.size() != b.size()) return false;
    auto lt = [](const CycElt& x, const CycElt& y) { return x.cmp(y) < 0; };
    std::vector<CycElt> an, bn;
    for (auto& x : a) an.push_back(x.normalized());
    for (auto& x : b) bn.push_back(x.normalized());
    std::sort(an.begin(), an.end(), lt);
    std::sort(bn.begin(), bn.end(), lt);
    for (std::size_t i = 0; i < an.size(); ++i)
        if (!(an[i] == bn[i])) return false;
    return true;
}

// For a root of unity zeta != 1 with {c_i, -1/c_i^c} = {zeta c_i, -zeta/c_i^c}
// the products force zeta^(2r) = 1, so it suffices to scan the ratio
// candidates m / c_0 over the multiset members.
bool rotation_condition_holds(const std::vector<CycElt>& constants) {
    std::vector<CycElt> mset;
    for (const CycElt& c : constants) {
        mset.push_back(c);
        mset.push_back(-(c.conj().inv()));
    }
    const unsigned two_r = static_cast<unsigned>(2 * constants.size());
    for (const CycElt& m : mset) {
        CycElt zeta = m / constants[0];
        if (zeta.is_one()) continue;
        if (!zeta.pow(two_r).is_one()) continue;
        std::vector<CycElt> rotated;
        for (const CycElt& c : constants) {
            rotated.push_back(zeta * c);
            rotated.push_back(-(zeta * c.conj().inv()));
        }
        if (multiset_equal(mset, rotated)) return false;
    }
    return true;
}

bool zero_set_member(const std::vector<CycElt>& roots, const CycElt& v) {
    for (const CycElt& r : roots)
        if (r == v) return true;
    return false;
}

} // namespace

Ch5Build ch5_build(const Ch5Params& p, const CtxPtr& ctx) {
    const unsigned n = p.n, r = p.r;
    if (r != p.root_params.size())
        throw std::invalid_argument("need exactly r root parameters");
    Ch5Build out;
    Ch5ConditionReport& rep = out.report;
    if (p.g_family) {
        rep.params_ok = (n * r) % 2 == 0 && n >= 1 && r >= 1;
    } else {
        rep.params_ok = 2 * n * r > 5 && (n % 2 == 0 || r % 2 == 1);
    }
    if (!rep.params_ok)
        throw std::invalid_argument(p.g_family ? "sm must be even"
                                               : "need 2nr > 5 and r odd when n is odd");
    if (!ctx_has_root(ctx, 2 * n))
        throw std::invalid_argument("context lacks zeta_" + std::to_string(2 * n));

    CycElt zeta_n = root_of_unity(ctx, n);
    CycElt zeta_2n = root_of_unity(ctx, 2 * n);
    out.zeta2n = zeta_2n;

    std::vector<CycElt> roots;
    for (const CycElt& b : p.root_params) {
        if (b.is_zero()) throw std::invalid_argument("root parameter must be nonzero");
        out.constants.push_back(b.pow(static_cast<long>(n)));
        CycElt rot = CycElt::one(ctx);
        for (unsigned k = 0; k < n; ++k) {
            roots.push_back(rot * b);
            roots.push_back(rot * zeta_2n * b.conj().inv());
            rot = rot * zeta_n;
        }
    }
    if (p.g_family) roots.push_back(CycElt::zero(ctx));

    Poly<CycElt> f = Poly<CycElt>::constant(CycElt::one(ctx));
    for (const CycElt& rt : roots)
        f = f * Poly<CycElt>(std::vector<CycElt>{-rt, CycElt::one(ctx)});

    rep.squarefree = poly_squarefree(f);
    if (!rep.squarefree) throw std::invalid_argument("family polynomial has repeated zeros");
    out.curve = make_curve(f, roots);

    // not defined over R: some coefficient moves under conjugation
    rep.not_real = false;
    for (const CycElt& c : f.coeffs())
        if (!(c.conj() == c)) rep.not_real = true;

    // P -> 1/P must not map the zero set (nonzero zeros for g) into itself
    rep.inversion_moves_zeros = false;
    for (const CycElt& rt : roots) {
        if (rt.is_zero()) continue;
        if (!zero_set_member(roots, rt.inv())) rep.inversion_moves_zeros = true;
    }

    rep.rotation_multiset_ok = rotation_condition_holds(out.constants);

    rep.special3_plus = rep.special3_minus = true;
    if (n == 3) {
        if (!ctx_has_root(ctx, 12))
            throw std::invalid_argument("n=3 condition needs sqrt(3): context must contain zeta_12");
        CycElt s3 = embed_quadratic(ctx, rat(3));
        for (int branch = 0; branch < 2; ++branch) {
            CycElt s = branch == 0 ? s3 : -s3;
            bool maps_into = true;
            if (!p.g_family) {
                // P -> -(P - s - 1) / (P (s + 1) + 1)
                CycElt one = CycElt::one(ctx);
                for (const CycElt& rt : roots) {
                    CycElt den = rt * (s + one) + one;
                    if (den.is_zero()) {
                        maps_into = false; // image is infinity, not a zero
                        break;
                    }
                    CycElt img = -(rt - s - one) / den;
                    if (!zero_set_member(roots, img)) {
                        maps_into = false;
                        break;
                    }
                }
                (branch == 0 ? rep.special3_plus : rep.special3_minus) = !maps_into;
            } else {
                // 1 + sqrt(3) must not be a zero of g
                CycElt val = out.curve.f.eval(CycElt::one(ctx) + s);
                (branch == 0 ? rep.special3_plus : rep.special3_minus) = !val.is_zero();
            }
        }
    }

    // lambda of the family witness
    CycElt lam = CycElt::one(ctx);
    for (const CycElt& a : out.constants) lam = lam * (-(a.conj()) / a);
    if (p.g_family) {
        // with the canonical lift (0,1,zeta_2m,0) the scalar picks up
        // zeta_2m^(2(sm+1)); the quoted value (1/zeta_2m) prod(...) refers to
        // the x^(sm+1)-denominator normalization
        lam = lam * zeta_2n.pow(2 * static_cast<long>(n * r + 1) - 1);
    }
    out.lambda = lam;
    return out;
}

IsomWitness ch5_witness(const Ch5Build& b) {
    const CtxPtr& ctx = b.curve.ctx;
    IsomWitness w;
    w.genus = b.curve.genus;
    w.m = {CycElt::zero(ctx), CycElt::one(ctx), b.zeta2n, CycElt::zero(ctx)};
    HyperCurve conj = conj_curve(GaloisAuto::conjugation(ctx), b.curve);
    auto lambda = witness_lambda(b.curve, conj, w.m);
    if (!lambda) throw std::logic_error("family witness failed the polynomial identity");
    w.lambda = *lambda;
    if (!(w.lambda == b.lambda))
        throw std::logic_error("family witness lambda differs from the product formula");
    if (!(w.lambda.conj() * w.lambda).is_one())
        throw std::logic_error("family witness lambda is not on the unit circle");
    return w;
}

// ---- diagonal plane family -----------------------------------------------------

namespace {

// entries c * gamma^k with gamma^(2nr) = w and gamma^c = gamma^(-1)
struct GammaScalar {
    CycElt c;
    long g = 0;
};

struct GammaMat {
    std::array<GammaScalar, 9> e;
};

GammaScalar gmul(const GammaScalar& x, const GammaScalar& y, const CycElt& w, long period) {
    GammaScalar r{x.c * y.c, x.g + y.g};
    while (r.g >= period) {
        r.g -= period;
        r.c = r.c * w;
    }
    while (r.g < 0) {
        r.g += period;
        r.c = r.c / w;
    }
    return r;
}

GammaMat gmat_mul(const GammaMat& a, const GammaMat& b, const CycElt& w, long period,
                  const CtxPtr& ctx) {
    GammaMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            GammaScalar acc{CycElt::zero(ctx), 0};
            for (int k = 0; k < 3; ++k) {
                const GammaScalar &x = a.e[i * 3 + k], &y = b.e[k * 3 + j];
                if (x.c.is_zero() || y.c.is_zero()) continue;
                GammaScalar t = gmul(x, y, w, period);
                if (acc.c.is_zero()) {
                    acc = t;
                } else if (acc.g == t.g) {
                    acc.c = acc.c + t.c;
                } else {
                    throw std::logic_error("mixed gamma powers in a single entry");
                }
            }
            r.e[i * 3 + j] = acc;
        }
    return r;
}

GammaMat gmat_conj(const GammaMat& a, const GaloisAuto& c, const CycElt& w, long period) {
    GammaMat r;
    for (int i = 0; i < 9; ++i) {
        GammaScalar t{c(a.e[i].c), -a.e[i].g};
        while (t.g < 0) {
            t.g += period;
            t.c = t.c / w;
        }
        r.e[i] = t;
    }
    return r;
}

bool gmat_is_projective_identity(const GammaMat& a) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i != j && !a.e[i * 3 + j].c.is_zero()) return false;
        }
    const GammaScalar &d0 = a.e[0], &d1 = a.e[4], &d2 = a.e[8];
    if (d0.c.is_zero() || d1.c.is_zero() || d2.c.is_zero()) return false;
    return d0.g == d1.g && d1.g == d2.g && d0.c == d1.c && d1.c == d2.c;
}

} // namespace

DiagBundle ch7_diag_build(const Ch5Params& p, const CtxPtr& ctx) {
    if (p.g_family) throw std::invalid_argument("diagonal family uses the f-type parameters");
    const unsigned n = p.n, r = p.r;
    const unsigned d = 2 * n * r;
    if (!ctx_has_root(ctx, 2 * n * r))
        throw std::invalid_argument("context lacks zeta_" + std::to_string(2 * n * r));

    DiagBundle out;
    // the conjugate-pair conditions for the binary form are those of the
    // hyperelliptic family
    Ch5Build hyp = ch5_build(p, ctx);
    out.conditions = hyp.report;

    CycElt one = CycElt::one(ctx);
    CycElt zeta_n = root_of_unity(ctx, n);
    CycElt zeta_2n = root_of_unity(ctx, 2 * n);
    CycElt zeta_2nr = root_of_unity(ctx, 2 * n * r);

    // f(X0, X1) = prod (X0^n - a_i X1^n)(X0^n + (1/a_i^c) X1^n), the
    // homogenization of the hyperelliptic family polynomial; the quotient by
    // <H^2> is then literally that curve and gamma^(2nr) = prod -a_i^c/a_i
    // makes the antidiagonal witness below work out exactly
    HomForm<CycElt> fbin = HomForm<CycElt>::monomial(2, {0, 0, 0}, one);
    for (const CycElt& a : hyp.constants) {
        HomForm<CycElt> f1(2, n), f2(2, n);
        f1.add_term({n, 0, 0}, one);
        f1.add_term({0, n, 0}, -a);
        f2.add_term({n, 0, 0}, one);
        f2.add_term({0, n, 0}, a.conj().inv());
        fbin = fbin * f1 * f2;
    }
    // h = X2^d - f
    HomForm<CycElt> h(3, d);
    h.add_term({0, 0, d}, one);
    for (const auto& [e, c] : fbin.terms()) {
        if (c.is_zero()) continue;
        h.add_term({e[0], e[1], 0}, -c);
    }
    out.curve = make_plane_curve(h);

    out.cert = diag_family_smooth(out.curve, n, r);

    // <E, F, H>
    CycElt zero = CycElt::zero(ctx);
    auto diag3 = [&](const CycElt& a, const CycElt& b, const CycElt& c) {
        return ProjMat<CycElt>::make(3, {a, zero, zero, zero, b, zero, zero, zero, c});
    };
    ProjMat<CycElt> E = diag3(zeta_n, one, one);
    ProjMat<CycElt> F = diag3(one, zeta_n, one);
    ProjMat<CycElt> H = diag3(one, one, zeta_2nr);
    MatGroup<CycElt> aut = group_closure<CycElt>({E, F, H});
    out.aut_order = aut.order();
    out.efh_invariant = invariant_under_generators(h, aut);

    // w = prod -a_i^c / a_i lies on the unit circle
    CycElt w = CycElt::one(ctx);
    for (const CycElt& a : hyp.constants) w = w * (-(a.conj()) / a);
    out.w_unit_circle = (w.conj() * w).is_one();

    // mu = [[0,1,0],[zeta_2n,0,0],[0,0,gamma]] with gamma^(2nr) = w: the
    // substituted conjugate form becomes w X2^d - f^c(X1, zeta_2n X0), and
    // f^c(X1, zeta_2n X0) = w f(X0, X1) makes it proportional to h.
    {
        HomForm<CycElt> fc(2, d);
        for (const auto& [e, c] : fbin.terms()) {
            if (c.is_zero()) continue;
            fc.add_term(e, c.conj());
        }
        HomForm<CycElt> fc_sub =
            fc.acted_by(ProjMat<CycElt>::make(2, {zero, one, zeta_2n, zero}));
        out.mu_is_isom = (fc_sub - fbin.scaled(w)).is_zero();
    }

    // obstruction scan: mu' = mu * A over A in <E, F, H>; the gamma layer is
    // formal with gamma^c gamma = 1
    GaloisAuto c = GaloisAuto::conjugation(ctx);
    const long period = static_cast<long>(d);
    std::size_t fails = 0;
    for (const auto& A : aut.elements) {
        GammaMat mu;
        for (int i = 0; i < 9; ++i) mu.e[i] = GammaScalar{zero, 0};
        // mu = antidiagonal block times gamma in the corner, then times A
        // (A is diagonal): column scaling
        mu.e[1] = GammaScalar{A.at(1, 1), 0};              // row 0: X1 entry
        mu.e[3] = GammaScalar{zeta_2n * A.at(0, 0), 0};    // row 1: X0 entry
        mu.e[8] = GammaScalar{A.at(2, 2), 1};              // row 2: gamma * A22
        GammaMat muc = gmat_conj(mu, c, w, period);
        GammaMat prod = gmat_mul(muc, mu, w, period, ctx);
        ++out.candidates_tried;
        if (!gmat_is_projective_identity(prod)) ++fails;
    }
    out.obstructed = fails == out.candidates_tried;
    return out;
}

// ---- G18 ------------------------------------------------------------------------

unsigned g18_context_order(const Rat& u, const Rat& v) {
    unsigned N = 3;
    N = std::lcm(N, quadratic_conductor(u));
    N = std::lcm(N, quadratic_conductor(v));
    return N;
}

namespace {

MatGroup<CycElt> lift_group(const MatGroup<CycElt>& g, const CtxPtr& big) {
    auto lift_mat = [&](const ProjMat<CycElt>& m) {
        std::vector<CycElt> e;
        e.reserve(m.entries().size());
        for (const CycElt& v : m.entries()) e.push_back(v.lift_to(big));
        return ProjMat<CycElt>::make(m.dim(), std::move(e));
    };
    MatGroup<CycElt> out;
    for (const auto& m : g.gens) out.gens.push_back(lift_mat(m));
    for (const auto& m : g.elements) out.elements.push_back(lift_mat(m));
    std::sort(out.elements.begin(), out.elements.end());
    out.label = g.label;
    return out;
}

// is [F^sigma] in ([F]) . G?
bool conjugate_in_orbit(const HomForm<CycElt>& f, const GaloisAuto& sigma,
                        const MatGroup<CycElt>& g, bool parallel) {
    HomForm<CycElt> target(3, f.degree());
    for (const auto& [e, c] : f.terms()) {
        if (c.is_zero()) continue;
        target.add_term(e, sigma(c));
    }
    auto check = [&](std::size_t i) {
        return proj_eq(f.acted_by(g.elements[i]), target) ? 1 : 0;
    };
    std::vector<int> hit = parallel ? par_map<int>(g.order(), check)
                                    : serial_map<int>(g.order(), check);
    for (int h : hit)
        if (h) return true;
    return false;
}

} // namespace

G18Bundle g18_build(const G18Params& p, bool parallel) {
    // u, v, uv must be distinct nonsquare classes; in K = Q(omega) the class
    // of -3 is also square
    auto is_square_in_K = [](const Rat& x) {
        Rat r;
        if (rat_is_square(x, r)) return true;
        return rat_is_square(x / rat(-3), r);
    };
    if (is_square_in_K(p.u) || is_square_in_K(p.v) || is_square_in_K(p.u * p.v))
        throw std::invalid_argument("u, v, uv must be nonsquares in Q(omega)");

    CtxPtr ctx = CycCtx::get(g18_context_order(p.u, p.v));
    G18Bundle out;
    HomForm<CycElt> f = g18_sextic(ctx, p.alpha1, p.alpha2, p.alpha3, p.u, p.v);
    out.curve = make_plane_curve(f);

    // squarefree dehomogenization F(X0, 1, 1)
    CycElt one = CycElt::one(ctx);
    out.dehom_squarefree = poly_squarefree(f.dehomogenize(0, {one, one}));
    if (!out.dehom_squarefree)
        throw std::invalid_argument("F(X0,1,1) is not squarefree; adjust the parameters");

    // stabilizer inside G216
    MatGroup<CycElt> g216 = lift_group(catalog_G216(CycCtx::get(3)), ctx);
    MatGroup<CycElt> g18 = lift_group(catalog_G18(CycCtx::get(3)), ctx);
    MatGroup<CycElt> g72 = lift_group(catalog_G72(CycCtx::get(3)), ctx);
    MatGroup<CycElt> stab = stabilizer_form(f, g216, parallel);
    out.stab_order = stab.order();
    out.stab_is_g18 = stab.same_elements(g18);

    // Galois-orbit structure: a sigma fixing omega lands in the G72 orbit,
    // complex conjugation (omega -> omega^2) does not
    const unsigned N = ctx->order;
    CycElt omega = root_of_unity(ctx, 3);
    CycElt su = embed_quadratic(ctx, p.u);
    unsigned fix_k = 0;
    for (unsigned k = 2; k < N; ++k) {
        if (std::gcd(k, N) != 1) continue;
        GaloisAuto s(ctx, static_cast<long>(k));
        if (s(omega) == omega && !(s(su) == su)) {
            fix_k = k;
            break;
        }
    }
    if (fix_k == 0) throw std::logic_error("no omega-fixing sigma moves sqrt(u)");
    out.omega_fixing_sigma_in_g72 =
        conjugate_in_orbit(f, GaloisAuto(ctx, static_cast<long>(fix_k)), g72, parallel);
    out.conjugation_in_g72 =
        conjugate_in_orbit(f, GaloisAuto::conjugation(ctx), g72, parallel);

    // quaternion obstruction
    out.normeq_empty = !norm_eq_search({p.u, p.v, p.norm_bound}).found;
    out.cert_u = mod_certificate_verify(p.u, p.v, p.cert_p, p.cert_k);
    out.cert_neg_u = mod_certificate_verify(-p.u, p.v, p.cert_p, p.cert_k);

    // subgroup-lattice property of G72 (group-abstract, small context)
    MatGroup<CycElt> g72s = catalog_G72(CycCtx::get(3));
    MatGroup<CycElt> g18s = catalog_G18(CycCtx::get(3));
    MatGroup<CycElt> g9s = catalog_G9(CycCtx::get(3));
    auto cosets_hit = [&](const std::vector<std::size_t>& sub, const MatGroup<CycElt>& k) {
        std::vector<ProjMat<CycElt>> reps;
        for (std::size_t idx : sub) {
            const auto& h = g72s.elements[idx];
            bool found = false;
            for (const auto& rep : reps)
                if (k.contains(rep.inverse() * h)) {
                    found = true;
                    break;
                }
            if (!found) reps.push_back(h);
        }
        return reps.size();
    };
    out.lattice_property = true;
    for (const auto& sub : subgroup_lattice(g72s))
        if (cosets_hit(sub, g18s) == 4 && cosets_hit(sub, g9s) != 8) out.lattice_property = false;

    return out;
}

// ---- G36 ------------------------------------------------------------------------

G36Bundle g36_build(const G36Params& p, bool parallel) {
    if (p.beta == 0) throw std::invalid_argument("beta must be nonzero");
    CtxPtr ctx = CycCtx::get(12);
    G36Bundle out;
    CycElt a = CycElt::from_rat(ctx, p.beta) * root_of_unity(ctx, 4);
    HomForm<CycElt> f = g36_sextic(ctx, a);
    out.curve = make_plane_curve(f);

    MatGroup<CycElt> g36 = catalog_G36(ctx);
    MatGroup<CycElt> g72 = catalog_G72(ctx);
    out.cert = smooth_by_symmetry(out.curve, g36, g36_short_orbit_reps(ctx), 18, false, parallel);

    MatGroup<CycElt> stab = stabilizer_form(f, g72, parallel);
    out.stab_order = stab.order();
    out.stab_is_g36 = stab.same_elements(g36);

    ProjMat<CycElt> u = hessian_U(ctx), v = hessian_V(ctx);
    ProjMat<CycElt> uvu = u * v * u.inverse();
    out.uvu_maps_to_negated = proj_eq(f.acted_by(uvu), g36_sextic(ctx, -a));

    // cocycle search over {1, c}: identity witness for 1, the nontrivial
    // coset UVU^-1 G36 for c
    GalQuotient quot = GalQuotient::conj_pair(ctx);
    std::vector<ProjMat<CycElt>> id_cands{ProjMat<CycElt>::identity(3, CycElt::one(ctx))};
    std::vector<ProjMat<CycElt>> coset;
    for (const auto& m : g36.elements) coset.push_back(uvu * m);
    CocycleSearchReport rep = cocycle_search_plane(out.curve, quot, {id_cands, coset}, parallel);
    out.obstructed = !rep.definable && !rep.no_candidates;
    out.candidates_tried = rep.assignments_tried;
    return out;
}

} // namespace fomcert
