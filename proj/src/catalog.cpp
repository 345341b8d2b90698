#include "fomcert/catalog.hpp"

#include <array>

namespace fomcert {

namespace {

using M2 = ProjMat<CycElt>;

M2 m2(const CtxPtr& ctx, CycElt a, CycElt b, CycElt c, CycElt d) {
    (void)ctx;
    return M2::make(2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

MatGroup<CycElt> close_and_check(std::vector<ProjMat<CycElt>> gens, std::size_t expected,
                                 const std::string& label) {
    MatGroup<CycElt> g = group_closure(std::move(gens));
    if (g.order() != expected)
        throw std::logic_error(label + ": closure has order " + std::to_string(g.order()) +
                               ", expected " + std::to_string(expected));
    g.label = label;
    return g;
}

} // namespace

MatGroup<CycElt> catalog_Cn(const CtxPtr& ctx, unsigned n) {
    if (n < 1) throw std::invalid_argument("C_n needs n >= 1");
    CycElt z = root_of_unity(ctx, n);
    CycElt zero = CycElt::zero(ctx), one = CycElt::one(ctx);
    return close_and_check({m2(ctx, z, zero, zero, one)}, n, "C_" + std::to_string(n));
}

MatGroup<CycElt> catalog_D2n(const CtxPtr& ctx, unsigned n) {
    if (n < 2) throw std::invalid_argument("D_2n needs n > 1");
    CycElt z = root_of_unity(ctx, n);
    CycElt zero = CycElt::zero(ctx), one = CycElt::one(ctx);
    return close_and_check(
        {m2(ctx, z, zero, zero, one), m2(ctx, zero, one, one, zero)}, 2 * n,
        "D_" + std::to_string(2 * n));
}

MatGroup<CycElt> catalog_A4(const CtxPtr& ctx) {
    CycElt i = root_of_unity(ctx, 4);
    CycElt zero = CycElt::zero(ctx), one = CycElt::one(ctx);
    std::vector<M2> gens;
    for (int s : {1, -1}) {
        CycElt e = s > 0 ? one : -one;
        gens.push_back(m2(ctx, e, zero, zero, one));
        gens.push_back(m2(ctx, zero, e, one, zero));
    }
    for (long nu : {1, 3}) {
        CycElt inu = i.pow(nu);
        gens.push_back(m2(ctx, inu, inu, one, -one));
        gens.push_back(m2(ctx, inu, -inu, one, one));
        gens.push_back(m2(ctx, one, inu, one, -inu));
        gens.push_back(m2(ctx, -one, -inu, one, -inu));
    }
    return close_and_check(std::move(gens), 12, "A_4");
}

MatGroup<CycElt> catalog_S4(const CtxPtr& ctx) {
    CycElt i = root_of_unity(ctx, 4);
    CycElt zero = CycElt::zero(ctx), one = CycElt::one(ctx);
    std::vector<M2> gens;
    for (long nu = 0; nu < 4; ++nu) {
        CycElt inu = i.pow(nu);
        gens.push_back(m2(ctx, inu, zero, zero, one));
        gens.push_back(m2(ctx, zero, inu, one, zero));
        for (long nu2 = 0; nu2 < 4; ++nu2)
            gens.push_back(m2(ctx, inu, -i.pow(nu + nu2), one, i.pow(nu2)));
    }
    return close_and_check(std::move(gens), 24, "S_4");
}

MatGroup<CycElt> catalog_A5(const CtxPtr& ctx) {
    CycElt eps = root_of_unity(ctx, 5);
    CycElt omega = eps + eps.pow(4);        // (-1+sqrt5)/2
    CycElt omega_bar = eps.pow(2) + eps.pow(3); // (-1-sqrt5)/2
    CycElt zero = CycElt::zero(ctx), one = CycElt::one(ctx);
    std::vector<M2> gens;
    for (long r = 0; r < 5; ++r) {
        CycElt er = eps.pow(r);
        gens.push_back(m2(ctx, er, zero, zero, one));
        gens.push_back(m2(ctx, zero, er, -one, zero));
        for (long s = 0; s < 5; ++s) {
            gens.push_back(m2(ctx, er * omega, eps.pow(r - s), one, -(eps.pow(-s) * omega)));
            gens.push_back(
                m2(ctx, er * omega_bar, eps.pow(r - s), one, -(eps.pow(-s) * omega_bar)));
        }
    }
    return close_and_check(std::move(gens), 60, "A_5");
}

namespace {

ProjMat<CycElt> m3(const CtxPtr& ctx, std::array<CycElt, 9> e) {
    (void)ctx;
    return ProjMat<CycElt>::make(3, std::vector<CycElt>(e.begin(), e.end()));
}

} // namespace

ProjMat<CycElt> hessian_S(const CtxPtr& ctx) {
    CycElt w = root_of_unity(ctx, 3);
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx);
    return m3(ctx, {o, z, z, z, w, z, z, z, w * w});
}

ProjMat<CycElt> hessian_T(const CtxPtr& ctx) {
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx);
    return m3(ctx, {z, o, z, z, z, o, o, z, z});
}

ProjMat<CycElt> hessian_R(const CtxPtr& ctx) {
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx);
    return m3(ctx, {o, z, z, z, z, o, z, o, z});
}

ProjMat<CycElt> hessian_V(const CtxPtr& ctx) {
    CycElt w = root_of_unity(ctx, 3);
    CycElt o = CycElt::one(ctx);
    return m3(ctx, {o, o, o, o, w, w * w, o, w * w, w});
}

ProjMat<CycElt> hessian_U(const CtxPtr& ctx) {
    CycElt w = root_of_unity(ctx, 3);
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx);
    return m3(ctx, {o, z, z, z, o, z, z, z, w});
}

MatGroup<CycElt> catalog_G9(const CtxPtr& ctx) {
    return close_and_check({hessian_S(ctx), hessian_T(ctx)}, 9, "G9");
}

MatGroup<CycElt> catalog_G18(const CtxPtr& ctx) {
    return close_and_check({hessian_S(ctx), hessian_T(ctx), hessian_R(ctx)}, 18, "G18");
}

MatGroup<CycElt> catalog_G36(const CtxPtr& ctx) {
    return close_and_check({hessian_S(ctx), hessian_T(ctx), hessian_R(ctx), hessian_V(ctx)}, 36,
                           "G36");
}

MatGroup<CycElt> catalog_G72(const CtxPtr& ctx) {
    ProjMat<CycElt> u = hessian_U(ctx);
    ProjMat<CycElt> v = hessian_V(ctx);
    return close_and_check(
        {hessian_S(ctx), hessian_T(ctx), hessian_R(ctx), v, u * v * u.inverse()}, 72, "G72");
}

MatGroup<CycElt> catalog_G216(const CtxPtr& ctx) {
    return close_and_check(
        {hessian_S(ctx), hessian_T(ctx), hessian_R(ctx), hessian_V(ctx), hessian_U(ctx)}, 216,
        "G216");
}

MatGroup<CycElt> catalog_G60(const CtxPtr& ctx) {
    CycElt eps = root_of_unity(ctx, 5);
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx), two = CycElt::from_int(ctx, 2);
    CycElt c2 = eps.pow(2) + eps.pow(-2), c1 = eps + eps.pow(-1);
    auto e1 = m3(ctx, {o, z, z, z, eps.pow(4), z, z, z, eps});
    auto e2 = m3(ctx, {o, z, z, z, z, o, z, o, z});
    auto e3 = m3(ctx, {o, o, o, two, c2, c1, two, c1, c2});
    return close_and_check({e1, e2, e3}, 60, "G60");
}

MatGroup<CycElt> catalog_G360(const CtxPtr& ctx) {
    CycElt eps = root_of_unity(ctx, 5);
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx), two = CycElt::from_int(ctx, 2);
    CycElt c2 = eps.pow(2) + eps.pow(-2), c1 = eps + eps.pow(-1);
    CycElt s = embed_quadratic(ctx, rat(-15));
    CycElt quarter = CycElt::from_rat(ctx, rat(1, 4));
    CycElt l1 = quarter * (-o + s), l2 = quarter * (-o - s);
    auto e1 = m3(ctx, {o, z, z, z, eps.pow(4), z, z, z, eps});
    auto e2 = m3(ctx, {o, z, z, z, z, o, z, o, z});
    auto e3 = m3(ctx, {o, o, o, two, c2, c1, two, c1, c2});
    auto e4 = m3(ctx, {o, l1, l1, two * l2, c2, c1, two * l2, c1, c2});
    return close_and_check({e1, e2, e3, e4}, 360, "G360");
}

MatGroup<CycElt> catalog_G168(const CtxPtr& ctx) {
    CycElt b = root_of_unity(ctx, 7);
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx);
    CycElt a = b.pow(4) - b.pow(3), c = b.pow(2) - b.pow(5), d = b - b.pow(6);
    auto f1 = m3(ctx, {b, z, z, z, b.pow(2), z, z, z, b.pow(4)});
    auto f2 = m3(ctx, {z, o, z, z, z, o, o, z, z});
    auto f3 = m3(ctx, {a, c, d, c, d, a, d, a, c});
    return close_and_check({f1, f2, f3}, 168, "G168");
}

MatGroup<CycElt> catalog_typeC(const CtxPtr& ctx,
                               const std::vector<std::array<long, 3>>& diag_exps) {
    std::vector<ProjMat<CycElt>> gens{hessian_T(ctx)};
    CycElt z = CycElt::zero(ctx);
    for (const auto& d : diag_exps)
        gens.push_back(m3(ctx, {CycElt::zeta(ctx, d[0]), z, z, z, CycElt::zeta(ctx, d[1]), z, z,
                                z, CycElt::zeta(ctx, d[2])}));
    MatGroup<CycElt> g = group_closure(std::move(gens));
    g.label = "typeC";
    return g;
}

MatGroup<CycElt> catalog_typeD(const CtxPtr& ctx,
                               const std::vector<std::array<long, 3>>& diag_exps) {
    MatGroup<CycElt> c = catalog_typeC(ctx, diag_exps);
    std::vector<ProjMat<CycElt>> gens = c.gens;
    gens.push_back(hessian_R(ctx));
    MatGroup<CycElt> g = group_closure(std::move(gens));
    g.label = "typeD";
    return g;
}

ProjMat<CycElt> intransitive_lift(const ProjMat<CycElt>& inner) {
    if (inner.dim() != 2) throw std::invalid_argument("intransitive lift needs a 2x2 matrix");
    const CtxPtr& ctx = inner.at(0, 0).ctx();
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx);
    return ProjMat<CycElt>::make(
        3, {inner.at(0, 0), inner.at(0, 1), z, inner.at(1, 0), inner.at(1, 1), z, z, z, o});
}

namespace {

ProjMat<CycElt> block3(const CtxPtr& ctx, CycElt a, CycElt b, CycElt c, CycElt d) {
    CycElt z = CycElt::zero(ctx), o = CycElt::one(ctx);
    return ProjMat<CycElt>::make(3, {std::move(a), std::move(b), z, std::move(c), std::move(d),
                                     z, z, z, o});
}

} // namespace

MatGroup<CycElt> intransitive_lift_D2n(const CtxPtr& ctx, unsigned n) {
    if (n < 2) throw std::invalid_argument("intransitive D_2n lift needs n > 1");
    CycElt z2n = root_of_unity(ctx, 2 * n);
    CycElt i = root_of_unity(ctx, 4);
    CycElt zero = CycElt::zero(ctx);
    MatGroup<CycElt> g = group_closure<CycElt>(
        {block3(ctx, z2n, zero, zero, z2n.inv()), block3(ctx, zero, i, i, zero)});
    g.label = "intransitive(D_" + std::to_string(2 * n) + ")";
    return g;
}

MatGroup<CycElt> intransitive_lift_S4(const CtxPtr& ctx) {
    CycElt z8 = root_of_unity(ctx, 8);
    CycElt i = z8 * z8;
    CycElt zero = CycElt::zero(ctx), one = CycElt::one(ctx);
    // det(-2i) = (sqrt2 zeta_8^3)^2 scales [[1, i], [1, -i]] into SL_2
    CycElt delta = ((z8 + z8.inv()) * z8.pow(3)).inv();
    MatGroup<CycElt> g = group_closure<CycElt>(
        {block3(ctx, z8, zero, zero, z8.inv()), block3(ctx, zero, i, i, zero),
         block3(ctx, delta, delta * i, delta, -(delta * i))});
    g.label = "intransitive(S_4)";
    return g;
}

MatGroup<CycElt> intransitive_lift_A5(const CtxPtr& ctx) {
    CycElt eps = root_of_unity(ctx, 5);
    CycElt z10 = root_of_unity(ctx, 10);
    CycElt zero = CycElt::zero(ctx), one = CycElt::one(ctx);
    CycElt omega = eps + eps.pow(4);
    // det(-(omega^2 + 1)) = ((1 - eps)/zeta_10)^2
    CycElt delta = (z10 / (one - eps));
    MatGroup<CycElt> g = group_closure<CycElt>(
        {block3(ctx, z10, zero, zero, z10.inv()), block3(ctx, zero, one, -one, zero),
         block3(ctx, delta * omega, delta, delta, -(delta * omega))});
    g.label = "intransitive(A_5)";
    return g;
}

unsigned long psl2_order(unsigned long q) { return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1); }
unsigned long pgl2_order(unsigned long q) { return q * (q * q - 1); }

namespace {

using F2 = ProjMat<FqElt>;

F2 fq_m2(FqElt a, FqElt b, FqElt c, FqElt d) {
    return F2::make(2, {std::move(a), std::move(b), std::move(c), std::move(d)});
}

MatGroup<FqElt> fq_close(std::vector<F2> gens, std::size_t expected, const std::string& label) {
    MatGroup<FqElt> g = group_closure(std::move(gens));
    if (g.order() != expected)
        throw std::logic_error(label + ": closure has order " + std::to_string(g.order()) +
                               ", expected " + std::to_string(expected));
    g.label = label;
    return g;
}

} // namespace

MatGroup<FqElt> catalog_PSL2(const FqCtxPtr& ctx) {
    FqElt zero = FqElt::zero(ctx), one = FqElt::one(ctx);
    std::vector<F2> gens{fq_m2(zero, -one, one, zero)};
    for (const FqElt& a : all_field_elements(ctx))
        if (!a.is_zero()) gens.push_back(fq_m2(one, a, zero, one));
    return fq_close(std::move(gens), psl2_order(ctx->size()),
                    "PSL2(F" + std::to_string(ctx->size()) + ")");
}

MatGroup<FqElt> catalog_PGL2(const FqCtxPtr& ctx) {
    FqElt zero = FqElt::zero(ctx), one = FqElt::one(ctx);
    std::vector<F2> gens{fq_m2(zero, -one, one, zero)};
    for (const FqElt& a : all_field_elements(ctx))
        if (!a.is_zero()) gens.push_back(fq_m2(one, a, zero, one));
    for (const FqElt& a : all_field_elements(ctx))
        if (!a.is_zero() && !a.is_square()) {
            gens.push_back(fq_m2(a, zero, zero, one));
            break;
        }
    return fq_close(std::move(gens), pgl2_order(ctx->size()),
                    "PGL2(F" + std::to_string(ctx->size()) + ")");
}

MatGroup<FqElt> catalog_G_beta_A(const FqCtxPtr& ctx, const FqElt& beta,
                                 const std::vector<FqElt>& A) {
    if (beta.is_zero()) throw std::invalid_argument("beta must be a root of unity");
    // validate: A additive subgroup containing 1, beta*A = A
    auto find = [&](const FqElt& x) {
        for (const auto& a : A)
            if (a == x) return true;
        return false;
    };
    if (!find(FqElt::zero(ctx)) || !find(FqElt::one(ctx)))
        throw std::invalid_argument("A must contain 0 and 1");
    for (const auto& a : A)
        for (const auto& b : A)
            if (!find(a + b)) throw std::invalid_argument("A is not closed under addition");
    for (const auto& a : A)
        if (!find(beta * a)) throw std::invalid_argument("beta*A != A");
    unsigned long ord_beta = 1;
    FqElt t = beta;
    while (!t.is_one()) {
        t = t * beta;
        ++ord_beta;
    }
    FqElt zero = FqElt::zero(ctx), one = FqElt::one(ctx);
    std::vector<F2> gens{fq_m2(beta, zero, zero, one)};
    for (const auto& a : A)
        if (!a.is_zero()) gens.push_back(fq_m2(one, a, zero, one));
    return fq_close(std::move(gens), A.size() * ord_beta, "G_beta_A");
}

MatGroup<FqElt> catalog_PSL2_in_PGL3(const FqCtxPtr& ctx) {
    MatGroup<FqElt> inner = catalog_PSL2(ctx);
    std::vector<ProjMat<FqElt>> elems;
    elems.reserve(inner.order());
    for (const auto& m : inner.elements) elems.push_back(symmetric_square(m));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.size() != inner.order())
        throw std::logic_error("symmetric-square embedding failed to stay injective");
    MatGroup<FqElt> g;
    for (const auto& m : inner.gens) g.gens.push_back(symmetric_square(m));
    g.elements = std::move(elems);
    g.label = "PSL2(F" + std::to_string(ctx->size()) + ") in PGL3";
    return g;
}

MatGroup<FqElt> catalog_PGL2_in_PGL3(const FqCtxPtr& ctx) {
    MatGroup<FqElt> inner = catalog_PGL2(ctx);
    std::vector<ProjMat<FqElt>> elems;
    elems.reserve(inner.order());
    for (const auto& m : inner.elements) elems.push_back(symmetric_square(m));
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.size() != inner.order())
        throw std::logic_error("symmetric-square embedding failed to stay injective");
    MatGroup<FqElt> g;
    for (const auto& m : inner.gens) g.gens.push_back(symmetric_square(m));
    g.elements = std::move(elems);
    g.label = "PGL2(F" + std::to_string(ctx->size()) + ") in PGL3";
    return g;
}

CatalogEntry catalog(const CatalogKey& key) {
    CatalogEntry out;
    auto cyc_ctx = [&](unsigned minimal) {
        unsigned N = key.ctx_order ? key.ctx_order : minimal;
        return CycCtx::get(N);
    };
    const std::string& name = key.name;
    if (name == "C_n") {
        out.cyc = catalog_Cn(cyc_ctx(min_ctx_for_root(key.n)), key.n);
    } else if (name == "D_2n") {
        out.cyc = catalog_D2n(cyc_ctx(min_ctx_for_root(key.n)), key.n);
    } else if (name == "A4") {
        out.cyc = catalog_A4(cyc_ctx(4));
    } else if (name == "S4") {
        out.cyc = catalog_S4(cyc_ctx(4));
    } else if (name == "A5") {
        out.cyc = catalog_A5(cyc_ctx(5));
    } else if (name == "G9") {
        out.cyc = catalog_G9(cyc_ctx(3));
    } else if (name == "G18") {
        out.cyc = catalog_G18(cyc_ctx(3));
    } else if (name == "G36") {
        out.cyc = catalog_G36(cyc_ctx(3));
    } else if (name == "G72") {
        out.cyc = catalog_G72(cyc_ctx(3));
    } else if (name == "G216") {
        out.cyc = catalog_G216(cyc_ctx(3));
    } else if (name == "G60") {
        out.cyc = catalog_G60(cyc_ctx(5));
    } else if (name == "G360") {
        out.cyc = catalog_G360(cyc_ctx(15));
    } else if (name == "G168") {
        out.cyc = catalog_G168(cyc_ctx(7));
    } else if (name == "PSL2_Fq") {
        out.fq = catalog_PSL2(FqCtx::get(key.p, key.r));
    } else if (name == "PGL2_Fq") {
        out.fq = catalog_PGL2(FqCtx::get(key.p, key.r));
    } else if (name == "PSL2q_in_PGL3") {
        out.fq = catalog_PSL2_in_PGL3(FqCtx::get(key.p, key.r));
    } else if (name == "PGL2q_in_PGL3") {
        out.fq = catalog_PGL2_in_PGL3(FqCtx::get(key.p, key.r));
    } else {
        throw std::invalid_argument("unknown catalog name: " + name);
    }
    return out;
}

} // namespace fomcert
