#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fomcert/families.hpp"
#include "helpers.hpp"

using namespace fomcert;
using namespace fomcert::testing;

namespace {

ProjPoint<CycElt> pt(const CtxPtr& ctx, std::initializer_list<long> coords) {
    std::vector<CycElt> v;
    for (long c : coords) v.push_back(CycElt::from_int(ctx, c));
    return ProjPoint<CycElt>::make(std::move(v));
}

} // namespace

TEST_CASE("orbit sizes of the special points") {
    auto ctx = CycCtx::get(12);
    auto g18 = catalog_G18(ctx);
    auto g36 = catalog_G36(ctx);
    CycElt w = root_of_unity(ctx, 3);
    CycElt one = CycElt::one(ctx), zero = CycElt::zero(ctx);

    // the four order-3 orbits and the 9-orbit family of the 18-element group
    std::vector<ProjPoint<CycElt>> p3{
        ProjPoint<CycElt>::make({one, zero, zero}), ProjPoint<CycElt>::make({one, one, one}),
        ProjPoint<CycElt>::make({one, one, w}), ProjPoint<CycElt>::make({one, one, w * w})};
    for (const auto& p : p3) CHECK(orbit(g18, p).size() == 3);
    CHECK(orbit(g18, pt(ctx, {5, 1, 1})).size() == 9);
    CHECK(orbit(g18, pt(ctx, {2, 3, 5})).size() == 18);

    CHECK(orbit(g36, pt(ctx, {1, 0, 0})).size() == 6);
    CHECK(orbit(g36, pt(ctx, {0, 1, -1})).size() == 9);
    CycElt s3 = embed_quadratic(ctx, rat(3));
    CHECK(orbit(g36, ProjPoint<CycElt>::make({one - s3, one, one})).size() == 9);
    CHECK(orbit(g36, ProjPoint<CycElt>::make({one + s3, one, one})).size() == 9);
    CHECK(orbit(g36, pt(ctx, {5, 1, 1})).size() == 18);
    CHECK(orbit(g36, pt(ctx, {2, 3, 5})).size() == 36);
}

TEST_CASE("bezout singular-point bound from degree partitions") {
    CHECK(bezout_singular_bound(4) == 6);
    CHECK(bezout_singular_bound(5) == 10);
    CHECK(bezout_singular_bound(6) == 15);
}

TEST_CASE("symmetry smoothness certificate for the order-36 sextic") {
    auto ctx = CycCtx::get(12);
    CycElt a = root_of_unity(ctx, 4);
    PlaneCurve x = make_plane_curve(g36_sextic(ctx, a));
    auto g36 = catalog_G36(ctx);
    SmoothCert cert = smooth_by_symmetry(x, g36, g36_short_orbit_reps(ctx), 18, false);
    CHECK(cert.smooth);
    CHECK(cert.bezout_bound == 15);
    CHECK(cert.rep_orbit_sizes == std::vector<std::size_t>{6, 9, 9, 9});
    CHECK(replay_cert(x, g36, cert));

    SUBCASE("a reducible invariant form fails") {
        auto c3 = CycCtx::get(3);
        HomForm<CycElt> product = hessian_psi(c3) * hessian_phi(c3);
        PlaneCurve y = make_plane_curve(product);
        auto g18 = catalog_G18(c3);
        SmoothCert bad = smooth_by_symmetry(y, g18, g18_short_orbit_reps(c3), 18, true);
        CHECK(!bad.smooth);
        CHECK(!bad.failure.empty());
    }
    SUBCASE("non-invariant forms are a precondition error") {
        auto c3 = CycCtx::get(3);
        HomForm<CycElt> lopsided(3, 6);
        lopsided.add_term({6, 0, 0}, CycElt::one(c3));
        lopsided.add_term({0, 0, 6}, CycElt::from_int(c3, 2));
        PlaneCurve y = make_plane_curve(lopsided);
        CHECK_THROWS_AS(
            smooth_by_symmetry(y, catalog_G18(c3), g18_short_orbit_reps(c3), 18, true),
            std::invalid_argument);
    }
}

TEST_CASE("diagonal-family smoothness") {
    auto ctx = CycCtx::get(8);
    CycElt i = root_of_unity(ctx, 4), one = CycElt::one(ctx);
    Ch5Params p;
    p.n = 2;
    p.r = 2;
    p.root_params = {one + i, CycElt::from_int(ctx, 2) + i};
    DiagBundle b = ch7_diag_build(p, ctx);
    CHECK(b.cert.smooth);
    CHECK(b.cert.method == "diagonal-family");

    SUBCASE("repeated factor fails the squarefree check") {
        // X2^8 - (X0^2 - a X1^2)^2 (X0^2 + b X1^2)^2-style: build with a
        // repeated root parameter
        HomForm<CycElt> f(2, 8);
        HomForm<CycElt> quad(2, 2);
        quad.add_term({2, 0, 0}, one);
        quad.add_term({0, 2, 0}, -(one + i));
        HomForm<CycElt> other(2, 2);
        other.add_term({2, 0, 0}, one);
        other.add_term({0, 2, 0}, one + i);
        HomForm<CycElt> fb = quad * quad * other * other;
        HomForm<CycElt> h(3, 8);
        h.add_term({0, 0, 8}, one);
        for (const auto& [e, c] : fb.terms())
            if (!c.is_zero()) h.add_term({e[0], e[1], 0}, -c);
        SmoothCert bad = diag_family_smooth(make_plane_curve(h), 2, 2);
        CHECK(!bad.smooth);
    }
    SUBCASE("degree mismatch is a precondition error") {
        HomForm<CycElt> h(3, 6);
        h.add_term({0, 0, 6}, one);
        h.add_term({6, 0, 0}, -one);
        CHECK_THROWS_AS(diag_family_smooth(make_plane_curve(h), 2, 2), std::invalid_argument);
    }
}

TEST_CASE("conjugate plane curves") {
    auto ctx = CycCtx::get(12);
    CycElt a = root_of_unity(ctx, 4);
    PlaneCurve x = make_plane_curve(g36_sextic(ctx, a));
    GaloisAuto c = GaloisAuto::conjugation(ctx);
    PlaneCurve xc = conj_plane(c, x);
    CHECK(proj_eq(xc.form, g36_sextic(ctx, -a)));
    CHECK(proj_eq(conj_plane(c, xc).form, x.form));

    auto c1 = CycCtx::get(1);
    HomForm<CycElt> fermat(3, 4);
    for (auto e : {Expo{4, 0, 0}, Expo{0, 4, 0}, Expo{0, 0, 4}})
        fermat.add_term(e, CycElt::one(c1));
    PlaneCurve f = make_plane_curve(fermat);
    CHECK(proj_eq(conj_plane(GaloisAuto::conjugation(c1), f).form, fermat));
}

TEST_CASE("isomorphism candidate filtering") {
    auto ctx = CycCtx::get(12);
    CycElt a = root_of_unity(ctx, 4);
    PlaneCurve x = make_plane_curve(g36_sextic(ctx, a));
    PlaneCurve y = conj_plane(GaloisAuto::conjugation(ctx), x);
    auto g36 = catalog_G36(ctx);
    auto uvu = hessian_U(ctx) * hessian_V(ctx) * hessian_U(ctx).inverse();

    std::vector<ProjMat<CycElt>> coset;
    for (const auto& m : g36.elements) coset.push_back(uvu * m);
    CHECK(isom_candidates_check(x, y, coset).size() == 36);
    CHECK(isom_candidates_check(x, y, g36.elements).empty());
    CHECK(isom_candidates_check(x, x, g36.gens).size() == g36.gens.size());
}
