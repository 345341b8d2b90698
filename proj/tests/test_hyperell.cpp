#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fomcert/hyperell.hpp"
#include "helpers.hpp"

using namespace fomcert;
using namespace fomcert::testing;

namespace {

HyperCurve curve_from_roots(const CtxPtr& ctx, std::vector<CycElt> roots) {
    Poly<CycElt> f = Poly<CycElt>::constant(CycElt::one(ctx));
    for (const CycElt& r : roots)
        f = f * Poly<CycElt>(std::vector<CycElt>{-r, CycElt::one(ctx)});
    return make_curve(f, std::move(roots));
}

HyperCurve rational_curve(std::initializer_list<long> roots) {
    auto c1 = CycCtx::get(1);
    std::vector<CycElt> rs;
    for (long r : roots) rs.push_back(CycElt::from_int(c1, r));
    return curve_from_roots(c1, std::move(rs));
}

// the Klein-four family member x (x^4 - 1)(x^4 - 3x^2 + 1) with explicit roots
HyperCurve klein_family_alpha3() {
    auto ctx = CycCtx::get(20);
    CycElt one = CycElt::one(ctx);
    CycElt i = root_of_unity(ctx, 4);
    CycElt eps = root_of_unity(ctx, 5);
    CycElt golden = one + eps + eps.pow(4); // (1 + sqrt 5)/2
    return curve_from_roots(ctx, {CycElt::zero(ctx), one, -one, i, -i, golden, -golden,
                                  golden.inv(), -(golden.inv())});
}

HyperCurve dihedral6_alpha1() {
    // x^6 - x^3 + 1: roots are the primitive 18th roots of unity
    auto ctx = CycCtx::get(18);
    std::vector<CycElt> roots;
    for (long k : {1L, 5L, 7L, 11L, 13L, 17L}) roots.push_back(CycElt::zeta(ctx, k));
    return curve_from_roots(ctx, std::move(roots));
}

} // namespace

TEST_CASE("curve construction and validation") {
    HyperCurve x = klein_family_alpha3();
    CHECK(x.genus == 4);
    CHECK(x.infinity_branch);
    CHECK(branch_points(x).size() == 10);

    HyperCurve y = dihedral6_alpha1();
    CHECK(y.genus == 2);
    CHECK(!y.infinity_branch);
    // x^6 - x^3 + 1 reproduced from the roots
    auto c18 = y.ctx;
    CHECK(y.f == Poly<CycElt>(std::vector<CycElt>{
                     CycElt::one(c18), CycElt::zero(c18), CycElt::zero(c18),
                     CycElt::from_int(c18, -1), CycElt::zero(c18), CycElt::zero(c18),
                     CycElt::one(c18)}));

    SUBCASE("repeated roots are rejected") {
        auto c1 = CycCtx::get(1);
        // x^5 - x^4
        std::vector<CycElt> coeffs(6, CycElt::zero(c1));
        coeffs[4] = CycElt::from_int(c1, -1);
        coeffs[5] = CycElt::one(c1);
        CHECK_THROWS_AS(make_curve(Poly<CycElt>(coeffs)), std::invalid_argument);
    }
    SUBCASE("degree below 5 is rejected") {
        auto c1 = CycCtx::get(1);
        std::vector<CycElt> coeffs{CycElt::one(c1), CycElt::zero(c1), CycElt::zero(c1),
                                   CycElt::zero(c1), CycElt::one(c1)};
        CHECK_THROWS_AS(make_curve(Poly<CycElt>(coeffs)), std::invalid_argument);
    }
    SUBCASE("inconsistent root lists are rejected") {
        auto c1 = CycCtx::get(1);
        std::vector<CycElt> roots;
        for (long r : {0L, 1L, 2L, 3L, 5L}) roots.push_back(CycElt::from_int(c1, r));
        Poly<CycElt> f = Poly<CycElt>::constant(CycElt::one(c1));
        for (const auto& r : roots)
            f = f * Poly<CycElt>(std::vector<CycElt>{-r, CycElt::one(c1)});
        roots.back() = CycElt::from_int(c1, 7);
        CHECK_THROWS_AS(make_curve(f, roots), std::invalid_argument);
    }
}

TEST_CASE("reduced automorphism groups") {
    RedAutGroup klein = reduced_aut(klein_family_alpha3());
    CHECK(klein.group.order() == 4);
    CHECK(klein.label == "D_4");
    CHECK(!klein.fp.cyclic);

    RedAutGroup dih = reduced_aut(dihedral6_alpha1());
    CHECK(dih.group.order() == 6);
    CHECK(dih.label == "D_6");

    RedAutGroup triv = reduced_aut(rational_curve({0, 1, 2, 3, 5}));
    CHECK(triv.group.order() == 1);

    SUBCASE("serial enumeration agrees") {
        RedAutGroup serial = reduced_aut(dihedral6_alpha1(), false);
        CHECK(serial.group.same_elements(dih.group));
    }
}

TEST_CASE("isomorphism enumeration") {
    HyperCurve x = dihedral6_alpha1();
    auto self = isomorphisms(x, x);
    CHECK(self.size() == 6);
    for (const auto& w : self) CHECK(is_isom_witness(x, x, w));

    SUBCASE("rescaled model with the expected witness") {
        auto ctx = x.ctx;
        CycElt two = CycElt::from_int(ctx, 2);
        std::vector<CycElt> scaled_roots;
        for (const CycElt& r : *x.roots) scaled_roots.push_back(two * r);
        HyperCurve y = curve_from_roots(ctx, scaled_roots);
        auto ws = isomorphisms(x, y);
        CHECK(ws.size() == 6);
        ProjMat<CycElt> doubling = ProjMat<CycElt>::make(
            2, {two, CycElt::zero(ctx), CycElt::zero(ctx), CycElt::one(ctx)});
        bool found = false;
        for (const auto& w : ws)
            if (w.mobius() == doubling) {
                found = true;
                // lambda is the leading rescale: f_Y(2x) = 64 f_X(x) against
                // the canonical lift [[1,0],[0,1/2]] of the doubling map
                auto lam = witness_lambda(x, y, {two, CycElt::zero(ctx), CycElt::zero(ctx),
                                                 CycElt::one(ctx)});
                REQUIRE(lam.has_value());
                CHECK(*lam == CycElt::from_int(ctx, 64));
                found = true;
            }
        CHECK(found);
    }

    SUBCASE("moving one root kills all isomorphisms") {
        HyperCurve a = rational_curve({0, 1, 2, 3, 5});
        HyperCurve b = rational_curve({0, 1, 2, 3, 4});
        CHECK(isomorphisms(a, b).empty());
    }
}

TEST_CASE("witness composition") {
    HyperCurve x = dihedral6_alpha1();
    auto ctx = x.ctx;
    CycElt two = CycElt::from_int(ctx, 2), three = CycElt::from_int(ctx, 3);
    std::vector<CycElt> r2, r3;
    for (const CycElt& r : *x.roots) {
        r2.push_back(two * r);
        r3.push_back(three * two * r);
    }
    HyperCurve y = curve_from_roots(ctx, r2);
    HyperCurve z = curve_from_roots(ctx, r3);
    auto xy = isomorphisms(x, y);
    auto yz = isomorphisms(y, z);
    REQUIRE(!xy.empty());
    REQUIRE(!yz.empty());
    int cases = 0;
    for (const auto& a : xy)
        for (const auto& b : yz) {
            IsomWitness c = compose(b, a);
            CHECK(is_isom_witness(x, z, c));
            ++cases;
        }
    CHECK(cases >= 36);
}

TEST_CASE("conjugate curves") {
    HyperCurve real_curve = rational_curve({0, 1, 2, 3, 5});
    GaloisAuto c1_conj = GaloisAuto::conjugation(CycCtx::get(1));
    CHECK(conj_curve(c1_conj, real_curve).f == real_curve.f);

    auto c5 = CycCtx::get(5);
    std::vector<CycElt> roots;
    for (long k = 0; k < 5; ++k) roots.push_back(CycElt::zeta(c5, k) + CycElt::from_int(c5, k));
    HyperCurve x = curve_from_roots(c5, roots);
    GaloisAuto s2(c5, 2); // order 4
    HyperCurve y = conj_curve(s2, conj_curve(s2, conj_curve(s2, conj_curve(s2, x))));
    CHECK(y.f == x.f);

    SUBCASE("composition compatibility") {
        auto c12 = CycCtx::get(12);
        std::vector<CycElt> rs;
        for (long k = 0; k < 6; ++k)
            rs.push_back(CycElt::zeta(c12, k) + CycElt::from_int(c12, 2 * k));
        HyperCurve w = curve_from_roots(c12, rs);
        for (long a : {1L, 5L, 7L, 11L})
            for (long b : {1L, 5L, 7L, 11L}) {
                GaloisAuto sa(c12, a), sb(c12, b), sab(c12, a * b);
                CHECK(conj_curve(sa, conj_curve(sb, w)).f == conj_curve(sab, w).f);
            }
    }
}

TEST_CASE("weil search over the conjugation pair") {
    SUBCASE("x^8 - 1 is definable with the identity witness") {
        auto c8 = CycCtx::get(8);
        std::vector<CycElt> roots;
        for (long k = 0; k < 8; ++k) roots.push_back(CycElt::zeta(c8, k));
        WeilC2Report rep = weil_search_C2(curve_from_roots(c8, roots));
        CHECK(rep.outcome == C2Outcome::Definable);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->mobius().is_identity());
    }
    SUBCASE("a perturbed root makes the conjugate non-isomorphic") {
        auto c4 = CycCtx::get(4);
        CycElt i = CycElt::zeta(c4);
        std::vector<CycElt> roots{CycElt::zero(c4),          CycElt::one(c4),
                                  CycElt::from_int(c4, 2),   CycElt::from_int(c4, 3),
                                  CycElt::from_int(c4, 5),   i};
        WeilC2Report rep = weil_search_C2(curve_from_roots(c4, roots));
        CHECK(rep.outcome == C2Outcome::NotIsomorphicToConjugate);
    }
}

TEST_CASE("definability classification") {
    CHECK(mainhyp_classify(klein_family_alpha3()) == MainHypClass::GuaranteedDefinable);
    CHECK(mainhyp_classify(rational_curve({0, 1, 2, 3, 5})) == MainHypClass::CyclicUnresolved);
    CHECK(mainhyp_classify(dihedral6_alpha1()) == MainHypClass::GuaranteedDefinable);
}

TEST_CASE("infinity handling: odd and even models of the same curve") {
    // move the branch point at infinity to a finite place with a Moebius map
    // and check the witness between the two models
    HyperCurve x = klein_family_alpha3(); // degree 9, infinity is a branch point
    auto ctx = x.ctx;
    CycElt one = CycElt::one(ctx), two = CycElt::from_int(ctx, 2);
    // y = 1/(x - 2): 2 is not a branch point, so the image model has even degree
    auto mob = ProjMat<CycElt>::make(2, {CycElt::zero(ctx), one, one, -two});
    std::vector<CycElt> new_roots;
    for (const auto& p : branch_points(x)) {
        auto q = mob.apply(p);
        REQUIRE(!q.x[1].is_zero());
        new_roots.push_back(q.x[0] / q.x[1]);
    }
    HyperCurve y = curve_from_roots(ctx, new_roots); // degree 10, no infinity branch
    CHECK(y.f.degree() == 10);
    CHECK(!y.infinity_branch);
    auto ws = isomorphisms(x, y);
    CHECK(ws.size() == 4); // torsor under the Klein four group
    for (const auto& w : ws) CHECK(is_isom_witness(x, y, w));
}

TEST_CASE("coefficient-only curves support checks but not enumeration") {
    HyperCurve with_roots = dihedral6_alpha1();
    HyperCurve bare = make_curve(with_roots.f); // no root list
    CHECK_THROWS_AS(branch_points(bare), std::logic_error);
    CHECK_THROWS_AS(isomorphisms(bare, bare), std::logic_error);
    // witness checks still work from coefficients alone
    auto ws = isomorphisms(with_roots, with_roots);
    REQUIRE(!ws.empty());
    for (const auto& w : ws) CHECK(is_isom_witness(bare, bare, w));
}

TEST_CASE("reduced automorphisms equal the self-isomorphism Moebius parts") {
    for (int k = 0; k < 3; ++k) {
        HyperCurve x = k == 0   ? klein_family_alpha3()
                       : k == 1 ? dihedral6_alpha1()
                                : rational_curve({0, 1, 2, 3, 5});
        auto ws = isomorphisms(x, x);
        RedAutGroup g = reduced_aut(x);
        CHECK(ws.size() == g.group.order());
        for (const auto& w : ws) CHECK(g.group.contains(w.mobius()));
    }
}
