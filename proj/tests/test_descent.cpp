#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fomcert/families.hpp"
#include "helpers.hpp"

using namespace fomcert;
using namespace fomcert::testing;

TEST_CASE("galois quotients") {
    auto ctx = CycCtx::get(12);
    GalQuotient q = GalQuotient::make(ctx, {1, 5, 7, 11});
    CHECK(q.size() == 4);
    CHECK(q.elements[0].is_identity());
    CHECK(q.compose(1, 1) == 0); // 5 * 5 = 25 = 1 mod 12
    CHECK_THROWS_AS(GalQuotient::make(ctx, {1, 5, 7}), std::invalid_argument);
    CHECK_THROWS_AS(GalQuotient::make(ctx, {1, 4}), std::invalid_argument);
    CHECK(GalQuotient::conj_pair(ctx).size() == 2);
}

TEST_CASE("plane cocycle verification") {
    auto ctx = CycCtx::get(12);
    CycElt a = root_of_unity(ctx, 4);
    PlaneCurve x = make_plane_curve(g36_sextic(ctx, a));

    SUBCASE("trivial quotient") {
        PlaneCocycleFamily fam;
        fam.quotient = GalQuotient::trivial(ctx);
        fam.object = x;
        fam.witnesses = {ProjMat<CycElt>::identity(3, CycElt::one(ctx))};
        CHECK(cocycle_verify(fam));
    }
    SUBCASE("real curve with identity witnesses") {
        auto c12 = ctx;
        HomForm<CycElt> fermat(3, 6);
        for (auto e : {Expo{6, 0, 0}, Expo{0, 6, 0}, Expo{0, 0, 6}})
            fermat.add_term(e, CycElt::one(c12));
        PlaneCocycleFamily fam;
        fam.quotient = GalQuotient::conj_pair(c12);
        fam.object = make_plane_curve(fermat);
        fam.witnesses = {ProjMat<CycElt>::identity(3, CycElt::one(c12)),
                         ProjMat<CycElt>::identity(3, CycElt::one(c12))};
        CHECK(cocycle_verify(fam));
    }
    SUBCASE("coset witnesses fail the pair identity") {
        auto uvu = hessian_U(ctx) * hessian_V(ctx) * hessian_U(ctx).inverse();
        PlaneCocycleFamily fam;
        fam.quotient = GalQuotient::conj_pair(ctx);
        fam.object = x;
        fam.witnesses = {ProjMat<CycElt>::identity(3, CycElt::one(ctx)), uvu};
        CHECK(!cocycle_verify(fam));
    }
    SUBCASE("non-isomorphism witnesses are a validation error") {
        PlaneCocycleFamily fam;
        fam.quotient = GalQuotient::conj_pair(ctx);
        fam.object = x;
        fam.witnesses = {ProjMat<CycElt>::identity(3, CycElt::one(ctx)),
                         ProjMat<CycElt>::identity(3, CycElt::one(ctx))};
        CHECK_THROWS_AS(cocycle_verify(fam), std::invalid_argument);
    }
}

TEST_CASE("cocycle search") {
    auto ctx = CycCtx::get(12);
    CycElt a = root_of_unity(ctx, 4);
    PlaneCurve x = make_plane_curve(g36_sextic(ctx, a));
    auto g36 = catalog_G36(ctx);
    auto uvu = hessian_U(ctx) * hessian_V(ctx) * hessian_U(ctx).inverse();
    GalQuotient quot = GalQuotient::conj_pair(ctx);
    std::vector<ProjMat<CycElt>> id_only{ProjMat<CycElt>::identity(3, CycElt::one(ctx))};
    std::vector<ProjMat<CycElt>> coset;
    for (const auto& m : g36.elements) coset.push_back(uvu * m);

    CocycleSearchReport rep = cocycle_search_plane(x, quot, {id_only, coset});
    CHECK(!rep.definable);
    CHECK(rep.assignments_tried == 36);

    SUBCASE("order independence") {
        std::vector<ProjMat<CycElt>> shuffled = coset;
        std::shuffle(shuffled.begin(), shuffled.end(), rng());
        CocycleSearchReport rep2 = cocycle_search_plane(x, quot, {id_only, shuffled});
        CHECK(!rep2.definable);
        CHECK(rep2.assignments_tried == 36);
    }
    SUBCASE("a real control curve is definable and round-trips") {
        HomForm<CycElt> fermat(3, 6);
        for (auto e : {Expo{6, 0, 0}, Expo{0, 6, 0}, Expo{0, 0, 6}})
            fermat.add_term(e, CycElt::one(ctx));
        PlaneCurve f = make_plane_curve(fermat);
        CocycleSearchReport ok = cocycle_search_plane(f, quot, {id_only, id_only});
        CHECK(ok.definable);
        PlaneCocycleFamily fam;
        fam.quotient = quot;
        fam.object = f;
        fam.witnesses = {id_only[0], id_only[0]};
        CHECK(cocycle_verify(fam));
    }
    SUBCASE("empty candidate list reports no candidates") {
        CocycleSearchReport none = cocycle_search_plane(x, quot, {id_only, {}});
        CHECK(none.no_candidates);
    }
}

TEST_CASE("norm equation search") {
    NormEqResult r1 = norm_eq_search({rat(-1), rat(-1), 10});
    CHECK(r1.found);
    CHECK((r1.x * r1.x + QwElt{rat(-1), rat(0)} * (r1.y * r1.y)) == (QwElt{rat(1), rat(0)}));

    NormEqResult r2 = norm_eq_search({rat(-5), rat(1), 10});
    CHECK(r2.found);
    CHECK((r2.x * r2.x + r2.y * r2.y) == (QwElt{rat(5), rat(0)}));

    CHECK(!norm_eq_search({rat(2), rat(13), 20}).found);
}

TEST_CASE("norm equation search against the naive oracle") {
    // the oracle enumerates both x and y directly at small height
    auto naive_solvable = [](const Rat& u, const Rat& v, long B) {
        for (long c = 1; c <= B; ++c)
            for (long d = -B; d <= B; ++d)
                for (long e = -B; e <= B; ++e) {
                    QwElt x{rat(d, c), rat(e, c)};
                    for (long c2 = 1; c2 <= B; ++c2)
                        for (long d2 = -B; d2 <= B; ++d2)
                            for (long e2 = -B; e2 <= B; ++e2) {
                                QwElt y{rat(d2, c2), rat(e2, c2)};
                                QwElt lhs = x * x + QwElt{v, rat(0)} * (y * y);
                                if (lhs == (QwElt{-u, rat(0)})) return true;
                            }
                }
        return false;
    };
    const long B = 3;
    for (auto [u, v] : std::vector<std::pair<long, long>>{
             {-1, -1}, {-5, 1}, {2, 13}, {-4, 1}, {3, -1}, {1, 1}}) {
        bool naive = naive_solvable(rat(u), rat(v), B);
        NormEqResult mine = norm_eq_search({rat(u), rat(v), B});
        if (naive) CHECK(mine.found); // the search dominates the oracle
        if (mine.found) {
            QwElt lhs = mine.x * mine.x + QwElt{rat(v), rat(0)} * (mine.y * mine.y);
            CHECK(lhs == (QwElt{rat(-u), rat(0)}));
        }
    }
}

TEST_CASE("square roots in Q(omega)") {
    for (int k = 0; k < 100; ++k) {
        QwElt z{rand_rat(6), rand_rat(6)};
        if (z.is_zero()) continue;
        auto r = qw_sqrt(z * z);
        REQUIRE(r.has_value());
        CHECK((*r * *r) == (z * z));
    }
    CHECK(!qw_sqrt(QwElt{rat(2), rat(0)}).has_value());
    CHECK(qw_sqrt(QwElt{rat(-3), rat(0)}).has_value()); // omega makes -3 a square
}

TEST_CASE("modular certificates") {
    CHECK(mod_certificate_verify(rat(2), rat(13), 13, 2));
    CHECK(mod_certificate_verify(rat(-2), rat(13), 13, 2));
    CHECK(!mod_certificate_verify(rat(-1), rat(-1), 13, 2)); // globally solvable
    CHECK(!mod_certificate_verify(rat(2), rat(13), 13, 1));  // k = 1 is too weak
    CHECK_THROWS_AS(mod_certificate_verify(rat(1, 13), rat(13), 13, 2), std::invalid_argument);
    CHECK_THROWS_AS(mod_certificate_verify(rat(2), rat(13), 3, 1), std::invalid_argument);

    auto found = find_obstruction_modulus(rat(2), rat(13), 200);
    REQUIRE(found.has_value());
    CHECK(found->first == 13);
    CHECK(found->second == 2);
}

TEST_CASE("subgroup lattices") {
    auto c3 = CycCtx::get(3);
    // (Z/3)^2 has 1 + 4 + 1 subgroups
    CHECK(subgroup_lattice(catalog_G9(c3)).size() == 6);
    // C_6 has one subgroup per divisor
    auto c12 = CycCtx::get(12);
    CHECK(subgroup_lattice(catalog_Cn(c12, 6)).size() == 4);
    // S_4 has 30 subgroups
    CHECK(subgroup_lattice(catalog_S4(CycCtx::get(4))).size() == 30);
}

TEST_CASE("order-4 cosets of the 72-element group") {
    auto c3 = CycCtx::get(3);
    auto g72 = catalog_G72(c3);
    auto g18 = catalog_G18(c3);
    auto u = hessian_U(c3), v = hessian_V(c3);
    std::vector<ProjMat<CycElt>> reps{v, u.inverse() * v * u, u * v * u.inverse()};

    // elements of order 4 = the three cosets rep * G18
    std::vector<ProjMat<CycElt>> order4;
    for (const auto& m : g72.elements)
        if (m.order() == 4) order4.push_back(m);
    CHECK(order4.size() == 54);
    std::vector<ProjMat<CycElt>> cosets;
    for (const auto& r : reps)
        for (const auto& h : g18.elements) cosets.push_back(r * h);
    std::sort(cosets.begin(), cosets.end());
    std::sort(order4.begin(), order4.end());
    CHECK(cosets == order4);

    // each coset is a single conjugacy class
    for (const auto& r : reps) {
        std::vector<ProjMat<CycElt>> cls;
        for (const auto& g : g72.elements) cls.push_back(g * r * g.inverse());
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        CHECK(cls.size() == 18);
        for (const auto& m : cls) CHECK(g18.contains(r.inverse() * m));
    }
}
