#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fomcert/grundform.hpp"
#include "helpers.hpp"

using namespace fomcert;
using namespace fomcert::testing;

namespace {

Poly<CycElt> int_poly(const CtxPtr& ctx, std::initializer_list<long> ascending) {
    std::vector<CycElt> c;
    for (long v : ascending) c.push_back(CycElt::from_int(ctx, v));
    return Poly<CycElt>(std::move(c));
}

} // namespace

TEST_CASE("substitution action") {
    auto c3 = CycCtx::get(3);
    HomForm<CycElt> xyz = HomForm<CycElt>::monomial(3, {1, 1, 1}, CycElt::one(c3));
    CHECK(proj_eq(xyz.acted_by(hessian_T(c3)), xyz));

    auto c4 = CycCtx::get(4);
    HomForm<CycElt> quartic(2, 4);
    quartic.add_term({4, 0, 0}, CycElt::one(c4));
    quartic.add_term({0, 4, 0}, CycElt::one(c4));
    auto m = ProjMat<CycElt>::make(2, {CycElt::zero(c4), CycElt::zeta(c4), CycElt::one(c4),
                                       CycElt::zero(c4)});
    CHECK(proj_eq(quartic.acted_by(m), quartic));

    // psi^2 is visibly invariant under the diagonal S
    HomForm<CycElt> psi(3, 3);
    for (auto e : {Expo{3, 0, 0}, Expo{0, 3, 0}, Expo{0, 0, 3}})
        psi.add_term(e, CycElt::one(c3));
    CHECK(proj_eq((psi * psi).acted_by(hessian_S(c3)), psi * psi));
}

TEST_CASE("right-action law on random triples") {
    auto ctx = CycCtx::get(4);
    for (int k = 0; k < 100; ++k) {
        HomForm<CycElt> f = rand_form(ctx, 3, 3, 3);
        ProjMat<CycElt> m = rand_mat(ctx, 3, 2), n = rand_mat(ctx, 3, 2);
        CHECK(proj_eq(f.acted_by(m * n), f.acted_by(m).acted_by(n)));
    }
}

TEST_CASE("projective equality") {
    auto c1 = CycCtx::get(1);
    HomForm<CycElt> a = HomForm<CycElt>::monomial(2, {2, 0, 0}, CycElt::from_int(c1, 2));
    HomForm<CycElt> b = HomForm<CycElt>::monomial(2, {2, 0, 0}, CycElt::one(c1));
    HomForm<CycElt> c = HomForm<CycElt>::monomial(2, {0, 2, 0}, CycElt::one(c1));
    CHECK(proj_eq(a, b));
    CHECK(!proj_eq(a, c));
}

TEST_CASE("Grundformen are invariant under their groups") {
    auto c12 = CycCtx::get(12);
    auto c4 = CycCtx::get(4);
    auto c5 = CycCtx::get(5);

    for (unsigned n : {2u, 3u, 5u}) {
        auto ctx = CycCtx::get(std::lcm(4u, n));
        auto g = catalog_Cn(ctx, n);
        for (const auto& f : grundforms_Cn(ctx, n)) CHECK(invariant_under_generators(f, g));
    }
    for (unsigned n : {2u, 3u, 4u}) {
        auto ctx = CycCtx::get(std::lcm(4u, n));
        auto g = catalog_D2n(ctx, n);
        for (const auto& f : grundforms_D2n(ctx, n)) {
            CHECK(invariant_under_generators(f, g));
            // the zero set is a single orbit of size = degree
            CHECK(binary_squarefree(f));
        }
    }
    auto a4 = catalog_A4(c12);
    for (const auto& f : grundforms_A4(c12)) CHECK(invariant_under_generators(f, a4));
    auto s4 = catalog_S4(c4);
    for (const auto& f : grundforms_S4(c4)) CHECK(invariant_under_generators(f, s4));
    auto a5 = catalog_A5(c5);
    for (const auto& f : grundforms_A5(c5)) CHECK(invariant_under_generators(f, a5));
    CHECK(!invariant_under_generators(a5_degree30_printed_variant(c5), a5));

    auto f3 = FqCtx::get(3, 1);
    auto psl = catalog_PSL2(f3);
    auto pgl = catalog_PGL2(f3);
    for (const auto& f : grundforms_PSL2(f3)) CHECK(invariant_under_generators(f, psl));
    for (const auto& f : grundforms_PGL2(f3)) CHECK(invariant_under_generators(f, pgl));

    auto f9 = FqCtx::get(3, 2);
    std::vector<FqElt> A = all_field_elements(f9);
    FqElt beta = FqElt::from_coeffs(f9, {1, 1});
    auto gba = catalog_G_beta_A(f9, beta, A);
    for (const auto& f : grundforms_G_beta_A(f9, beta, A))
        CHECK(invariant_under_generators(f, gba));
}

TEST_CASE("orbit forms") {
    auto c3 = CycCtx::get(3);
    auto g_c3 = catalog_Cn(c3, 3);
    auto p01 = ProjPoint<CycElt>::make({CycElt::zero(c3), CycElt::one(c3)});
    HomForm<CycElt> x0 = HomForm<CycElt>::monomial(2, {1, 0, 0}, CycElt::one(c3));
    CHECK(proj_eq(orbit_form(g_c3, p01), x0));

    auto c4 = CycCtx::get(4);
    auto d4 = catalog_D2n(c4, 2);
    auto p11 = ProjPoint<CycElt>::make({CycElt::one(c4), CycElt::one(c4)});
    HomForm<CycElt> sq_diff(2, 2);
    sq_diff.add_term({2, 0, 0}, CycElt::one(c4));
    sq_diff.add_term({0, 2, 0}, CycElt::from_int(c4, -1));
    CHECK(proj_eq(orbit_form(d4, p11), sq_diff));

    auto triv = group_closure<CycElt>({ProjMat<CycElt>::identity(2, CycElt::one(c4))});
    auto p21 = ProjPoint<CycElt>::make({CycElt::from_int(c4, 2), CycElt::one(c4)});
    HomForm<CycElt> lin(2, 1);
    lin.add_term({1, 0, 0}, CycElt::one(c4));
    lin.add_term({0, 1, 0}, CycElt::from_int(c4, -2));
    CHECK(proj_eq(orbit_form(triv, p21), lin));

    // a Grundform zero set is a single orbit of size equal to its degree
    auto d6 = catalog_D2n(c3, 3);
    auto root = ProjPoint<CycElt>::make({CycElt::zeta(c3), CycElt::one(c3)}); // zero of X0^3 - X1^3
    HomForm<CycElt> of = orbit_form(d6, root);
    CHECK(of.degree() == 3);
    CHECK(proj_eq(of, grundforms_D2n(c3, 3)[1]));
}

TEST_CASE("stabilizers of forms") {
    auto c3 = CycCtx::get(3);
    auto g216 = catalog_G216(c3);
    // X0 X1 X2 is fixed (projectively) by exactly the monomial matrices of
    // the 216-element group: the index-4 subgroup of order 54; V mixes it
    // into the cubes
    HomForm<CycElt> phi = HomForm<CycElt>::monomial(3, {1, 1, 1}, CycElt::one(c3));
    MatGroup<CycElt> stab = stabilizer_form(phi, g216);
    CHECK(stab.order() == 54);
    CHECK(stab.contains(hessian_S(c3)));
    CHECK(stab.contains(hessian_T(c3)));
    CHECK(stab.contains(hessian_R(c3)));
    CHECK(stab.contains(hessian_U(c3)));
    CHECK(!stab.contains(hessian_V(c3)));
    CHECK(stabilizer_form_serial(phi, g216).same_elements(stab));

    auto c4 = CycCtx::get(4);
    auto cn = catalog_Cn(c4, 4);
    HomForm<CycElt> x0d = HomForm<CycElt>::monomial(2, {3, 0, 0}, CycElt::one(c4));
    CHECK(stabilizer_form(x0d, cn).order() == cn.order());
}

TEST_CASE("binary squarefreeness") {
    auto c4 = CycCtx::get(4);
    CHECK(binary_squarefree(grundforms_S4(c4)[2])); // X0 X1 (X0^4 - X1^4)
    HomForm<CycElt> rep(2, 3);
    rep.add_term({2, 1, 0}, CycElt::one(c4));
    CHECK(!binary_squarefree(rep));
}

TEST_CASE("resultants") {
    auto c1 = CycCtx::get(1);
    SUBCASE("quoted quartic identity") {
        for (long alpha : {1L, 2L, 7L}) {
            Poly<CycElt> f = int_poly(c1, {1, 0, 0, -alpha, 0, 0, 1});
            Poly<CycElt> g = int_poly(c1, {1, 0, 4, 0, 1});
            CycElt expected =
                CycElt::from_int(c1, alpha * alpha * alpha * alpha + 100 * alpha * alpha + 2500);
            CHECK(resultant(f, g) == expected);
        }
    }
    SUBCASE("sign convention: f-rows first gives Res(x - a, x - b) = a - b") {
        Poly<CycElt> f = int_poly(c1, {-3, 1});
        Poly<CycElt> g = int_poly(c1, {-5, 1});
        CHECK(resultant(f, g) == CycElt::from_int(c1, -2));
        CHECK(resultant(g, f) == CycElt::from_int(c1, 2));
    }
    SUBCASE("resultant with the derivative detects squarefreeness") {
        for (int k = 0; k < 40; ++k) {
            std::vector<CycElt> c;
            for (int i = 0; i < 5; ++i) c.push_back(CycElt::from_int(c1, rand_int(-4, 4)));
            c.push_back(CycElt::one(c1));
            Poly<CycElt> f{c};
            bool via_res = !resultant(f, f.derivative()).is_zero();
            CHECK(via_res == poly_squarefree(f));
            CHECK(poly_squarefree(f) == (poly_gcd(f, f.derivative()).degree() == 0));
        }
    }
}

TEST_CASE("induced quotient maps") {
    auto c4 = CycCtx::get(4);
    // t = x^2 + x^-2 = (x^4 + 1) / x^2
    RatFunc<CycElt> t = RatFunc<CycElt>::make(int_poly(c4, {1, 0, 0, 0, 1}),
                                              int_poly(c4, {0, 0, 1}));
    auto m = ProjMat<CycElt>::make(2, {CycElt::one(c4), CycElt::from_int(c4, -1),
                                       CycElt::one(c4), CycElt::one(c4)});
    auto phi = induced_map(t, m);
    auto expected = ProjMat<CycElt>::make(2, {CycElt::from_int(c4, 2), CycElt::from_int(c4, 12),
                                              CycElt::one(c4), CycElt::from_int(c4, -2)});
    CHECK(phi == expected);

    CHECK(induced_map(t, ProjMat<CycElt>::identity(2, CycElt::one(c4))).is_identity());

    // t = x^n + x^-n under x -> zeta_2n x maps to -t
    auto c8 = CycCtx::get(8);
    RatFunc<CycElt> t4 = RatFunc<CycElt>::make(int_poly(c8, {1, 0, 0, 0, 0, 0, 0, 0, 1}),
                                               int_poly(c8, {0, 0, 0, 0, 1}));
    auto rot = ProjMat<CycElt>::make(2, {CycElt::zeta(c8), CycElt::zero(c8), CycElt::zero(c8),
                                         CycElt::one(c8)});
    auto neg = induced_map(t4, rot);
    auto minus_t = ProjMat<CycElt>::make(2, {CycElt::from_int(c8, -1), CycElt::zero(c8),
                                             CycElt::zero(c8), CycElt::one(c8)});
    CHECK(neg == minus_t);

    SUBCASE("maps outside the normalizer are rejected") {
        auto shift = ProjMat<CycElt>::make(2, {CycElt::one(c4), CycElt::one(c4),
                                               CycElt::zero(c4), CycElt::one(c4)});
        CHECK_THROWS_AS(induced_map(t, shift), not_in_normalizer);
    }
}

TEST_CASE("fixed-field invariants") {
    // t = x^n + x^-n is fixed by the D_2n generators
    for (unsigned n : {2u, 3u, 4u}) {
        auto ctx = CycCtx::get(std::lcm(4u, n));
        std::vector<CycElt> num(2 * n + 1, CycElt::zero(ctx));
        num[0] = num[2 * n] = CycElt::one(ctx);
        std::vector<CycElt> den(n + 1, CycElt::zero(ctx));
        den[n] = CycElt::one(ctx);
        RatFunc<CycElt> t = RatFunc<CycElt>::make(Poly<CycElt>(num), Poly<CycElt>(den));
        for (const auto& g : catalog_D2n(ctx, n).gens)
            CHECK(induced_map(t, g).is_identity());
    }
    // the A4 invariant of degree 12
    auto c4 = CycCtx::get(4);
    Poly<CycElt> num = int_poly(c4, {1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1});
    Poly<CycElt> den = int_poly(c4, {0, 0, -1, 0, 0, 0, 2, 0, 0, 0, -1});
    RatFunc<CycElt> t = RatFunc<CycElt>::make(num, den);
    for (const auto& g : catalog_A4(c4).gens) CHECK(induced_map(t, g).is_identity());
}

TEST_CASE("PSL2(F3) quotient function identities") {
    // g(x) = ((x^q - x)^(q-1) + 1)^((q+1)/2) / (x^q - x)^((q^2-q)/2), q = 3
    auto f3 = FqCtx::get(3, 1);
    FqElt one = FqElt::one(f3), zero = FqElt::zero(f3);
    Poly<FqElt> base{std::vector<FqElt>{zero, -one, zero, one}}; // x^3 - x
    Poly<FqElt> inner = base * base + Poly<FqElt>::constant(one); // (x^3-x)^2 + 1
    Poly<FqElt> numer = inner * inner;                            // ^((q+1)/2) = ^2
    Poly<FqElt> denom = base * base * base;                       // ^((q^2-q)/2) = ^3
    RatFunc<FqElt> g = RatFunc<FqElt>::make(numer, denom);

    // g(-1/x) = g(x)
    auto inv = ProjMat<FqElt>::make(2, {zero, -one, one, zero});
    CHECK(ratfunc_precompose_mobius(g, inv) == g);
    // g(x + a) = g(x) for all a in F_3
    for (const FqElt& a : all_field_elements(f3)) {
        auto shift = ProjMat<FqElt>::make(2, {one, a, zero, one});
        CHECK(ratfunc_precompose_mobius(g, shift) == g);
    }
}

TEST_CASE("Euler identity on random ternary sextics") {
    auto c1 = CycCtx::get(1);
    for (int k = 0; k < 100; ++k) {
        HomForm<CycElt> f = rand_form(c1, 3, 6, 4);
        HomForm<CycElt> sum(3, 6);
        for (unsigned v = 0; v < 3; ++v) {
            Expo e{0, 0, 0};
            e[v] = 1;
            HomForm<CycElt> xv = HomForm<CycElt>::monomial(3, e, CycElt::one(c1));
            sum = sum + xv * f.partial(v);
        }
        CHECK(sum == f.scaled(CycElt::from_int(c1, 6)));
    }
}
