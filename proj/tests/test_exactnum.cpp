#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fomcert/interval.hpp"
#include "fomcert/quadext.hpp"
#include "helpers.hpp"

using namespace fomcert;
using namespace fomcert::testing;

TEST_CASE("power-basis constructor and minimal-polynomial identities") {
    auto c3 = CycCtx::get(3);
    CycElt z = CycElt::zeta(c3);
    CHECK(CycElt::from_power_basis(c3, {rat(-1), rat(-1)}) == z * z);
    CHECK((z * z + z + CycElt::one(c3)).is_zero());

    auto c4 = CycCtx::get(4);
    CycElt i = CycElt::from_power_basis(c4, {rat(0), rat(1)});
    CHECK(i == CycElt::zeta(c4));
    CHECK(i * i == CycElt::from_int(c4, -1));

    auto c5 = CycCtx::get(5);
    CycElt eps = CycElt::zeta(c5);
    CycElt golden = eps + eps.pow(4);
    CHECK((golden * golden + golden - CycElt::one(c5)).is_zero());

    CHECK_THROWS_WITH_AS(CycElt::from_power_basis(c4, {rat(1), rat(1), rat(1)}),
                         doctest::Contains("index 2"), std::invalid_argument);
}

TEST_CASE("galois action") {
    auto c3 = CycCtx::get(3);
    CycElt z = CycElt::zeta(c3);
    CHECK(z.galois(-1) == CycElt::from_power_basis(c3, {rat(-1), rat(-1)}));

    auto c5 = CycCtx::get(5);
    GaloisAuto s2(c5, 2);
    CycElt eps = CycElt::zeta(c5);
    CHECK(s2(eps) == eps.pow(2));
    CHECK(s2(s2(s2(s2(eps)))) == eps);

    auto c13 = CycCtx::get(13);
    CycElt s13 = embed_quadratic(c13, rat(13));
    CHECK(s13 * s13 == CycElt::from_int(c13, 13));
    CHECK(s13.conj() == s13); // real value fixed by conjugation
    // the Gauss-sum expansion: sum of (a|13) zeta^a
    std::vector<std::pair<unsigned, Rat>> terms;
    for (long a = 1; a < 13; ++a) terms.emplace_back(static_cast<unsigned>(a),
                                                     rat(legendre_symbol(a, 13)));
    CHECK(s13 == CycElt::from_terms(c13, terms));

    SUBCASE("context mismatch is rejected") {
        GaloisAuto s(c5, 2);
        CHECK_THROWS_AS(s(CycElt::zeta(c13)), std::invalid_argument);
    }
}

TEST_CASE("quadratic embeddings square to their radicand") {
    auto c8 = CycCtx::get(8);
    CycElt s2 = embed_quadratic(c8, rat(2));
    CHECK(s2 == CycElt::zeta(c8, 1) + CycElt::zeta(c8, -1));
    CHECK(s2 * s2 == CycElt::from_int(c8, 2));

    auto c12 = CycCtx::get(12);
    CycElt sm3 = embed_quadratic(c12, rat(-3));
    CHECK(sm3 * sm3 == CycElt::from_int(c12, -3));
    // zeta_3 - zeta_3^2 up to the sign convention (positive imaginary part)
    CycElt z3 = root_of_unity(c12, 3);
    CHECK(sm3 == z3 - z3 * z3);

    for (long d : {2L, -3L, 5L, 13L, -15L, -13L}) {
        unsigned cond = quadratic_conductor(rat(d));
        auto ctx = CycCtx::get(cond);
        CycElt s = embed_quadratic(ctx, rat(d));
        CHECK(s * s == CycElt::from_int(ctx, d));
    }

    CHECK_THROWS_WITH_AS(embed_quadratic(CycCtx::get(5), rat(2)),
                         doctest::Contains("minimal admissible N=8"), std::invalid_argument);
}

TEST_CASE("certified complex intervals") {
    auto c4 = CycCtx::get(4);
    ComplexBox bi = complex_interval(CycElt::zeta(c4), 64);
    CHECK(bi.re.contains_zero());
    CHECK(bi.im.contains_rat(rat(1)));
    CHECK(bi.re.width_below(60));
    CHECK(bi.im.width_below(60));

    auto c3 = CycCtx::get(3);
    ComplexBox bz = complex_interval(CycElt::zeta(c3), 64);
    CHECK(bz.re.contains_rat(rat(-1, 2)));
    CHECK(bz.im.definitely_positive());

    auto c8 = CycCtx::get(8);
    ComplexBox bs = complex_interval(embed_quadratic(c8, rat(2)), 64);
    CHECK(bs.re.definitely_positive()); // excludes -sqrt(2)
    CHECK(bs.im.contains_zero());
    DyadicInterval sq = bs.re * bs.re;
    CHECK(sq.contains_rat(rat(2)));
}

TEST_CASE("interval arithmetic is compatible with field arithmetic") {
    auto ctx = CycCtx::get(12);
    for (int k = 0; k < 100; ++k) {
        CycElt x = rand_cyc(ctx, 4), y = rand_cyc(ctx, 4);
        ComplexBox prod_box = complex_interval(x * y, 80);
        ComplexBox box_prod = complex_interval(x, 80) * complex_interval(y, 80);
        // both boxes contain the exact value, so they cannot be disjoint
        CHECK(!prod_box.disjoint_from(box_prod));
    }
}

TEST_CASE("field axioms on random triples") {
    for (unsigned N : {3u, 4u, 5u, 8u, 12u}) {
        auto ctx = CycCtx::get(N);
        for (int k = 0; k < 25; ++k) {
            CycElt a = rand_cyc(ctx), b = rand_cyc(ctx), c = rand_cyc(ctx);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == CycElt::zero(ctx));
            CycElt nz = rand_cyc_nonzero(ctx);
            CHECK(nz * nz.inv() == CycElt::one(ctx));
        }
    }
}

TEST_CASE("galois composition law") {
    auto ctx = CycCtx::get(12);
    std::vector<long> units{1, 5, 7, 11};
    for (int k = 0; k < 100; ++k) {
        long j = units[rand_int(0, 3)], l = units[rand_int(0, 3)];
        CycElt x = rand_cyc(ctx);
        GaloisAuto sj(ctx, j), sl(ctx, l);
        CHECK(sj(sl(x)) == GaloisAuto(ctx, j * l)(x));
    }
}

TEST_CASE("quadratic-extension conjugation") {
    auto c4 = CycCtx::get(4);
    GaloisAuto c = GaloisAuto::conjugation(c4);
    CycElt i = CycElt::zeta(c4);
    CycElt a1 = CycElt::one(c4) + i; // 1 + i
    CycElt w = -(a1.conj()) / a1;    // |w| = 1
    CHECK((w.conj() * w).is_one());
    QuadExtElt e = QuadExtElt::sqrt_of(w);
    QuadExtElt ec = quadext_conj(e, c);
    // conj(sqrt(w)) = +sqrt(w^c) exactly in the |w| = 1 case
    CHECK(ec.conj_sign() == 1);
    CHECK(ec.radicand() == w.conj());

    SUBCASE("real positive radicand is fixed") {
        auto c8 = CycCtx::get(8);
        QuadExtElt r = QuadExtElt::sqrt_of(CycElt::from_int(c8, 2));
        QuadExtElt rc = quadext_conj(r, GaloisAuto::conjugation(c8));
        CHECK(rc.conj_sign() == 1);
        CHECK(rc.radicand() == CycElt::from_int(c8, 2));
        CHECK(rc == r);
    }
    SUBCASE("real negative radicand flips") {
        auto c8 = CycCtx::get(8);
        QuadExtElt r = QuadExtElt::sqrt_of(CycElt::from_int(c8, -2));
        QuadExtElt rc = quadext_conj(r, GaloisAuto::conjugation(c8));
        CHECK(rc.conj_sign() == -1);
    }
    SUBCASE("materialized root under a non-conjugation element") {
        auto c8 = CycCtx::get(8);
        CycElt s2 = embed_quadratic(c8, rat(2));
        QuadExtElt r = QuadExtElt::sqrt_of(CycElt::from_int(c8, 2), s2);
        GaloisAuto s3(c8, 3); // nontrivial on Q(sqrt 2)
        QuadExtElt rc = quadext_conj(r, s3);
        CHECK(*rc.eval() == -s2);
    }
    SUBCASE("formal root under a non-conjugation element is ambiguous") {
        auto c8 = CycCtx::get(8);
        QuadExtElt r = QuadExtElt::sqrt_of(CycElt::from_int(c8, 2));
        CHECK_THROWS_AS(quadext_conj(r, GaloisAuto(c8, 3)), ambiguous_extension);
    }
}

TEST_CASE("finite fields") {
    for (auto [p, r] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        auto ctx = FqCtx::get(p, r);
        auto all = all_field_elements(ctx);
        unsigned long expected = 1;
        for (unsigned i = 0; i < r; ++i) expected *= p;
        CHECK(all.size() == expected);
        // frobenius is an automorphism
        for (int k = 0; k < 30; ++k) {
            FqElt a = all[static_cast<std::size_t>(rand_int(0, static_cast<long>(all.size()) - 1))];
            FqElt b = all[static_cast<std::size_t>(rand_int(0, static_cast<long>(all.size()) - 1))];
            CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
            CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
        }
    }
    // deterministic modulus: x^2 + 1 over F_3
    auto f9 = FqCtx::get(3, 2);
    CHECK(f9->modulus == std::vector<unsigned>{1, 0, 1});
}
