#pragma once

#include <random>

#include "fomcert/catalog.hpp"
#include "fomcert/homform.hpp"

namespace fomcert::testing {

// fixed-seed generator so every run exercises the same cases
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234u);
    return gen;
}

inline long rand_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rat rand_rat(long max_abs = 9) {
    long num = rand_int(-max_abs, max_abs);
    long den = rand_int(1, max_abs);
    return rat(num, den);
}

inline CycElt rand_cyc(const CtxPtr& ctx, long max_abs = 9) {
    std::vector<Rat> coeffs(ctx->degree);
    for (auto& c : coeffs) c = rand_rat(max_abs);
    return CycElt::from_power_basis(ctx, coeffs);
}

inline CycElt rand_cyc_nonzero(const CtxPtr& ctx, long max_abs = 9) {
    for (;;) {
        CycElt x = rand_cyc(ctx, max_abs);
        if (!x.is_zero()) return x;
    }
}

inline ProjMat<CycElt> rand_mat(const CtxPtr& ctx, unsigned dim, long max_abs = 3) {
    for (;;) {
        std::vector<CycElt> e;
        for (unsigned i = 0; i < dim * dim; ++i) e.push_back(rand_cyc(ctx, max_abs));
        try {
            return ProjMat<CycElt>::make(dim, std::move(e));
        } catch (const singular_matrix&) {
        }
    }
}

inline HomForm<CycElt> rand_form(const CtxPtr& ctx, unsigned nvars, unsigned degree,
                                 long max_abs = 5) {
    HomForm<CycElt> f(nvars, degree);
    for (unsigned a = 0; a <= degree; ++a)
        for (unsigned b = 0; a + b <= degree; ++b) {
            unsigned c = degree - a - b;
            if (nvars == 2 && c != 0) continue;
            if (rand_int(0, 2) == 0) continue; // keep forms sparse-ish
            Expo e = nvars == 2 ? Expo{a, degree - a, 0} : Expo{a, b, c};
            f.add_term(e, CycElt::from_rat(ctx, rand_rat(max_abs)));
        }
    if (f.is_zero()) f.add_term(nvars == 2 ? Expo{degree, 0, 0} : Expo{degree, 0, 0},
                                CycElt::one(ctx));
    return f;
}

inline ProjMat<FqElt> rand_fq_mat(const FqCtxPtr& ctx, unsigned dim) {
    for (;;) {
        std::vector<FqElt> e;
        for (unsigned i = 0; i < dim * dim; ++i)
            e.push_back(FqElt::by_index(ctx, static_cast<unsigned long>(
                                                 rand_int(0, static_cast<long>(ctx->size()) - 1))));
        try {
            return ProjMat<FqElt>::make(dim, std::move(e));
        } catch (const singular_matrix&) {
        }
    }
}

} // namespace fomcert::testing
