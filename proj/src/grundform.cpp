#include "fomcert/grundform.hpp"

namespace fomcert {

namespace {

HomForm<CycElt> binary_from(const CtxPtr& ctx,
                            std::initializer_list<std::pair<std::array<unsigned, 2>, CycElt>> ts) {
    unsigned deg = 0;
    for (const auto& t : ts) deg = std::max(deg, t.first[0] + t.first[1]);
    HomForm<CycElt> f(2, deg);
    for (const auto& t : ts) f.add_term({t.first[0], t.first[1], 0}, t.second);
    return f;
}

HomForm<CycElt> binary_int(const CtxPtr& ctx,
                           std::initializer_list<std::pair<std::array<unsigned, 2>, long>> ts) {
    unsigned deg = 0;
    for (const auto& t : ts) deg = std::max(deg, t.first[0] + t.first[1]);
    HomForm<CycElt> f(2, deg);
    for (const auto& t : ts)
        f.add_term({t.first[0], t.first[1], 0}, CycElt::from_int(ctx, t.second));
    return f;
}

} // namespace

std::vector<HomForm<CycElt>> grundforms_Cn(const CtxPtr& ctx, unsigned n) {
    if (n < 2) throw std::invalid_argument("C_n Grundformen need n > 1");
    return {binary_int(ctx, {{{1, 0}, 1}}), binary_int(ctx, {{{0, 1}, 1}})};
}

std::vector<HomForm<CycElt>> grundforms_D2n(const CtxPtr& ctx, unsigned n) {
    if (n < 2) throw std::invalid_argument("D_2n Grundformen need n > 1");
    return {binary_int(ctx, {{{1, 1}, 1}}),
            binary_int(ctx, {{{n, 0}, 1}, {{0, n}, -1}}),
            binary_int(ctx, {{{n, 0}, 1}, {{0, n}, 1}})};
}

std::vector<HomForm<CycElt>> grundforms_A4(const CtxPtr& ctx) {
    CycElt s = embed_quadratic(ctx, rat(-3)); // i*sqrt(3) under the embedding
    CycElt two_s = CycElt::from_int(ctx, 2) * s;
    return {binary_int(ctx, {{{5, 1}, 1}, {{1, 5}, -1}}),
            binary_from(ctx, {{{4, 0}, CycElt::one(ctx)},
                              {{2, 2}, two_s},
                              {{0, 4}, CycElt::one(ctx)}}),
            binary_from(ctx, {{{4, 0}, CycElt::one(ctx)},
                              {{2, 2}, -two_s},
                              {{0, 4}, CycElt::one(ctx)}})};
}

std::vector<HomForm<CycElt>> grundforms_S4(const CtxPtr& ctx) {
    return {binary_int(ctx, {{{12, 0}, 1}, {{8, 4}, -33}, {{4, 8}, -33}, {{0, 12}, 1}}),
            binary_int(ctx, {{{8, 0}, 1}, {{4, 4}, 14}, {{0, 8}, 1}}),
            binary_int(ctx, {{{5, 1}, 1}, {{1, 5}, -1}})};
}

std::vector<HomForm<CycElt>> grundforms_A5(const CtxPtr& ctx) {
    return {binary_int(ctx, {{{11, 1}, 1}, {{6, 6}, 11}, {{1, 11}, -1}}),
            binary_int(ctx, {{{20, 0}, -1},
                             {{0, 20}, -1},
                             {{15, 5}, 228},
                             {{5, 15}, -228},
                             {{10, 10}, -494}}),
            binary_int(ctx, {{{30, 0}, 1},
                             {{0, 30}, 1},
                             {{25, 5}, 522},
                             {{5, 25}, -522},
                             {{20, 10}, -10005},
                             {{10, 20}, -10005}})};
}

HomForm<CycElt> a5_degree30_printed_variant(const CtxPtr& ctx) {
    // the printed text repeats X0^20 X1^10 instead of the symmetric partner
    return binary_int(ctx, {{{30, 0}, 1},
                            {{0, 30}, 1},
                            {{25, 5}, 522},
                            {{5, 25}, -522},
                            {{20, 10}, -10005 - 10005}});
}

std::vector<HomForm<FqElt>> grundforms_G_beta_A(const FqCtxPtr& ctx, const FqElt& beta,
                                                const std::vector<FqElt>& A) {
    FqElt one = FqElt::one(ctx);
    HomForm<FqElt> x1 = HomForm<FqElt>::monomial(2, {0, 1, 0}, one);
    HomForm<FqElt> prod = HomForm<FqElt>::monomial(2, {0, 0, 0}, one);
    for (const FqElt& a : A) {
        HomForm<FqElt> lin(2, 1);
        lin.add_term({1, 0, 0}, one);
        lin.add_term({0, 1, 0}, -a);
        prod = prod * lin;
    }
    if (beta.is_one()) return {x1};
    return {x1, prod};
}

namespace {

std::vector<HomForm<FqElt>> psl2_minforms(const FqCtxPtr& ctx) {
    const unsigned q = static_cast<unsigned>(ctx->size());
    FqElt one = FqElt::one(ctx);
    // X0^q - X0 X1^(q-1)
    HomForm<FqElt> base(2, q);
    base.add_term({q, 0, 0}, one);
    base.add_term({1, q - 1, 0}, -one);
    HomForm<FqElt> first = base.pow(q - 1);
    HomForm<FqElt> x1_pow = HomForm<FqElt>::monomial(2, {0, q * (q - 1), 0}, one);
    first = first + x1_pow;
    HomForm<FqElt> second = base * HomForm<FqElt>::monomial(2, {0, 1, 0}, one);
    return {first, second};
}

} // namespace

std::vector<HomForm<FqElt>> grundforms_PSL2(const FqCtxPtr& ctx) { return psl2_minforms(ctx); }
std::vector<HomForm<FqElt>> grundforms_PGL2(const FqCtxPtr& ctx) { return psl2_minforms(ctx); }

} // namespace fomcert
