#pragma once

#include "fomcert/homform.hpp"
#include "fomcert/matgroup.hpp"

namespace fomcert {

struct not_in_normalizer : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {M in G : ([f])M = [f]}; the scan over elements is data-parallel.
template <FieldValue K>
MatGroup<K> stabilizer_form(const HomForm<K>& f, const MatGroup<K>& g, bool parallel = true) {
    auto check = [&](std::size_t i) { return proj_eq(f.acted_by(g.elements[i]), f) ? 1 : 0; };
    std::vector<int> keep = parallel ? par_map<int>(g.order(), check)
                                     : serial_map<int>(g.order(), check);
    std::vector<ProjMat<K>> elems;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (keep[i]) elems.push_back(g.elements[i]);
    return subgroup_from_elements(g, std::move(elems));
}

template <FieldValue K>
MatGroup<K> stabilizer_form_serial(const HomForm<K>& f, const MatGroup<K>& g) {
    return stabilizer_form(f, g, false);
}

// Is f invariant (projectively) under every generator of g?
template <FieldValue K>
bool invariant_under_generators(const HomForm<K>& f, const MatGroup<K>& g) {
    for (const auto& m : g.gens)
        if (!proj_eq(f.acted_by(m), f)) return false;
    return true;
}

// --- binary-form utilities -------------------------------------------------

// multiplicity of the point [1:0] in a binary form of declared degree d
template <FieldValue K>
unsigned mult_at_infinity(const HomForm<K>& f) {
    unsigned best = f.degree() + 1;
    for (const Expo& e : f.support()) best = std::min(best, e[1]);
    return best;
}

template <FieldValue K>
Poly<K> dehom_x(const HomForm<K>& f, const K& sample) {
    // f(x, 1)
    std::vector<K> c(f.degree() + 1, zero_like(sample));
    for (const auto& [e, v] : f.terms()) c[e[0]] = c[e[0]] + v;
    return Poly<K>(std::move(c));
}

// Squarefreeness of a binary form, equivalently gcd(f, df/dX0, df/dX1)
// constant: the factor X1 contributes mult_at_infinity, the rest reduces to
// the univariate dehomogenization (checked division-free).
template <FieldValue K>
bool binary_squarefree(const HomForm<K>& f) {
    if (f.nvars() != 2) throw std::invalid_argument("binary form expected");
    if (f.is_zero()) return false;
    if (mult_at_infinity(f) >= 2) return false;
    return poly_squarefree(dehom_x(f, f.sample()));
}

// product over the orbit points [alpha : beta] of (beta X0 - alpha X1)
template <FieldValue K>
HomForm<K> orbit_form(const MatGroup<K>& g, const ProjPoint<K>& p) {
    if (p.x.size() != 2) throw std::invalid_argument("orbit form needs a point of P^1");
    std::vector<ProjPoint<K>> pts = orbit(g, p);
    const K sample = p.x[0].is_zero() ? p.x[1] : p.x[0];
    HomForm<K> f = HomForm<K>::monomial(2, {0, 0, 0}, one_like(sample));
    for (const auto& q : pts) {
        HomForm<K> lin(2, 1);
        lin.add_term({1, 0, 0}, q.x[1]);
        lin.add_term({0, 1, 0}, -q.x[0]);
        f = f * lin;
    }
    for (const auto& m : g.gens)
        if (!proj_eq(f.acted_by(m), f))
            throw std::logic_error("orbit form is not invariant under its group");
    return f;
}

// --- Grundform catalog -------------------------------------------------------

std::vector<HomForm<CycElt>> grundforms_Cn(const CtxPtr& ctx, unsigned n);
std::vector<HomForm<CycElt>> grundforms_D2n(const CtxPtr& ctx, unsigned n);
std::vector<HomForm<CycElt>> grundforms_A4(const CtxPtr& ctx);
std::vector<HomForm<CycElt>> grundforms_S4(const CtxPtr& ctx);
std::vector<HomForm<CycElt>> grundforms_A5(const CtxPtr& ctx);
// the degree-30 invariant exactly as printed in the source text (one exponent
// pair repeated); fails the invariance check, kept for the regression test
HomForm<CycElt> a5_degree30_printed_variant(const CtxPtr& ctx);
std::vector<HomForm<FqElt>> grundforms_G_beta_A(const FqCtxPtr& ctx, const FqElt& beta,
                                                const std::vector<FqElt>& A);
std::vector<HomForm<FqElt>> grundforms_PSL2(const FqCtxPtr& ctx);
std::vector<HomForm<FqElt>> grundforms_PGL2(const FqCtxPtr& ctx);

// --- Moebius substitution and induced maps on quotient coordinates ----------

// p((a x + b) / (c x + d)) * (c x + d)^target_deg
template <FieldValue K>
Poly<K> mobius_numerator(const Poly<K>& p, const K& a, const K& b, const K& c, const K& d,
                         unsigned target_deg) {
    if (static_cast<long>(target_deg) < p.degree())
        throw std::invalid_argument("target degree too small");
    const K zero = zero_like(a);
    Poly<K> acc = Poly<K>::zero(a);
    Poly<K> num(std::vector<K>{b, a});   // a x + b
    Poly<K> den(std::vector<K>{d, c});   // c x + d
    // powers
    std::vector<Poly<K>> num_pow{Poly<K>::constant(one_like(a))};
    std::vector<Poly<K>> den_pow{Poly<K>::constant(one_like(a))};
    for (unsigned i = 1; i <= target_deg; ++i) {
        num_pow.push_back(num_pow.back() * num);
        den_pow.push_back(den_pow.back() * den);
    }
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        acc = acc + (num_pow[i] * den_pow[target_deg - i]).scaled(p.coeffs()[i]);
    }
    return acc;
}

template <FieldValue K>
RatFunc<K> ratfunc_precompose_mobius(const RatFunc<K>& t, const ProjMat<K>& m) {
    if (m.dim() != 2) throw std::invalid_argument("Moebius matrix expected");
    unsigned d = static_cast<unsigned>(std::max(t.num.degree(), t.den.degree()));
    Poly<K> p = mobius_numerator(t.num, m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1), d);
    Poly<K> q = mobius_numerator(t.den, m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1), d);
    return RatFunc<K>::make(p, q);
}

// The unique Moebius phi with t(M x) = phi(t(x)), solved from the linear
// system in phi's four coefficients and verified exactly. Raises
// not_in_normalizer when no such phi exists.
template <FieldValue K>
ProjMat<K> induced_map(const RatFunc<K>& t, const ProjMat<K>& m) {
    RatFunc<K> tm = ratfunc_precompose_mobius(t, m);
    const K zero = zero_like(m.at(0, 0));
    // tm = (alpha t + beta) / (gamma t + delta), cross-multiplied:
    // P (gamma p + delta q) - Q (alpha p + beta q) = 0,
    // with t = p/q and tm = P/Q.
    Poly<K> Pp = tm.num * t.num, Pq = tm.num * t.den;
    Poly<K> Qp = tm.den * t.num, Qq = tm.den * t.den;
    long rows_n = std::max(std::max(Pp.degree(), Pq.degree()),
                           std::max(Qp.degree(), Qq.degree())) + 1;
    // columns: alpha, beta, gamma, delta
    std::vector<std::vector<K>> rows;
    for (long k = 0; k < rows_n; ++k)
        rows.push_back({-Qp.coeff_or_zero(k), -Qq.coeff_or_zero(k), Pp.coeff_or_zero(k),
                        Pq.coeff_or_zero(k)});
    // Gaussian elimination to reduced row echelon form
    std::size_t rank = 0;
    std::vector<int> pivot_col;
    for (unsigned col = 0; col < 4 && rank < rows.size(); ++col) {
        std::size_t pr = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        K inv = rows[rank][col].inv();
        for (unsigned j = 0; j < 4; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            K f = rows[r][col];
            for (unsigned j = 0; j < 4; ++j) rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    if (rank == 4) throw not_in_normalizer("no Moebius map matches the transformed invariant");
    // free column = first non-pivot; set it to 1
    std::vector<K> sol(4, zero);
    unsigned free_col = 0;
    for (unsigned col = 0; col < 4; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(col)) ==
            pivot_col.end()) {
            free_col = col;
            break;
        }
    }
    sol[free_col] = one_like(zero);
    for (std::size_t r = 0; r < rank; ++r)
        sol[pivot_col[r]] = -rows[r][free_col];
    K det = sol[0] * sol[3] - sol[1] * sol[2];
    if (det.is_zero()) throw not_in_normalizer("matched map is singular");
    ProjMat<K> phi = ProjMat<K>::make(2, {sol[0], sol[1], sol[2], sol[3]});
    // exact verification: tm == (alpha t + beta)/(gamma t + delta)
    Poly<K> lhs = tm.num * (t.num.scaled(phi.at(1, 0)) + t.den.scaled(phi.at(1, 1)));
    Poly<K> rhs = tm.den * (t.num.scaled(phi.at(0, 0)) + t.den.scaled(phi.at(0, 1)));
    if (!(lhs == rhs)) throw not_in_normalizer("candidate induced map failed verification");
    return phi;
}

} // namespace fomcert
