#include "fomcert/descent.hpp"

#include <numeric>

namespace fomcert {

GalQuotient GalQuotient::make(CtxPtr ctx, std::vector<long> exps) {
    const long N = static_cast<long>(ctx->order);
    std::vector<unsigned> ks;
    for (long e : exps) {
        long r = ((e % N) + N) % N;
        if (std::gcd(r, N) != 1) throw std::invalid_argument("exponent not coprime with N");
        ks.push_back(static_cast<unsigned>(r));
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.empty() || ks.front() != 1) {
        ks.insert(ks.begin(), 1u);
        std::sort(ks.begin(), ks.end());
        ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    }
    // closure under composition
    for (unsigned a : ks)
        for (unsigned b : ks) {
            unsigned c = static_cast<unsigned>((static_cast<unsigned long>(a) * b) % N);
            if (!std::binary_search(ks.begin(), ks.end(), c))
                throw std::invalid_argument("exponent list is not closed under composition");
        }
    GalQuotient q;
    q.ctx = ctx;
    for (unsigned k : ks) q.elements.emplace_back(ctx, static_cast<long>(k));
    // identity first
    std::stable_sort(q.elements.begin(), q.elements.end(),
                     [](const GaloisAuto& x, const GaloisAuto& y) {
                         if ((x.k == 1) != (y.k == 1)) return x.k == 1;
                         return x.k < y.k;
                     });
    return q;
}

GalQuotient GalQuotient::trivial(CtxPtr ctx) { return make(std::move(ctx), {1}); }

GalQuotient GalQuotient::conj_pair(CtxPtr ctx) {
    long N = static_cast<long>(ctx->order);
    if (N <= 2) return trivial(std::move(ctx));
    return make(std::move(ctx), {1, N - 1});
}

std::size_t GalQuotient::compose(std::size_t i, std::size_t j) const {
    unsigned long k =
        (static_cast<unsigned long>(elements[i].k) * elements[j].k) % ctx->order;
    for (std::size_t t = 0; t < elements.size(); ++t)
        if (elements[t].k == k) return t;
    throw std::logic_error("quotient not closed");
}

namespace {

ProjMat<CycElt> conj_mat(const GaloisAuto& sigma, const ProjMat<CycElt>& m) {
    std::vector<CycElt> e;
    e.reserve(m.entries().size());
    for (const CycElt& v : m.entries()) e.push_back(sigma(v));
    return ProjMat<CycElt>::make(m.dim(), std::move(e));
}

bool plane_witness_ok(const PlaneCurve& x, const GaloisAuto& sigma,
                      const ProjMat<CycElt>& m) {
    return proj_eq(x.form.acted_by(m), conj_plane(sigma, x).form);
}

} // namespace

bool cocycle_verify(const PlaneCocycleFamily& fam) {
    const auto& q = fam.quotient;
    if (fam.witnesses.size() != q.size())
        throw std::invalid_argument("one witness per quotient element required");
    for (std::size_t i = 0; i < q.size(); ++i)
        if (!plane_witness_ok(fam.object, q.elements[i], fam.witnesses[i]))
            throw std::invalid_argument("witness " + std::to_string(i) +
                                        " is not an isomorphism onto the conjugate curve");
    for (std::size_t s = 0; s < q.size(); ++s)
        for (std::size_t t = 0; t < q.size(); ++t) {
            ProjMat<CycElt> lhs = conj_mat(q.elements[s], fam.witnesses[t]) * fam.witnesses[s];
            if (lhs != fam.witnesses[q.compose(s, t)]) return false;
        }
    return true;
}

CocycleSearchReport cocycle_search_plane(
    const PlaneCurve& x, const GalQuotient& quotient,
    const std::vector<std::vector<ProjMat<CycElt>>>& candidates, bool parallel) {
    (void)parallel;
    CocycleSearchReport rep;
    if (candidates.size() != quotient.size())
        throw std::invalid_argument("one candidate list per quotient element required");
    for (const auto& list : candidates)
        if (list.empty()) {
            rep.no_candidates = true;
            return rep;
        }
    // validate candidates once
    for (std::size_t i = 0; i < quotient.size(); ++i)
        for (const auto& m : candidates[i])
            if (!plane_witness_ok(x, quotient.elements[i], m))
                throw std::invalid_argument("candidate for quotient element " +
                                            std::to_string(i) + " is not an isomorphism");

    std::vector<std::size_t> pick(quotient.size(), 0);
    // identity element should sit at index 0
    std::vector<ProjMat<CycElt>> chosen(quotient.size(),
                                        ProjMat<CycElt>::identity(3, x.form.sample()));

    // backtracking with pairwise consistency among assigned prefix
    std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
        if (pos == quotient.size()) return true;
        for (std::size_t c = 0; c < candidates[pos].size(); ++c) {
            pick[pos] = c;
            chosen[pos] = candidates[pos][c];
            // the identity element's witness is forced to the identity by the
            // cocycle equation; placing it is not a real attempt
            if (!(quotient.elements[pos].is_identity() && chosen[pos].is_identity()))
                ++rep.assignments_tried;
            bool ok = true;
            for (std::size_t s = 0; s <= pos && ok; ++s)
                for (std::size_t t = 0; t <= pos && ok; ++t) {
                    std::size_t st = quotient.compose(s, t);
                    if (st > pos) continue;
                    ProjMat<CycElt> lhs =
                        conj_mat(quotient.elements[s], chosen[t]) * chosen[s];
                    if (lhs != chosen[st]) ok = false;
                }
            if (ok && assign(pos + 1)) return true;
        }
        return false;
    };
    rep.definable = assign(0);
    if (rep.definable) rep.chosen = pick;
    return rep;
}

bool cocycle_verify(const HyperCocycleFamily& fam) {
    const auto& q = fam.quotient;
    if (fam.witnesses.size() != q.size())
        throw std::invalid_argument("one witness per quotient element required");
    for (std::size_t i = 0; i < q.size(); ++i) {
        HyperCurve target = conj_curve(q.elements[i], fam.object);
        if (!is_isom_witness(fam.object, target, fam.witnesses[i]))
            throw std::invalid_argument("witness " + std::to_string(i) +
                                        " is not an isomorphism onto the conjugate curve");
    }
    const unsigned gp1 = fam.object.genus + 1;
    for (std::size_t s = 0; s < q.size(); ++s)
        for (std::size_t t = 0; t < q.size(); ++t) {
            IsomWitness lhs = compose(conj_witness(q.elements[s], fam.witnesses[t]),
                                      fam.witnesses[s]);
            const IsomWitness& rhs = fam.witnesses[q.compose(s, t)];
            // Moebius layer: strict equality in PGL_2
            if (lhs.mobius() != rhs.mobius()) return false;
            // lift discrepancy mu: lhs.m = mu * rhs.m entrywise
            CycElt mu;
            bool have = false;
            for (int i = 0; i < 4 && !have; ++i)
                if (!rhs.m[i].is_zero()) {
                    mu = lhs.m[i] / rhs.m[i];
                    have = true;
                }
            if (!have) return false;
            // scalar layer at the lambda level
            CycElt mu_pow = mu.pow(2 * static_cast<long>(gp1));
            if (!(lhs.lambda == rhs.lambda * mu_pow)) return false;
        }
    // sign layer: for the conjugation pair the positivity rule decides
    for (std::size_t s = 0; s < q.size(); ++s) {
        if (q.elements[s].k == q.ctx->order - 1) {
            if (!c2_cocycle_holds(fam.object, fam.witnesses[s])) return false;
        }
    }
    return true;
}

std::optional<QwElt> qw_sqrt(const QwElt& w) {
    // (p + q w)^2 = (p^2 - q^2) + (2pq - q^2) w
    if (w.is_zero()) return QwElt{rat(0), rat(0)};
    if (w.b == 0) {
        // rational radicand: either q = 0 and p^2 = a, or q = 2p and the
        // square is -3p^2 (that is, p(1 + 2 omega) = p sqrt(-3))
        Rat r;
        if (rat_is_square(w.a, r)) return QwElt{r, rat(0)};
        Rat p;
        if (rat_is_square(-w.a / 3, p)) return QwElt{p, p + p};
        return std::nullopt;
    }
    // q != 0: p = (b + q^2) / (2q), and 3q^4 + (4a - 2b) q^2 - b^2 = 0
    const Rat &a = w.a, &b = w.b;
    Rat A = rat(3), B = 4 * a - 2 * b, C = -(b * b);
    Rat disc = B * B - 4 * A * C;
    Rat sq;
    if (!rat_is_square(disc, sq)) return std::nullopt;
    for (int sign : {1, -1}) {
        Rat q2 = (-B + (sign > 0 ? sq : -sq)) / (2 * A);
        if (q2 < 0) continue;
        Rat q;
        if (!rat_is_square(q2, q)) continue;
        if (q == 0) continue;
        Rat p = (b + q2) / (2 * q);
        QwElt cand{p, q};
        if (cand * cand == w) return cand;
    }
    return std::nullopt;
}

NormEqResult norm_eq_search(const NormEqProblem& prob) {
    if (prob.u == 0 || prob.v == 0) throw std::invalid_argument("u, v must be nonzero");
    NormEqResult res;
    for (long c = 1; c <= prob.bound; ++c)
        for (long d = -prob.bound; d <= prob.bound; ++d)
            for (long e = -prob.bound; e <= prob.bound; ++e) {
                QwElt y{rat(d, c), rat(e, c)};
                QwElt target{-prob.u - prob.v * (y * y).a, -(prob.v * (y * y).b)};
                auto x = qw_sqrt(target);
                if (x) {
                    res.found = true;
                    res.x = *x;
                    res.y = y;
                    return res;
                }
            }
    return res;
}

namespace {

bool is_rational_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long mod_reduce(const Rat& x, unsigned long m) {
    // x with denominator prime to m
    Int num = x.get_num() % static_cast<long>(m);
    Int den = x.get_den() % static_cast<long>(m);
    Int d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t(),
               Int(static_cast<long>(m)).get_mpz_t());
    if (d != 1) throw std::invalid_argument("denominator not invertible mod p^k");
    Int r = (num * s) % static_cast<long>(m);
    long rr = r.get_si() % static_cast<long>(m);
    if (rr < 0) rr += static_cast<long>(m);
    return rr;
}

} // namespace

bool mod_certificate_verify(const Rat& u, const Rat& v, unsigned p, unsigned k) {
    if (!is_rational_prime(p) || k < 1) throw std::invalid_argument("need a prime p and k >= 1");
    if (p == 3) throw std::invalid_argument("p = 3 is ramified in Q(omega); unsupported");
    unsigned long m = 1;
    for (unsigned i = 0; i < k; ++i) m *= p;
    if (u.get_den() % p == 0 || v.get_den() % p == 0)
        throw std::invalid_argument("p divides a denominator of u or v");
    const long uu = mod_reduce(u, m), vv = mod_reduce(v, m);

    if (p % 3 == 1) {
        // split: each factor of Z[omega]/(p^k) is Z/p^k and u, v are rational,
        // so the per-factor condition is the rational congruence
        for (unsigned long x = 0; x < m; ++x)
            for (unsigned long y = 0; y < m; ++y)
                for (unsigned long z = 0; z < m; ++z) {
                    if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                    unsigned long val =
                        (x * x + static_cast<unsigned long>(vv) * y % m * y +
                         static_cast<unsigned long>(uu) * z % m * z) % m;
                    if (val == 0) return false;
                }
        return true;
    }

    // inert: work with pairs (a + b omega) mod p^k
    auto sq = [&](unsigned long a, unsigned long b) {
        // (a + b w)^2 = (a^2 - b^2) + (2ab - b^2) w
        unsigned long s1 = (a * a % m + m - b * b % m) % m;
        unsigned long s2 = (2 * a % m * b % m + m - b * b % m) % m;
        return std::pair<unsigned long, unsigned long>{s1, s2};
    };
    for (unsigned long xa = 0; xa < m; ++xa)
        for (unsigned long xb = 0; xb < m; ++xb) {
            auto x2 = sq(xa, xb);
            for (unsigned long ya = 0; ya < m; ++ya)
                for (unsigned long yb = 0; yb < m; ++yb) {
                    auto y2 = sq(ya, yb);
                    for (unsigned long za = 0; za < m; ++za)
                        for (unsigned long zb = 0; zb < m; ++zb) {
                            bool prim = xa % p || xb % p || ya % p || yb % p || za % p || zb % p;
                            if (!prim) continue;
                            auto z2 = sq(za, zb);
                            unsigned long c1 =
                                (x2.first + static_cast<unsigned long>(vv) * y2.first +
                                 static_cast<unsigned long>(uu) * z2.first) % m;
                            unsigned long c2 =
                                (x2.second + static_cast<unsigned long>(vv) * y2.second +
                                 static_cast<unsigned long>(uu) * z2.second) % m;
                            if (c1 == 0 && c2 == 0) return false;
                        }
                }
        }
    return true;
}

std::optional<std::pair<unsigned, unsigned>> find_obstruction_modulus(const Rat& u, const Rat& v,
                                                                      unsigned long max_modulus) {
    for (unsigned long m = 2; m <= max_modulus; ++m) {
        // prime powers only
        unsigned long t = m;
        unsigned p = 0;
        for (unsigned d = 2; d <= t; ++d)
            if (t % d == 0) {
                p = d;
                break;
            }
        if (p == 0 || p == 3) continue;
        unsigned k = 0;
        while (t % p == 0) {
            t /= p;
            ++k;
        }
        if (t != 1) continue;
        // inert moduli enumerate m^6 triples; keep the scan to small ones
        if (p % 3 == 2 && m > 16) continue;
        if (u.get_den() % p == 0 || v.get_den() % p == 0) continue;
        try {
            if (mod_certificate_verify(u, v, p, k)) return std::make_pair(p, k);
        } catch (const std::exception&) {
            continue;
        }
    }
    return std::nullopt;
}

} // namespace fomcert
