#pragma once

#include "fomcert/hyperell.hpp"
#include "fomcert/planecurve.hpp"

namespace fomcert {

// Finite quotient of the Galois group of Q(zeta_N)/Q, as a closed list of
// exponents with the multiplication table implied by composition.
struct GalQuotient {
    CtxPtr ctx;
    std::vector<GaloisAuto> elements; // identity first, then ascending exponent

    static GalQuotient make(CtxPtr ctx, std::vector<long> exps);
    static GalQuotient trivial(CtxPtr ctx);
    static GalQuotient conj_pair(CtxPtr ctx); // {1, c}

    std::size_t size() const { return elements.size(); }
    std::size_t compose(std::size_t i, std::size_t j) const; // sigma_i o sigma_j
};

// ---- plane-curve cocycles ---------------------------------------------------

struct PlaneCocycleFamily {
    GalQuotient quotient;
    PlaneCurve object;
    std::vector<ProjMat<CycElt>> witnesses; // aligned with quotient.elements
};

// every pair identity sigma(M_tau) * M_sigma = M_{sigma tau} in PGL_3, after
// validating each witness as an isomorphism X -> sigma(X)
bool cocycle_verify(const PlaneCocycleFamily& fam);

struct CocycleSearchReport {
    bool definable = false;
    bool no_candidates = false; // some sigma had an empty candidate list
    std::size_t assignments_tried = 0;
    std::vector<std::size_t> chosen; // indices into the candidate lists
};

// Backtracking over the per-sigma candidate lists (completeness is the
// caller's declared assumption); deterministic candidate order decides which
// family is reported first.
CocycleSearchReport cocycle_search_plane(
    const PlaneCurve& x, const GalQuotient& quotient,
    const std::vector<std::vector<ProjMat<CycElt>>>& candidates, bool parallel = true);

// ---- hyperelliptic cocycles -------------------------------------------------

struct HyperCocycleFamily {
    GalQuotient quotient;
    HyperCurve object;
    std::vector<IsomWitness> witnesses;
};

// Moebius layer strictly; scalar layer at the lambda level, with the e-sign
// resolved through the certified conjugation rules where conjugation is
// involved (the C2 quotient), and the lambda identity checked in general.
bool cocycle_verify(const HyperCocycleFamily& fam);

// ---- subgroup lattice -------------------------------------------------------

// All subgroups of a finite matrix group, as sorted index sets into
// g.elements. Exhaustive: closure of every extension of every known subgroup.
template <FieldValue K>
std::vector<std::vector<std::size_t>> subgroup_lattice(const MatGroup<K>& g);

// ---- norm equation over Q(omega) -------------------------------------------

// a + b*omega with omega^2 = -1 - omega (primitive cube root of unity)
struct QwElt {
    Rat a, b;

    QwElt operator+(const QwElt& o) const { return {a + o.a, b + o.b}; }
    QwElt operator-(const QwElt& o) const { return {a - o.a, b - o.b}; }
    QwElt operator*(const QwElt& o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    QwElt conj() const { return {a - b, -b}; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const QwElt& o) const { return a == o.a && b == o.b; }
    std::string str() const { return rat_str(a) + " + (" + rat_str(b) + ")w"; }
};

// exact solver for x^2 = w in Q(omega)
std::optional<QwElt> qw_sqrt(const QwElt& w);

struct NormEqProblem {
    Rat u, v;
    long bound = 50;
};

struct NormEqResult {
    bool found = false;
    QwElt x, y;
};

// Search -u = x^2 + v y^2: y ranges over (d + e*omega)/c with |d|,|e| <= B
// and 1 <= c <= B; x is then solved exactly, so every solution whose
// y-height is within the bound is found.
NormEqResult norm_eq_search(const NormEqProblem& prob);

// Modular obstruction certificate for the projectivized equation
// x^2 + v y^2 + u z^2 = 0: true iff no primitive triple exists mod p^k
// (a global solution would reduce to one). Split primes (p = 1 mod 3) check
// the rational congruence per factor; inert primes work in Z[omega]/(p^k);
// p = 3 and primes dividing the denominators of u, v are unsupported.
bool mod_certificate_verify(const Rat& u, const Rat& v, unsigned p, unsigned k);

// scan helper: smallest (p, k) with p prime, p^k <= max_modulus, for which
// the certificate holds
std::optional<std::pair<unsigned, unsigned>> find_obstruction_modulus(const Rat& u, const Rat& v,
                                                                      unsigned long max_modulus);

// ---- template implementation ------------------------------------------------

template <FieldValue K>
std::vector<std::vector<std::size_t>> subgroup_lattice(const MatGroup<K>& g) {
    const std::size_t n = g.order();
    // multiplication table in index space
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    auto index_of = [&](const ProjMat<K>& m) {
        auto it = std::lower_bound(g.elements.begin(), g.elements.end(), m);
        return static_cast<std::size_t>(it - g.elements.begin());
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul[i][j] = index_of(g.elements[i] * g.elements[j]);
    std::size_t id = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.elements[i].is_identity()) id = i;

    auto close_indices = [&](std::vector<std::size_t> seed) {
        std::vector<bool> in(n, false);
        std::vector<std::size_t> members;
        auto add = [&](std::size_t k) {
            if (!in[k]) {
                in[k] = true;
                members.push_back(k);
            }
        };
        add(id);
        for (std::size_t s : seed) add(s);
        for (std::size_t head = 0; head < members.size(); ++head)
            for (std::size_t j = 0; j < members.size(); ++j) {
                add(mul[members[head]][members[j]]);
                add(mul[members[j]][members[head]]);
            }
        std::sort(members.begin(), members.end());
        return members;
    };

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> triv{id};
    seen.insert(triv);
    queue.push_back(triv);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::vector<std::size_t> h = queue[head];
        std::vector<bool> in(n, false);
        for (std::size_t k : h) in[k] = true;
        for (std::size_t cand = 0; cand < n; ++cand) {
            if (in[cand]) continue;
            std::vector<std::size_t> seed = h;
            seed.push_back(cand);
            std::vector<std::size_t> ext = close_indices(std::move(seed));
            if (seen.insert(ext).second) queue.push_back(std::move(ext));
        }
    }
    return {queue.begin(), queue.end()};
}

} // namespace fomcert
