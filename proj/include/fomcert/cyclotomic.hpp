#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fomcert/rational.hpp"

namespace fomcert {

class CycCtx;
using CtxPtr = std::shared_ptr<const CycCtx>;

// Context for Q(zeta_N): the cyclotomic polynomial Phi_N and reduction data.
// Contexts are immutable and cached per N; share freely across threads.
class CycCtx {
public:
    unsigned order;            // N
    unsigned degree;           // phi(N)
    std::vector<Int> min_poly; // Phi_N, ascending coefficients, monic, length degree+1

    static CtxPtr get(unsigned N);

    // x^k reduced mod Phi_N, 0 <= k < N; integer coordinates in the power basis.
    const std::vector<Int>& power_mod(unsigned k) const { return pow_mod_[k]; }

    bool operator==(const CycCtx& o) const { return order == o.order; }

private:
    explicit CycCtx(unsigned N);
    std::vector<std::vector<Int>> pow_mod_;
};

unsigned euler_phi(unsigned n);
std::vector<Int> cyclotomic_poly(unsigned n); // Phi_n over Z, ascending

// Element of Q(zeta_N), stored as a sparse sum of c_k * zeta^k with exponents
// in [0, N). The representation is redundant; the power basis (exponents below
// phi(N)) is the canonical form and everything observable — equality, ordering,
// serialization — goes through it. Values are immutable.
class CycElt {
public:
    CycElt() = default;

    static CycElt zero(CtxPtr ctx);
    static CycElt one(CtxPtr ctx);
    static CycElt from_rat(CtxPtr ctx, const Rat& q);
    static CycElt from_int(CtxPtr ctx, long v) { return from_rat(ctx, rat(v)); }
    static CycElt zeta(CtxPtr ctx, long k = 1); // zeta_N^k
    // Power-basis constructor; rejects vectors longer than phi(N), naming the
    // first offending index.
    static CycElt from_power_basis(CtxPtr ctx, const std::vector<Rat>& coeffs);
    static CycElt from_terms(CtxPtr ctx, std::vector<std::pair<unsigned, Rat>> terms);

    const CtxPtr& ctx() const { return ctx_; }
    bool valid() const { return ctx_ != nullptr; }
    const std::vector<std::pair<unsigned, Rat>>& terms() const { return terms_; }

    CycElt operator+(const CycElt& o) const;
    CycElt operator-(const CycElt& o) const;
    CycElt operator-() const;
    CycElt operator*(const CycElt& o) const;
    CycElt scaled(const Rat& q) const;
    CycElt inv() const;
    CycElt operator/(const CycElt& o) const { return *this * o.inv(); }
    CycElt pow(long e) const;

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const CycElt& o) const;
    bool operator!=(const CycElt& o) const { return !(*this == o); }
    // Total order via lexicographic comparison of power-basis coordinates.
    int cmp(const CycElt& o) const;

    // Canonical coordinates in the basis 1, zeta, ..., zeta^{phi(N)-1}.
    std::vector<Rat> power_basis() const;
    CycElt normalized() const;           // canonical sparse form
    std::optional<Rat> as_rational() const;

    // zeta -> zeta^k for gcd(k, N) = 1; a ring automorphism.
    CycElt galois(long k) const;
    CycElt conj() const;                 // k = N-1: complex conjugation

    // Lift into a larger context (order must divide big->order).
    CycElt lift_to(const CtxPtr& big) const;

    std::string str() const;             // power-basis pretty form

private:
    CtxPtr ctx_;
    std::vector<std::pair<unsigned, Rat>> terms_; // sorted by exponent, no zeros
    friend class CycCtx;
};

inline CycElt operator*(const Rat& q, const CycElt& x) { return x.scaled(q); }

// sigma_k on Q(zeta_N): zeta -> zeta^k.
struct GaloisAuto {
    CtxPtr ctx;
    unsigned k = 1;

    GaloisAuto() = default;
    GaloisAuto(CtxPtr c, long kk);

    CycElt operator()(const CycElt& x) const;
    GaloisAuto compose(const GaloisAuto& inner) const; // this after inner
    bool is_identity() const { return k == 1; }
    bool operator==(const GaloisAuto& o) const { return ctx->order == o.ctx->order && k == o.k; }

    static GaloisAuto identity(CtxPtr c) { return GaloisAuto(std::move(c), 1); }
    static GaloisAuto conjugation(CtxPtr c);
};

// Primitive n-th root of unity inside Q(zeta_N). Exists iff n | N, or n = 2m
// with m odd and m | N (then zeta_n = -zeta_m^((m+1)/2)). The error names the
// minimal admissible context.
CycElt root_of_unity(const CtxPtr& ctx, unsigned n);
unsigned min_ctx_for_root(unsigned n);
bool ctx_has_root(const CtxPtr& ctx, unsigned n);

// Legendre symbol (a|p) for odd prime p.
int legendre_symbol(long a, long p);

// Conductor of Q(sqrt(d)) for nonzero rational d (of its squarefree core).
unsigned quadratic_conductor(const Rat& d);

// Square root of a nonzero rational inside Q(zeta_N), built from quadratic
// Gauss sums. Requires conductor(d) | N; the error names the minimal context.
// Sign convention under zeta_N -> exp(2*pi*i/N): positive real part, and for
// d < 0 positive imaginary part.
CycElt embed_quadratic(const CtxPtr& ctx, const Rat& d);

} // namespace fomcert
