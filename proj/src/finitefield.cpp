#include "fomcert/finitefield.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fomcert {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<unsigned>; // ascending coefficients mod p

// does candidate (monic, ascending, degree >= 1) have a nontrivial factor?
bool poly_irreducible(const Poly& cand, unsigned p) {
    unsigned deg = static_cast<unsigned>(cand.size()) - 1;
    if (deg == 1) return true;
    // trial division by all monic polynomials of degree <= deg/2
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long idx = 0; idx < count; ++idx) {
            Poly div(d + 1, 0u);
            unsigned long t = idx;
            for (unsigned i = 0; i < d; ++i) {
                div[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            div[d] = 1;
            // remainder of cand by div
            Poly rem = cand;
            while (rem.size() >= div.size()) {
                unsigned c = rem.back();
                if (c != 0) {
                    std::size_t shift = rem.size() - div.size();
                    for (std::size_t i = 0; i < div.size(); ++i) {
                        unsigned sub = (c * div[i]) % p;
                        rem[shift + i] = (rem[shift + i] + p - sub) % p;
                    }
                }
                rem.pop_back();
            }
            bool zero = true;
            for (unsigned x : rem)
                if (x) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

FqCtx::FqCtx(unsigned pp, unsigned rr) : p(pp), r(rr) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("characteristic must be an odd prime");
    if (r == 0) throw std::invalid_argument("extension degree must be positive");
    // smallest monic irreducible in lex order on (c_0, ..., c_{r-1})
    unsigned long count = 1;
    for (unsigned i = 0; i < r; ++i) count *= p;
    for (unsigned long idx = 0; idx < count; ++idx) {
        Poly cand(r + 1, 0u);
        unsigned long t = idx;
        for (unsigned i = 0; i < r; ++i) {
            cand[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        cand[r] = 1;
        if (poly_irreducible(cand, p)) {
            modulus = cand;
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

FqCtxPtr FqCtx::get(unsigned p, unsigned r) {
    static std::map<std::pair<unsigned, unsigned>, FqCtxPtr> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto key = std::make_pair(p, r);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    FqCtxPtr ctx(new FqCtx(p, r));
    cache[key] = ctx;
    return ctx;
}

unsigned long FqCtx::size() const {
    unsigned long s = 1;
    for (unsigned i = 0; i < r; ++i) s *= p;
    return s;
}

FqElt FqElt::zero(FqCtxPtr ctx) {
    FqElt e;
    e.c_.assign(ctx->r, 0u);
    e.ctx_ = std::move(ctx);
    return e;
}

FqElt FqElt::one(FqCtxPtr ctx) { return from_int(std::move(ctx), 1); }

FqElt FqElt::from_int(FqCtxPtr ctx, long v) {
    FqElt e = zero(ctx);
    long p = static_cast<long>(ctx->p);
    e.c_[0] = static_cast<unsigned>(((v % p) + p) % p);
    return e;
}

FqElt FqElt::from_coeffs(FqCtxPtr ctx, std::vector<unsigned> c) {
    if (c.size() > ctx->r) throw std::invalid_argument("coefficient vector too long");
    c.resize(ctx->r, 0u);
    for (unsigned& x : c) x %= ctx->p;
    FqElt e;
    e.ctx_ = std::move(ctx);
    e.c_ = std::move(c);
    return e;
}

FqElt FqElt::by_index(FqCtxPtr ctx, unsigned long i) {
    std::vector<unsigned> c(ctx->r);
    for (unsigned j = 0; j < ctx->r; ++j) {
        c[j] = static_cast<unsigned>(i % ctx->p);
        i /= ctx->p;
    }
    return from_coeffs(std::move(ctx), std::move(c));
}

unsigned long FqElt::index() const {
    unsigned long i = 0;
    for (unsigned j = ctx_->r; j-- > 0;) i = i * ctx_->p + c_[j];
    return i;
}

FqElt FqElt::operator+(const FqElt& o) const {
    FqElt e = *this;
    for (unsigned i = 0; i < c_.size(); ++i) e.c_[i] = (c_[i] + o.c_[i]) % ctx_->p;
    return e;
}

FqElt FqElt::operator-(const FqElt& o) const { return *this + (-o); }

FqElt FqElt::operator-() const {
    FqElt e = *this;
    for (unsigned& x : e.c_) x = (ctx_->p - x) % ctx_->p;
    return e;
}

FqElt FqElt::operator*(const FqElt& o) const {
    const unsigned p = ctx_->p;
    std::vector<unsigned> prod(2 * ctx_->r - 1, 0u);
    for (unsigned i = 0; i < ctx_->r; ++i)
        if (c_[i])
            for (unsigned j = 0; j < ctx_->r; ++j)
                prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
    // reduce by modulus
    for (unsigned k = static_cast<unsigned>(prod.size()); k-- > ctx_->r;) {
        unsigned c = prod[k];
        if (c) {
            for (unsigned i = 0; i <= ctx_->r; ++i) {
                unsigned sub = (c * ctx_->modulus[i]) % p;
                prod[k - ctx_->r + i] = (prod[k - ctx_->r + i] + p - sub) % p;
            }
        }
    }
    prod.resize(ctx_->r);
    FqElt e;
    e.ctx_ = ctx_;
    e.c_ = std::move(prod);
    return e;
}

FqElt FqElt::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    FqElt acc = one(ctx_), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FqElt FqElt::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero in F_q");
    return pow(static_cast<long>(ctx_->size()) - 2);
}

FqElt FqElt::frobenius() const { return pow(static_cast<long>(ctx_->p)); }

bool FqElt::is_zero() const {
    for (unsigned x : c_)
        if (x) return false;
    return true;
}

bool FqElt::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

bool FqElt::is_square() const {
    if (is_zero()) return true;
    return pow(static_cast<long>((ctx_->size() - 1) / 2)).is_one();
}

int FqElt::cmp(const FqElt& o) const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string FqElt::str() const {
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!first) os << "+";
        os << c_[i];
        if (i > 0) os << "*t^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<FqElt> all_field_elements(const FqCtxPtr& ctx) {
    std::vector<FqElt> out;
    out.reserve(ctx->size());
    for (unsigned long i = 0; i < ctx->size(); ++i) out.push_back(FqElt::by_index(ctx, i));
    return out;
}

} // namespace fomcert
