#include "fomcert/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fomcert/interval.hpp"

namespace fomcert {

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Integer polynomials, ascending coefficients, trailing zeros trimmed.
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division, q = a / b; requires the division to be exact.
ZPoly zdiv_exact(ZPoly a, const ZPoly& b) {
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (a.size() >= b.size() && !a.empty()) {
        // b is monic or has +-1 leading coefficient for every divisor we use
        Int c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        ztrim(a);
    }
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

std::map<unsigned, ZPoly>& cyclo_cache() {
    static std::map<unsigned, ZPoly> cache;
    return cache;
}
std::mutex cyclo_mutex;

ZPoly cyclotomic_poly_locked(unsigned n) {
    auto it = cyclo_cache().find(n);
    if (it != cyclo_cache().end()) return it->second;
    ZPoly p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1; // x^n - 1
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) p = zdiv_exact(std::move(p), cyclotomic_poly_locked(d));
    }
    cyclo_cache()[n] = p;
    return p;
}

} // namespace

std::vector<Int> cyclotomic_poly(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclotomic_poly_locked(n);
}

CycCtx::CycCtx(unsigned N) : order(N), degree(euler_phi(N)) {
    min_poly = cyclotomic_poly(N);
    // Reduction rows x^k mod Phi_N for all k < N.
    pow_mod_.resize(N);
    std::vector<Int> cur(degree, Int(0));
    for (unsigned k = 0; k < N; ++k) {
        if (k < degree) {
            cur.assign(degree, Int(0));
            cur[k] = 1;
        } else {
            // multiply previous row by x, reduce by the monic Phi_N
            std::vector<Int> next(degree, Int(0));
            const Int top = cur[degree - 1];
            for (unsigned j = 1; j < degree; ++j) next[j] = cur[j - 1];
            if (top != 0)
                for (unsigned j = 0; j < degree; ++j) next[j] -= top * min_poly[j];
            cur = std::move(next);
        }
        pow_mod_[k] = cur;
    }
}

CtxPtr CycCtx::get(unsigned N) {
    if (N == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
    static std::map<unsigned, CtxPtr> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    CtxPtr ctx(new CycCtx(N));
    cache[N] = ctx;
    return ctx;
}

namespace {

void check_same_ctx(const CycElt& a, const CycElt& b) {
    if (!a.valid() || !b.valid()) throw std::logic_error("uninitialized field element");
    if (a.ctx()->order != b.ctx()->order)
        throw std::invalid_argument("field context mismatch: N=" + std::to_string(a.ctx()->order) +
                                    " vs N=" + std::to_string(b.ctx()->order));
}

} // namespace

CycElt CycElt::zero(CtxPtr ctx) {
    CycElt e;
    e.ctx_ = std::move(ctx);
    return e;
}

CycElt CycElt::one(CtxPtr ctx) { return from_rat(std::move(ctx), rat(1)); }

CycElt CycElt::from_rat(CtxPtr ctx, const Rat& q) {
    CycElt e;
    e.ctx_ = std::move(ctx);
    if (q != 0) e.terms_.emplace_back(0u, q);
    return e;
}

CycElt CycElt::zeta(CtxPtr ctx, long k) {
    const long N = static_cast<long>(ctx->order);
    long r = ((k % N) + N) % N;
    CycElt e;
    e.ctx_ = std::move(ctx);
    e.terms_.emplace_back(static_cast<unsigned>(r), rat(1));
    return e;
}

CycElt CycElt::from_power_basis(CtxPtr ctx, const std::vector<Rat>& coeffs) {
    if (coeffs.size() > ctx->degree)
        throw std::invalid_argument("coefficient vector too long: index " +
                                    std::to_string(ctx->degree) + " exceeds phi(" +
                                    std::to_string(ctx->order) + ")-1");
    CycElt e;
    e.ctx_ = std::move(ctx);
    for (unsigned k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) e.terms_.emplace_back(k, coeffs[k]);
    return e;
}

CycElt CycElt::from_terms(CtxPtr ctx, std::vector<std::pair<unsigned, Rat>> terms) {
    const unsigned N = ctx->order;
    std::vector<std::pair<unsigned, Rat>> acc;
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& t : terms) {
        unsigned e = t.first % N;
        if (!acc.empty() && acc.back().first == e)
            acc.back().second += t.second;
        else
            acc.emplace_back(e, t.second);
    }
    std::erase_if(acc, [](const auto& t) { return t.second == 0; });
    CycElt out;
    out.ctx_ = std::move(ctx);
    out.terms_ = std::move(acc);
    return out;
}

CycElt CycElt::operator+(const CycElt& o) const {
    check_same_ctx(*this, o);
    CycElt out;
    out.ctx_ = ctx_;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Rat c = terms_[i].second + o.terms_[j].second;
            if (c != 0) out.terms_.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

CycElt CycElt::operator-() const {
    CycElt out;
    out.ctx_ = ctx_;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

CycElt CycElt::operator-(const CycElt& o) const { return *this + (-o); }

CycElt CycElt::operator*(const CycElt& o) const {
    check_same_ctx(*this, o);
    const unsigned N = ctx_->order;
    CycElt out;
    out.ctx_ = ctx_;
    if (terms_.empty() || o.terms_.empty()) return out;

    if (terms_.size() * o.terms_.size() <= 16) {
        std::vector<std::pair<unsigned, Rat>> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                unsigned e = a.first + b.first;
                if (e >= N) e -= N;
                prod.emplace_back(e, a.second * b.second);
            }
        return from_terms(ctx_, std::move(prod));
    }

    // dense accumulator over exponents mod N
    thread_local std::vector<Rat> buf;
    thread_local std::vector<unsigned> touched;
    if (buf.size() < N) buf.resize(N);
    touched.clear();
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            unsigned e = a.first + b.first;
            if (e >= N) e -= N;
            if (buf[e] == 0) touched.push_back(e);
            buf[e] += a.second * b.second;
        }
    std::sort(touched.begin(), touched.end());
    for (unsigned e : touched) {
        if (buf[e] != 0) out.terms_.emplace_back(e, buf[e]);
        buf[e] = 0;
    }
    return out;
}

CycElt CycElt::scaled(const Rat& q) const {
    CycElt out;
    out.ctx_ = ctx_;
    if (q == 0) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second *= q;
    return out;
}

std::vector<Rat> CycElt::power_basis() const {
    if (!valid()) throw std::logic_error("uninitialized field element");
    std::vector<Rat> out(ctx_->degree, Rat(0));
    for (const auto& t : terms_) {
        if (t.first < ctx_->degree) {
            out[t.first] += t.second;
        } else {
            const auto& row = ctx_->power_mod(t.first);
            for (unsigned j = 0; j < ctx_->degree; ++j)
                if (row[j] != 0) out[j] += t.second * row[j];
        }
    }
    return out;
}

CycElt CycElt::normalized() const {
    return from_power_basis(ctx_, power_basis());
}

bool CycElt::is_zero() const {
    if (terms_.empty()) return true;
    if (terms_.back().first < ctx_->degree) return false; // canonical, nonempty
    for (const Rat& c : power_basis())
        if (c != 0) return false;
    return true;
}

bool CycElt::is_one() const {
    return (*this - one(ctx_)).is_zero();
}

bool CycElt::operator==(const CycElt& o) const {
    check_same_ctx(*this, o);
    return (*this - o).is_zero();
}

int CycElt::cmp(const CycElt& o) const {
    check_same_ctx(*this, o);
    std::vector<Rat> a = power_basis(), b = o.power_basis();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = ::cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::optional<Rat> CycElt::as_rational() const {
    std::vector<Rat> pb = power_basis();
    for (std::size_t i = 1; i < pb.size(); ++i)
        if (pb[i] != 0) return std::nullopt;
    return pb.empty() ? rat(0) : pb[0];
}

namespace {

// Rational polynomials for the inverse computation, ascending coefficients.
using QPoly = std::vector<Rat>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmod(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qtrim(a);
    }
    return a;
}

} // namespace

CycElt CycElt::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // monomial fast path: (c zeta^k)^-1 = (1/c) zeta^(N-k), keeping sparse
    // representations sparse
    if (terms_.size() == 1) {
        unsigned e = terms_[0].first;
        unsigned inv_e = e == 0 ? 0 : ctx_->order - e;
        return from_terms(ctx_, {{inv_e, rat(1) / terms_[0].second}});
    }
    // Extended Euclid on (this, Phi_N) over Q[x].
    const unsigned deg = ctx_->degree;
    QPoly r0(ctx_->min_poly.size());
    for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rat(ctx_->min_poly[i]);
    QPoly r1 = power_basis();
    qtrim(r1);
    QPoly s0{}, s1{rat(1)}; // coefficients of *this in the Bezout combination
    while (!r1.empty()) {
        // quotient of r0 by r1
        QPoly q;
        QPoly rem = r0;
        q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0, Rat(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qtrim(rem);
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        QPoly qs(q.size() + s1.size(), Rat(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        qtrim(qs);
        QPoly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qtrim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw std::logic_error("element not invertible mod Phi_N");
    // r0 = gcd = s0 * this (mod Phi); divide by the constant
    Rat g = r0[0];
    std::vector<Rat> coeffs(deg, Rat(0));
    for (std::size_t i = 0; i < s0.size() && i < deg; ++i) coeffs[i] = s0[i] / g;
    if (s0.size() > deg) throw std::logic_error("inverse degree overflow");
    return from_power_basis(ctx_, coeffs);
}

CycElt CycElt::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycElt acc = one(ctx_);
    CycElt base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycElt CycElt::galois(long k) const {
    const long N = static_cast<long>(ctx_->order);
    long r = ((k % N) + N) % N;
    if (std::gcd(r, N) != 1)
        throw std::invalid_argument("galois exponent not coprime to N");
    std::vector<std::pair<unsigned, Rat>> mapped;
    mapped.reserve(terms_.size());
    for (const auto& t : terms_)
        mapped.emplace_back(static_cast<unsigned>((t.first * static_cast<unsigned long>(r)) % N),
                            t.second);
    return from_terms(ctx_, std::move(mapped));
}

CycElt CycElt::conj() const { return galois(static_cast<long>(ctx_->order) - 1); }

CycElt CycElt::lift_to(const CtxPtr& big) const {
    if (big->order == ctx_->order) return *this;
    if (big->order % ctx_->order != 0)
        throw std::invalid_argument("cannot lift: " + std::to_string(ctx_->order) +
                                    " does not divide " + std::to_string(big->order));
    const unsigned m = big->order / ctx_->order;
    std::vector<std::pair<unsigned, Rat>> mapped;
    mapped.reserve(terms_.size());
    for (const auto& t : terms_) mapped.emplace_back(t.first * m, t.second);
    return from_terms(big, std::move(mapped));
}

std::string CycElt::str() const {
    std::vector<Rat> pb = power_basis();
    std::ostringstream os;
    bool first = true;
    for (unsigned k = 0; k < pb.size(); ++k) {
        if (pb[k] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(pb[k]);
        if (k > 0) os << "*z^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

GaloisAuto::GaloisAuto(CtxPtr c, long kk) : ctx(std::move(c)) {
    const long N = static_cast<long>(ctx->order);
    long r = ((kk % N) + N) % N;
    if (std::gcd(r, N) != 1)
        throw std::invalid_argument("galois exponent not coprime to N");
    k = static_cast<unsigned>(r);
}

CycElt GaloisAuto::operator()(const CycElt& x) const {
    if (x.ctx()->order != ctx->order) throw std::invalid_argument("galois context mismatch");
    return x.galois(k);
}

GaloisAuto GaloisAuto::compose(const GaloisAuto& inner) const {
    return GaloisAuto(ctx, static_cast<long>((static_cast<unsigned long>(k) * inner.k) % ctx->order));
}

GaloisAuto GaloisAuto::conjugation(CtxPtr c) {
    long N = static_cast<long>(c->order);
    return GaloisAuto(std::move(c), N - 1);
}

unsigned min_ctx_for_root(unsigned n) {
    if (n % 2 == 0 && (n / 2) % 2 == 1) return n / 2;
    return n;
}

bool ctx_has_root(const CtxPtr& ctx, unsigned n) {
    return ctx->order % min_ctx_for_root(n) == 0;
}

CycElt root_of_unity(const CtxPtr& ctx, unsigned n) {
    if (n == 0) throw std::invalid_argument("root order must be positive");
    const unsigned N = ctx->order;
    if (N % n == 0) return CycElt::zeta(ctx, N / n);
    if (n % 2 == 0) {
        unsigned m = n / 2;
        if (m % 2 == 1 && N % m == 0) {
            // zeta_2m = -zeta_m^((m+1)/2)
            return -CycElt::zeta(ctx, static_cast<long>((N / m) * ((m + 1) / 2)));
        }
    }
    throw std::invalid_argument("context N=" + std::to_string(N) +
                                " lacks a primitive root of unity of order " + std::to_string(n) +
                                "; minimal admissible N=" + std::to_string(min_ctx_for_root(n)));
}

int legendre_symbol(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    // Euler's criterion with small exponents
    long result = 1, base = a % p, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = (result * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

namespace {

// Squarefree core of num*den, and the integer scale with d = core * scale^2 / den^2.
void squarefree_core(const Rat& d, long& core, Rat& scale) {
    Int m = d.get_num() * d.get_den();
    Int s = 1;
    Int mm = abs(m);
    long c = sgn(m);
    for (Int p = 2; p * p <= mm; ++p) {
        if (mm % p == 0) {
            unsigned e = 0;
            while (mm % p == 0) {
                mm /= p;
                ++e;
            }
            for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
            if (e % 2 == 1) c *= p.get_si();
        }
    }
    if (mm > 1) c *= mm.get_si();
    core = c;
    scale = rat(s, d.get_den());
}

} // namespace

unsigned quadratic_conductor(const Rat& d) {
    if (d == 0) throw std::invalid_argument("quadratic radicand must be nonzero");
    long core;
    Rat scale;
    squarefree_core(d, core, scale);
    if (core == 1) return 1;
    long m = core;
    long am = m < 0 ? -m : m;
    // conductor of Q(sqrt(m)) for squarefree m: |m| if m = 1 mod 4, else 4|m|
    long mod4 = ((m % 4) + 4) % 4;
    unsigned long cond = (mod4 == 1) ? static_cast<unsigned long>(am)
                                     : 4ul * static_cast<unsigned long>(am);
    return static_cast<unsigned>(cond);
}

CycElt embed_quadratic(const CtxPtr& ctx, const Rat& d) {
    if (d == 0) throw std::invalid_argument("quadratic radicand must be nonzero");
    long core;
    Rat scale;
    squarefree_core(d, core, scale);
    if (core == 1) return CycElt::from_rat(ctx, scale);

    unsigned cond = quadratic_conductor(d);
    if (ctx->order % cond != 0)
        throw std::invalid_argument("context N=" + std::to_string(ctx->order) +
                                    " cannot host sqrt(" + rat_str(d) +
                                    "); minimal admissible N=" + std::to_string(cond));

    const unsigned N = ctx->order;
    long m = core;
    // Build w with w^2 = core from Gauss sums g_p (g_p^2 = (-1|p) p) and the
    // base surds i = zeta_4, sqrt(2) = zeta_8 + zeta_8^-1, sqrt(-2) = zeta_8 - zeta_8^-1.
    CycElt w = CycElt::one(ctx);
    long residual = 1; // what w^2 currently contributes of {±1, ±2}
    long am = m < 0 ? -m : m;
    long rest = am;
    if (rest % 2 == 0) rest /= 2;
    for (long p = 3; p <= rest; p += 2) {
        if (rest % p == 0) {
            rest /= p;
            std::vector<std::pair<unsigned, Rat>> terms;
            for (long a = 1; a < p; ++a) {
                int chi = legendre_symbol(a, p);
                terms.emplace_back(static_cast<unsigned>((a * (N / p)) % N), rat(chi));
            }
            w = w * CycElt::from_terms(ctx, std::move(terms));
            residual *= (p % 4 == 1) ? p : -p;
        }
    }
    // leftover factor of m not covered by Gauss sums: sign and possibly 2
    long target = m;
    long need = 0; // target / residual in {1,-1,2,-2}
    for (long cand : {1L, -1L, 2L, -2L})
        if (residual * cand == target) need = cand;
    if (need == 0) throw std::logic_error("quadratic embedding bookkeeping failed");
    if (need == -1) {
        w = w * CycElt::zeta(ctx, N / 4);
    } else if (need == 2) {
        w = w * (CycElt::zeta(ctx, N / 8) + CycElt::zeta(ctx, N - N / 8));
    } else if (need == -2) {
        w = w * (CycElt::zeta(ctx, N / 8) - CycElt::zeta(ctx, N - N / 8));
    }
    CycElt sq = w * w;
    if (!(sq - CycElt::from_rat(ctx, rat(m))).is_zero())
        throw std::logic_error("quadratic embedding verification failed");

    // Fix the sign convention: positive real part for d > 0, positive
    // imaginary part for d < 0 (the value is exactly +-sqrt(|core|) or
    // +-i*sqrt(|core|), so one axis separates).
    bool flip = false;
    for (long prec = 64;; prec *= 2) {
        ComplexBox box = complex_interval(w, prec);
        if (m > 0) {
            if (box.re.definitely_positive()) break;
            if (box.re.definitely_negative()) {
                flip = true;
                break;
            }
        } else {
            if (box.im.definitely_positive()) break;
            if (box.im.definitely_negative()) {
                flip = true;
                break;
            }
        }
        if (prec > 4096)
            throw std::runtime_error("sign resolution for sqrt exceeded precision cap");
    }
    if (flip) w = -w;
    return w.scaled(scale);
}

} // namespace fomcert
