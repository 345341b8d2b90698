#include "fomcert/interval.hpp"
#include <cmath>

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fomcert {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int shift_left(const Int& a, long k) {
    Int r;
    mpz_mul_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return r;
}

Int shift_right_floor(const Int& a, long k) {
    Int r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return r;
}

Int shift_right_ceil(const Int& a, long k) {
    Int r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return r;
}

} // namespace

DyadicInterval DyadicInterval::from_rat(const Rat& q, long prec) {
    Int scaled_num = shift_left(q.get_num(), prec);
    return {floor_div(scaled_num, q.get_den()), ceil_div(scaled_num, q.get_den()), prec};
}

DyadicInterval DyadicInterval::exact_int(long v, long prec) {
    Int m = shift_left(Int(v), prec);
    return {m, m, prec};
}

DyadicInterval DyadicInterval::pm(const Int& b, long prec) { return {-b, b, prec}; }

DyadicInterval DyadicInterval::rescaled(long new_prec) const {
    if (new_prec == prec) return *this;
    if (new_prec > prec)
        return {shift_left(lo, new_prec - prec), shift_left(hi, new_prec - prec), new_prec};
    return {shift_right_floor(lo, prec - new_prec), shift_right_ceil(hi, prec - new_prec),
            new_prec};
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
    long p = std::max(prec, o.prec);
    DyadicInterval a = rescaled(p), b = o.rescaled(p);
    return {a.lo + b.lo, a.hi + b.hi, p};
}

DyadicInterval DyadicInterval::operator-(const DyadicInterval& o) const { return *this + (-o); }

DyadicInterval DyadicInterval::operator-() const { return {-hi, -lo, prec}; }

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
    long p = std::max(prec, o.prec);
    DyadicInterval a = rescaled(p), b = o.rescaled(p);
    Int c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Int mn = std::min(std::min(c1, c2), std::min(c3, c4));
    Int mx = std::max(std::max(c1, c2), std::max(c3, c4));
    return {shift_right_floor(mn, p), shift_right_ceil(mx, p), p};
}

DyadicInterval DyadicInterval::scaled(const Rat& q) const {
    Int a = lo * q.get_num(), b = hi * q.get_num();
    if (sgn(q.get_num()) < 0) std::swap(a, b);
    return {floor_div(a, q.get_den()), ceil_div(b, q.get_den()), prec};
}

bool DyadicInterval::contains_rat(const Rat& q) const {
    // lo/2^p <= q <= hi/2^p
    Int qn_scaled = shift_left(q.get_num(), prec);
    return lo * q.get_den() <= qn_scaled && qn_scaled <= hi * q.get_den();
}

bool DyadicInterval::width_below(long k) const {
    if (prec < k) return (hi - lo) == 0;
    return (hi - lo) <= shift_left(Int(1), prec - k);
}

double DyadicInterval::approx() const {
    Rat mid = rat(lo + hi, Int(2));
    return mid.get_d() / std::pow(2.0, static_cast<double>(prec));
}

std::string DyadicInterval::str() const {
    std::ostringstream os;
    os << "[" << lo.get_str() << "," << hi.get_str() << "]*2^-" << prec;
    return os.str();
}

bool ComplexBox::disjoint_from(const ComplexBox& o) const {
    DyadicInterval dre = re - o.re, dim = im - o.im;
    return !dre.contains_zero() || !dim.contains_zero();
}

namespace {

// atan(1/x) at `prec` bits, alternating series with rigorous truncation.
DyadicInterval atan_inv(long x, long prec) {
    long guard = prec + 16;
    Int one = shift_left(Int(1), guard);
    Int xx = Int(x) * x;
    Int power = Int(x); // x^(2j+1)
    DyadicInterval sum{Int(0), Int(0), guard};
    int sign = 1;
    for (long j = 0;; ++j) {
        Int denom = power * (2 * j + 1);
        Int t_lo = floor_div(one, denom), t_hi = ceil_div(one, denom);
        if (sign > 0)
            sum = {sum.lo + t_lo, sum.hi + t_hi, guard};
        else
            sum = {sum.lo - t_hi, sum.hi - t_lo, guard};
        sign = -sign;
        power *= xx;
        Int next = ceil_div(one, power * (2 * j + 3));
        if (next == 0) {
            sum = {sum.lo - 1, sum.hi + 1, guard};
            break;
        }
        // remainder after stopping here is bounded by the next term
        if (j > 4 * prec) throw std::logic_error("atan series failed to converge");
        if (next <= 1) {
            sum = {sum.lo - next - 1, sum.hi + next + 1, guard};
            break;
        }
    }
    return sum.rescaled(prec);
}

std::map<long, DyadicInterval>& pi_cache() {
    static std::map<long, DyadicInterval> c;
    return c;
}
std::mutex pi_mutex;

// cos/sin on an interval argument via Taylor series with Lagrange remainder.
// |theta| must be below 8.
DyadicInterval sin_or_cos(const DyadicInterval& theta, long prec, bool want_sin) {
    long guard = prec + 16;
    DyadicInterval th = theta.rescaled(guard);
    DyadicInterval acc{Int(0), Int(0), guard};
    DyadicInterval term = want_sin ? th : DyadicInterval::exact_int(1, guard);
    DyadicInterval th2 = th * th;
    // term_j = (-1)^j theta^(2j+k)/(2j+k)!, k = 0 for cos, 1 for sin
    long n = want_sin ? 1 : 0;
    // remainder bound uses |theta| < 8
    Int num = 1; // 8^n
    for (long i = 0; i < n; ++i) num *= 8;
    Int fact = 1;
    for (long i = 2; i <= n; ++i) fact *= i;
    for (long j = 0;; ++j) {
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
        // next term
        term = term * th2;
        long k1 = n + 2 * j + 1, k2 = n + 2 * j + 2;
        Int denom = Int(k1) * Int(k2);
        term = {floor_div(term.lo, denom), ceil_div(term.hi, denom), guard};
        num *= 64;
        fact *= denom;
        // crude remainder bound 8^(n+2j+2)/(n+2j+2)!
        Int bound = ceil_div(num * shift_left(Int(1), guard), fact);
        if (bound <= 1) {
            acc = {acc.lo - 2, acc.hi + 2, guard};
            break;
        }
        if (j > 8 * prec + 64) throw std::logic_error("trig series failed to converge");
    }
    return acc.rescaled(prec);
}

} // namespace

DyadicInterval pi_interval(long prec) {
    {
        std::lock_guard<std::mutex> lock(pi_mutex);
        auto it = pi_cache().find(prec);
        if (it != pi_cache().end()) return it->second;
    }
    // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
    DyadicInterval a = atan_inv(5, prec + 8), b = atan_inv(239, prec + 8);
    DyadicInterval pi_val =
        (a.scaled(rat(16)) - b.scaled(rat(4))).rescaled(prec);
    std::lock_guard<std::mutex> lock(pi_mutex);
    pi_cache()[prec] = pi_val;
    return pi_val;
}

ComplexBox zeta_interval(unsigned N, long k, long prec) {
    long kk = ((k % static_cast<long>(N)) + N) % static_cast<long>(N);
    // theta = 2*pi*k/N in [0, 2*pi)
    DyadicInterval theta = pi_interval(prec + 16).scaled(rat(2 * kk, static_cast<long>(N)));
    return {sin_or_cos(theta, prec, false), sin_or_cos(theta, prec, true)};
}

ComplexBox complex_interval(const CycElt& x, long prec) {
    ComplexBox acc{DyadicInterval::exact_int(0, prec), DyadicInterval::exact_int(0, prec)};
    for (const auto& t : x.terms()) {
        ComplexBox z = zeta_interval(x.ctx()->order, static_cast<long>(t.first), prec + 8);
        acc = acc + z.scaled(t.second);
    }
    return {acc.re.rescaled(prec), acc.im.rescaled(prec)};
}

} // namespace fomcert
