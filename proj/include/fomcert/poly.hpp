#pragma once

#include <vector>

#include "fomcert/field_traits.hpp"

namespace fomcert {

// Univariate polynomial over K, ascending coefficients, trailing zeros
// trimmed. The zero polynomial keeps one zero coefficient for context.
template <FieldValue K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly zero(const K& sample) { return Poly(std::vector<K>{zero_like(sample)}); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }
    static Poly x(const K& sample) {
        return Poly(std::vector<K>{zero_like(sample), one_like(sample)});
    }

    const std::vector<K>& coeffs() const { return c_; }
    long degree() const { return is_zero() ? -1 : static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    const K& leading() const { return c_.back(); }
    const K& coeff(std::size_t i) const { return c_[i]; }
    K coeff_or_zero(std::size_t i) const { return i < c_.size() ? c_[i] : zero_like(c_[0]); }

    Poly operator+(const Poly& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), zero_like(c_[0]));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < c_.size()) r[i] = r[i] + c_[i];
            if (i < o.c_.size()) r[i] = r[i] + o.c_[i];
        }
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<K> r = c_;
        for (auto& v : r) v = -v;
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(c_[0]);
        std::vector<K> r(c_.size() + o.c_.size() - 1, zero_like(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly scaled(const K& v) const {
        std::vector<K> r = c_;
        for (auto& x : r) x = x * v;
        return Poly(std::move(r));
    }

    // division with remainder; divisor must be nonzero
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Poly q = zero(c_[0]);
        Poly r = *this;
        K dlead_inv = d.leading().inv();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            K t = r.leading() * dlead_inv;
            std::vector<K> qc(shift + 1, zero_like(c_[0]));
            qc[shift] = t;
            Poly term{std::move(qc)};
            q = q + term;
            r = r - term * d;
        }
        return {q, r};
    }
    Poly operator/(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    Poly derivative() const {
        if (degree() < 1) return zero(c_[0]);
        std::vector<K> r(c_.size() - 1, zero_like(c_[0]));
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = c_[i] * int_like(c_[0], static_cast<long>(i));
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K acc = zero_like(c_[0]);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inv());
    }

    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }

    std::string str(const std::string& var = "x") const {
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero() && c_.size() > 1) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].str() + ")";
            if (i > 0) s += "*" + var + "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void trim() {
        if (c_.empty()) throw std::invalid_argument("polynomial needs a context coefficient");
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <FieldValue K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Determinant of the Sylvester matrix with the f-block first, for declared
// degrees m = deg f, n = deg g (leading entries may be zero when the inputs
// are dehomogenized binary forms). Res = 0 iff common projective root.
template <FieldValue K>
K resultant_with_degrees(const Poly<K>& f, long m, const Poly<K>& g, long n) {
    const K z = zero_like(f.coeffs()[0]);
    if (m < 0 || n < 0) throw std::invalid_argument("resultant needs nonnegative degrees");
    long size = m + n;
    if (size == 0) return one_like(z);
    std::vector<std::vector<K>> a(static_cast<std::size_t>(size),
                                  std::vector<K>(static_cast<std::size_t>(size), z));
    // n rows of f coefficients (descending), then m rows of g
    for (long r = 0; r < n; ++r)
        for (long j = 0; j <= m; ++j)
            a[r][r + j] = f.coeff_or_zero(static_cast<std::size_t>(m - j));
    for (long r = 0; r < m; ++r)
        for (long j = 0; j <= n; ++j)
            a[n + r][r + j] = g.coeff_or_zero(static_cast<std::size_t>(n - j));
    // Gaussian elimination, exact
    K det = one_like(z);
    for (long col = 0; col < size; ++col) {
        long pivot = -1;
        for (long r = col; r < size; ++r)
            if (!a[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return z;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det = det * a[col][col];
        K inv = a[col][col].inv();
        for (long r = col + 1; r < size; ++r) {
            if (a[r][col].is_zero()) continue;
            K factor = a[r][col] * inv;
            for (long j = col; j < size; ++j) a[r][j] = a[r][j] - factor * a[col][j];
        }
    }
    return det;
}

template <FieldValue K>
K resultant(const Poly<K>& f, const Poly<K>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    return resultant_with_degrees(f, f.degree(), g, g.degree());
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) a mod b: division-free, which
// matters over large cyclotomic fields where inverting dense elements is the
// dominant cost.
template <FieldValue K>
Poly<K> pseudo_rem(Poly<K> a, const Poly<K>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    long delta = a.degree() - b.degree();
    if (delta < 0) return a;
    const K& lead = b.leading();
    for (long step = 0; step <= delta; ++step) {
        if (a.degree() < b.degree()) {
            a = a.scaled(lead);
            continue;
        }
        std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        K top = a.leading();
        std::vector<K> shifted(shift + b.coeffs().size(), zero_like(top));
        for (std::size_t i = 0; i < b.coeffs().size(); ++i) shifted[shift + i] = b.coeffs()[i];
        a = a.scaled(lead) - Poly<K>(std::move(shifted)).scaled(top);
    }
    return a;
}

// is gcd(a, b) constant? (subresultant-style remainder chain, no division)
template <FieldValue K>
bool poly_coprime(Poly<K> a, Poly<K> b) {
    if (a.is_zero() || b.is_zero()) return !(a.is_zero() && b.is_zero());
    if (a.degree() < b.degree()) std::swap(a, b);
    while (b.degree() > 0) {
        Poly<K> r = pseudo_rem(a, b);
        if (r.is_zero()) return false; // b divides lc^k a, so the gcd is nonconstant
        a = std::move(b);
        b = std::move(r);
    }
    return !b.is_zero();
}

template <FieldValue K>
bool poly_squarefree(const Poly<K>& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    Poly<K> d = f.derivative();
    if (d.is_zero()) return false; // inseparable
    return poly_coprime(f, d);
}

// Rational function p/q, stored with gcd removed and monic denominator.
template <FieldValue K>
struct RatFunc {
    Poly<K> num, den;

    static RatFunc make(Poly<K> p, Poly<K> q) {
        if (q.is_zero()) throw std::domain_error("rational function with zero denominator");
        Poly<K> g = poly_gcd(p, q);
        if (g.degree() > 0) {
            p = p / g;
            q = q / g;
        }
        K lead_inv = q.leading().inv();
        return RatFunc{p.scaled(lead_inv), q.scaled(lead_inv)};
    }

    bool operator==(const RatFunc& o) const { return num * o.den == o.num * den; }

    std::string str() const { return "(" + num.str() + ") / (" + den.str() + ")"; }
};

} // namespace fomcert
