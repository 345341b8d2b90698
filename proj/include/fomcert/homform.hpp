#pragma once

#include <array>
#include <map>

#include "fomcert/parallel.hpp"
#include "fomcert/poly.hpp"
#include "fomcert/projmat.hpp"

namespace fomcert {

// Exponent vector for up to three variables; the third entry is 0 for binary
// forms. Keys are ordered graded-lexicographically with X0 > X1 > X2.
using Expo = std::array<unsigned, 3>;

struct ExpoGrlex {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da < db;
        return a > b; // larger X0 power first within a degree
    }
};

// Homogeneous form in 2 or 3 variables. Coefficients may be unnormalized
// zeros transiently; `support()` and comparisons see through them.
template <FieldValue K>
class HomForm {
public:
    HomForm() = default;
    HomForm(unsigned nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
        if (nvars != 2 && nvars != 3) throw std::invalid_argument("forms take 2 or 3 variables");
    }

    static HomForm monomial(unsigned nvars, Expo e, K coeff) {
        HomForm f(nvars, e[0] + e[1] + e[2]);
        f.terms_[e] = std::move(coeff);
        return f;
    }

    unsigned nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    const std::map<Expo, K, ExpoGrlex>& terms() const { return terms_; }

    void add_term(const Expo& e, const K& c) {
        if (e[0] + e[1] + e[2] != degree_) throw std::invalid_argument("exponent sum mismatch");
        if (nvars_ == 2 && e[2] != 0) throw std::invalid_argument("binary form with X2");
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_.emplace(e, c);
        else
            it->second = it->second + c;
    }

    HomForm operator+(const HomForm& o) const {
        check_compatible(o);
        HomForm r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    HomForm operator-() const {
        HomForm r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    HomForm operator-(const HomForm& o) const { return *this + (-o); }

    HomForm operator*(const HomForm& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
        HomForm r(nvars_, degree_ + o.degree_);
        for (const auto& [e1, c1] : terms_) {
            if (c1.is_zero()) continue;
            for (const auto& [e2, c2] : o.terms_) {
                Expo e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }

    HomForm scaled(const K& v) const {
        HomForm r = *this;
        for (auto& [e, c] : r.terms_) c = c * v;
        return r;
    }

    HomForm pow(unsigned k) const {
        HomForm acc = monomial(nvars_, {0, 0, 0}, one_like(sample()));
        for (unsigned i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    // Nonzero support in graded-lex order.
    std::vector<Expo> support() const {
        std::vector<Expo> s;
        for (const auto& [e, c] : terms_)
            if (!c.is_zero()) s.push_back(e);
        return s;
    }

    bool is_zero() const { return support().empty(); }

    K coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_like(sample()) : it->second;
    }

    HomForm normalized() const {
        HomForm r(nvars_, degree_);
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) continue;
            r.terms_[e] = normal_form(c);
        }
        return r;
    }

    bool operator==(const HomForm& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_) return false;
        return (*this - o).is_zero();
    }

    // substitution X_i -> sum_j M(i, j) X_j; right action ([f])M
    HomForm acted_by(const ProjMat<K>& m) const {
        if (m.dim() != nvars_) throw std::invalid_argument("matrix/form variable mismatch");
        std::vector<HomForm> lin;
        for (unsigned i = 0; i < nvars_; ++i) {
            HomForm li(nvars_, 1);
            for (unsigned j = 0; j < nvars_; ++j) {
                Expo e{0, 0, 0};
                e[j] = 1;
                li.add_term(e, m.at(i, j));
            }
            lin.push_back(li);
        }
        // powers of each linear form up to the largest exponent used
        std::array<unsigned, 3> maxe{0, 0, 0};
        for (const auto& [e, c] : terms_)
            for (unsigned i = 0; i < 3; ++i) maxe[i] = std::max(maxe[i], e[i]);
        std::vector<std::vector<HomForm>> powers(nvars_);
        for (unsigned i = 0; i < nvars_; ++i) {
            powers[i].push_back(monomial(nvars_, {0, 0, 0}, one_like(sample())));
            for (unsigned k = 1; k <= maxe[i]; ++k)
                powers[i].push_back(powers[i].back() * lin[i]);
        }
        HomForm r(nvars_, degree_);
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) continue;
            HomForm t = powers[0][e[0]] * powers[1][e[1]];
            if (nvars_ == 3) t = t * powers[2][e[2]];
            r = r + t.scaled(c);
        }
        return r;
    }

    K eval(const std::vector<K>& pt) const {
        if (pt.size() != nvars_) throw std::invalid_argument("point dimension mismatch");
        K acc = zero_like(sample());
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) continue;
            K t = c;
            for (unsigned i = 0; i < nvars_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * pt[i];
            acc = acc + t;
        }
        return acc;
    }

    HomForm partial(unsigned var) const {
        if (degree_ == 0) throw std::invalid_argument("derivative of a constant form");
        HomForm r(nvars_, degree_ - 1);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0 || c.is_zero()) continue;
            Expo e2 = e;
            --e2[var];
            r.add_term(e2, c * int_like(c, static_cast<long>(e[var])));
        }
        return r;
    }

    // univariate restriction: substitute the listed values, with `var` as x
    Poly<K> dehomogenize(unsigned var, const std::vector<K>& others) const {
        std::vector<K> coeffs(degree_ + 1, zero_like(sample()));
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) continue;
            K t = c;
            unsigned oi = 0;
            for (unsigned i = 0; i < nvars_; ++i) {
                if (i == var) continue;
                for (unsigned k = 0; k < e[i]; ++k) t = t * others[oi];
                ++oi;
            }
            coeffs[e[var]] = coeffs[e[var]] + t;
        }
        return Poly<K>(std::move(coeffs));
    }

    std::string str() const {
        static const char* names[3] = {"X0", "X1", "X2"};
        std::string s;
        for (const auto& [e, c] : terms_) {
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            for (unsigned i = 0; i < nvars_; ++i)
                if (e[i]) s += std::string("*") + names[i] + "^" + std::to_string(e[i]);
        }
        return s.empty() ? "0" : s;
    }

    K sample() const {
        if (!terms_.empty()) return terms_.begin()->second;
        throw std::logic_error("form without coefficients has no context");
    }

private:
    void check_compatible(const HomForm& o) const {
        if (nvars_ != o.nvars_ || degree_ != o.degree_)
            throw std::invalid_argument("form shape mismatch");
    }

    unsigned nvars_ = 0, degree_ = 0;
    std::map<Expo, K, ExpoGrlex> terms_;
};

// f ~ g (equal up to a nonzero scalar)?
template <FieldValue K>
bool proj_eq(const HomForm<K>& f, const HomForm<K>& g) {
    if (f.nvars() != g.nvars() || f.degree() != g.degree()) return false;
    std::vector<Expo> sf = f.support(), sg = g.support();
    if (sf != sg) return false;
    if (sf.empty()) return true;
    // cross-multiplied comparison avoids division
    const Expo& pivot = sf[0];
    K fp = f.coeff(pivot), gp = g.coeff(pivot);
    for (const Expo& e : sf)
        if (!(f.coeff(e) * gp - g.coeff(e) * fp).is_zero()) return false;
    return true;
}

// binary form from a univariate polynomial, homogenized to `deg`
template <FieldValue K>
HomForm<K> homogenize(const Poly<K>& p, unsigned deg) {
    if (p.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
    if (static_cast<long>(deg) < p.degree())
        throw std::invalid_argument("homogenization degree too small");
    HomForm<K> f(2, deg);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i].is_zero()) continue;
        f.add_term({static_cast<unsigned>(i), deg - static_cast<unsigned>(i), 0}, p.coeffs()[i]);
    }
    return f;
}

} // namespace fomcert
