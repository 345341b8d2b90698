#pragma once

#include <sstream>
#include <stdexcept>
#include <vector>

#include "fomcert/field_traits.hpp"

namespace fomcert {

struct singular_matrix : std::domain_error {
    using std::domain_error::domain_error;
};

// Point of P^{n-1}: canonical scaling makes the first nonzero coordinate 1.
template <FieldValue K>
struct ProjPoint {
    std::vector<K> x;

    // Canonical scaling only; entries stay in whatever sparse representation
    // the arithmetic produced. Comparisons canonicalize on the fly.
    static ProjPoint make(std::vector<K> coords) {
        std::size_t pivot = coords.size();
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == coords.size())
            throw std::invalid_argument("projective point cannot be the zero vector");
        K inv = coords[pivot].inv();
        for (auto& c : coords) c = c * inv;
        return ProjPoint{std::move(coords)};
    }

    int cmp(const ProjPoint& o) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            int c = value_cmp(x[i], o.x[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    bool operator==(const ProjPoint& o) const { return cmp(o) == 0; }
    bool operator<(const ProjPoint& o) const { return cmp(o) < 0; }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) os << " : ";
            os << x[i].str();
        }
        os << "]";
        return os.str();
    }
};

// Element of PGL_n, n in {2, 3}. The stored representative is the canonical
// scaling: first nonzero row-major entry equals 1, all entries normalized.
template <FieldValue K>
class ProjMat {
public:
    ProjMat() = default;

    static ProjMat make(unsigned n, std::vector<K> entries) {
        if (entries.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("entry count does not match dimension");
        ProjMat m;
        m.n_ = n;
        m.e_ = std::move(entries);
        if (m.det().is_zero()) throw singular_matrix("matrix is singular");
        m.rescale();
        return m;
    }

    static ProjMat identity(unsigned n, const K& sample) {
        std::vector<K> e(static_cast<std::size_t>(n) * n, zero_like(sample));
        for (unsigned i = 0; i < n; ++i) e[i * n + i] = one_like(sample);
        ProjMat m;
        m.n_ = n;
        m.e_ = std::move(e);
        return m;
    }

    unsigned dim() const { return n_; }
    const K& at(unsigned i, unsigned j) const { return e_[i * n_ + j]; }
    const std::vector<K>& entries() const { return e_; }

    ProjMat operator*(const ProjMat& o) const {
        if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
        std::vector<K> r(e_.size(), zero_like(e_[0]));
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned k = 0; k < n_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (unsigned j = 0; j < n_; ++j)
                    r[i * n_ + j] = r[i * n_ + j] + at(i, k) * o.at(k, j);
            }
        return make(n_, std::move(r));
    }

    K det() const {
        if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
        if (n_ == 3)
            return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
                   at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
                   at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
        throw std::invalid_argument("only dimensions 2 and 3 are supported");
    }

    ProjMat inverse() const {
        if (n_ == 2) {
            std::vector<K> r{at(1, 1), -at(0, 1), -at(1, 0), at(0, 0)};
            return make(2, std::move(r));
        }
        // adjugate; the projective class absorbs 1/det
        std::vector<K> r(9, zero_like(e_[0]));
        auto minor2 = [&](unsigned r0, unsigned r1, unsigned c0, unsigned c1) {
            return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        };
        r[0] = minor2(1, 2, 1, 2);
        r[1] = -minor2(0, 2, 1, 2);
        r[2] = minor2(0, 1, 1, 2);
        r[3] = -minor2(1, 2, 0, 2);
        r[4] = minor2(0, 2, 0, 2);
        r[5] = -minor2(0, 1, 0, 2);
        r[6] = minor2(1, 2, 0, 1);
        r[7] = -minor2(0, 2, 0, 1);
        r[8] = minor2(0, 1, 0, 1);
        return make(3, std::move(r));
    }

    ProjMat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        ProjMat acc = identity(n_, e_[0]), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    ProjPoint<K> apply(const ProjPoint<K>& p) const {
        if (p.x.size() != n_) throw std::invalid_argument("point dimension mismatch");
        std::vector<K> y(n_, zero_like(e_[0]));
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) y[i] = y[i] + at(i, j) * p.x[j];
        return ProjPoint<K>::make(std::move(y));
    }

    bool is_identity() const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) {
                if (i == j ? !(at(i, j) == one_like(e_[0])) : !at(i, j).is_zero()) return false;
            }
        return true;
    }

    int cmp(const ProjMat& o) const {
        if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            int c = value_cmp(e_[i], o.e_[i]);
            if (c != 0) return c;
        }
        return 0;
    }
    bool operator==(const ProjMat& o) const { return cmp(o) == 0; }
    bool operator!=(const ProjMat& o) const { return cmp(o) != 0; }
    bool operator<(const ProjMat& o) const { return cmp(o) < 0; }

    unsigned long order() const {
        ProjMat m = *this;
        unsigned long k = 1;
        while (!m.is_identity()) {
            m = m * *this;
            ++k;
            if (k > 100000) throw std::logic_error("element order diverged");
        }
        return k;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (unsigned i = 0; i < n_; ++i) {
            if (i) os << "; ";
            for (unsigned j = 0; j < n_; ++j) {
                if (j) os << ", ";
                os << at(i, j).str();
            }
        }
        os << "]";
        return os.str();
    }

private:
    void rescale() {
        std::size_t pivot = e_.size();
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (!e_[i].is_zero()) {
                pivot = i;
                break;
            }
        K inv = e_[pivot].inv();
        for (auto& c : e_) c = c * inv;
    }

    unsigned n_ = 0;
    std::vector<K> e_;
};

// Symmetric-square embedding PGL_2 -> PGL_3; a homomorphism away from
// characteristic 2.
template <FieldValue K>
ProjMat<K> symmetric_square(const ProjMat<K>& m) {
    if (m.dim() != 2) throw std::invalid_argument("symmetric square needs a 2x2 matrix");
    if (field_characteristic(m.at(0, 0)) == 2)
        throw std::invalid_argument("symmetric square unavailable in characteristic 2");
    const K &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
    K two = int_like(a, 2);
    std::vector<K> r{a * a, a * b, b * b,          two * (a * c), a * d + b * c,
                     two * (b * d), c * c, c * d, d * d};
    return ProjMat<K>::make(3, std::move(r));
}

} // namespace fomcert
