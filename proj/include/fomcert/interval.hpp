#pragma once

#include <string>

#include "fomcert/cyclotomic.hpp"
#include "fomcert/rational.hpp"

namespace fomcert {

// Closed interval [lo, hi] * 2^-prec with integer endpoints. All operations
// round outward, so a computed box always contains the exact value.
struct DyadicInterval {
    Int lo, hi;
    long prec = 0;

    static DyadicInterval from_rat(const Rat& q, long prec);
    static DyadicInterval exact_int(long v, long prec);
    static DyadicInterval pm(const Int& bound_mantissa, long prec); // [-b, b]

    DyadicInterval rescaled(long new_prec) const;

    DyadicInterval operator+(const DyadicInterval& o) const;
    DyadicInterval operator-(const DyadicInterval& o) const;
    DyadicInterval operator-() const;
    DyadicInterval operator*(const DyadicInterval& o) const;
    DyadicInterval scaled(const Rat& q) const;

    bool definitely_positive() const { return sgn(lo) > 0; }
    bool definitely_negative() const { return sgn(hi) < 0; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool contains_rat(const Rat& q) const;
    // width <= 2^-k
    bool width_below(long k) const;

    double approx() const;
    std::string str() const;
};

struct ComplexBox {
    DyadicInterval re, im;

    ComplexBox operator+(const ComplexBox& o) const { return {re + o.re, im + o.im}; }
    ComplexBox operator*(const ComplexBox& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexBox conj() const { return {re, -im}; }
    ComplexBox scaled(const Rat& q) const { return {re.scaled(q), im.scaled(q)}; }
    bool disjoint_from(const ComplexBox& o) const;
};

// Enclosure of pi at the given precision (cached).
DyadicInterval pi_interval(long prec);

// Enclosure of exp(2*pi*i*k/N).
ComplexBox zeta_interval(unsigned N, long k, long prec);

// Certified box containing the image of x under zeta_N -> exp(2*pi*i/N).
ComplexBox complex_interval(const CycElt& x, long prec);

} // namespace fomcert
