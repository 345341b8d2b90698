#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace fomcert {

// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>0 as long
// as values are built through the helpers below.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p/q", "p/q".
Rat rat_parse(const std::string& s);

// "p/q" with q omitted when 1; the JSON wire format for rationals.
std::string rat_str(const Rat& q);

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact integer square root test: returns true and sets r when v = r^2.
bool int_is_square(const Int& v, Int& r);

// Exact rational square root test.
bool rat_is_square(const Rat& v, Rat& r);

} // namespace fomcert
