#pragma once

#include <memory>
#include <string>
#include <vector>

namespace fomcert {

class FqCtx;
using FqCtxPtr = std::shared_ptr<const FqCtx>;

// F_{p^r} for odd prime p. The modulus is the lexicographically smallest
// monic irreducible of degree r over F_p (coefficients compared from the
// constant term up), so contexts are reproducible without tables.
class FqCtx {
public:
    unsigned p, r;
    std::vector<unsigned> modulus; // ascending, length r+1, monic
    static FqCtxPtr get(unsigned p, unsigned r);
    unsigned long size() const; // p^r

private:
    FqCtx(unsigned p, unsigned r);
};

class FqElt {
public:
    FqElt() = default;
    static FqElt zero(FqCtxPtr ctx);
    static FqElt one(FqCtxPtr ctx);
    static FqElt from_int(FqCtxPtr ctx, long v);
    static FqElt from_coeffs(FqCtxPtr ctx, std::vector<unsigned> c);
    // element with index i in the lexicographic enumeration, 0 <= i < p^r
    static FqElt by_index(FqCtxPtr ctx, unsigned long i);

    const FqCtxPtr& ctx() const { return ctx_; }
    bool valid() const { return ctx_ != nullptr; }
    const std::vector<unsigned>& coeffs() const { return c_; }
    unsigned long index() const;

    FqElt operator+(const FqElt& o) const;
    FqElt operator-(const FqElt& o) const;
    FqElt operator-() const;
    FqElt operator*(const FqElt& o) const;
    FqElt inv() const;
    FqElt operator/(const FqElt& o) const { return *this * o.inv(); }
    FqElt pow(long e) const;
    FqElt frobenius() const; // x -> x^p

    bool is_zero() const;
    bool is_one() const;
    bool is_square() const;
    bool operator==(const FqElt& o) const { return c_ == o.c_; }
    bool operator!=(const FqElt& o) const { return !(*this == o); }
    int cmp(const FqElt& o) const;

    std::string str() const;

private:
    FqCtxPtr ctx_;
    std::vector<unsigned> c_; // length r, entries in [0, p)
};

std::vector<FqElt> all_field_elements(const FqCtxPtr& ctx);

} // namespace fomcert
