#pragma once

#include <optional>
#include <stdexcept>

#include "fomcert/cyclotomic.hpp"

namespace fomcert {

struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ambiguous_extension : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precision cap (bits) for certified sign resolutions. Adaptive searches start
// at 64 bits and double; exceeding the cap raises precision_exhausted.
long& precision_cap();

// a + b*sqrt(w) over Q(zeta_N). sqrt(w) means the principal square root of
// the embedded value of w (argument in (-pi/2, pi/2]). When w is a square in
// the field the root can be materialized and all Galois action is exact;
// otherwise only complex conjugation extends canonically (certified below).
class QuadExtElt {
public:
    QuadExtElt() = default;
    static QuadExtElt sqrt_of(CycElt w);                       // 0 + 1*sqrt(w)
    static QuadExtElt sqrt_of(CycElt w, CycElt known_root);    // materialized
    static QuadExtElt make(CycElt a, CycElt b, CycElt w);
    static QuadExtElt from_base(CycElt a, CycElt w);

    const CycElt& radicand() const { return w_; }
    const CycElt& base_part() const { return a_; }
    const CycElt& root_part() const { return b_; }
    bool materialized() const { return root_.has_value(); }
    // +1 / -1 when this value was produced by quadext_conj on a formal root:
    // image of sqrt(w) was conj_sign * sqrt(w^sigma).
    int conj_sign() const { return conj_sign_; }

    QuadExtElt operator+(const QuadExtElt& o) const;
    QuadExtElt operator-() const;
    QuadExtElt operator*(const QuadExtElt& o) const; // same radicand required
    bool is_zero() const;
    bool operator==(const QuadExtElt& o) const;

    // Value in the cyclotomic field when the root is materialized.
    std::optional<CycElt> eval() const;

    // sqrt(w)^2 = w substituted; (a + b sqrt(w)) * (c + d sqrt(w)) etc. are
    // exercised through operator*.

    friend QuadExtElt quadext_conj(const QuadExtElt& x, const GaloisAuto& sigma);

private:
    CycElt w_, a_, b_;
    std::optional<CycElt> root_;
    int conj_sign_ = 0;
};

// Extends sigma to the quadratic extension. Fully certified cases:
//  - materialized root: exact for every sigma;
//  - sigma = complex conjugation with w^c = w (real w, sign via intervals)
//    or w^c * w = 1 (forces conj(sqrt(w)) * sqrt(w) = 1 exactly);
//  - anything else raises ambiguous_extension.
QuadExtElt quadext_conj(const QuadExtElt& x, const GaloisAuto& sigma);

// Certified sign of a nonzero real cyclotomic value (x^c = x required).
int certified_real_sign(const CycElt& x);

} // namespace fomcert
