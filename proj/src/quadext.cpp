#include "fomcert/quadext.hpp"

#include "fomcert/interval.hpp"

namespace fomcert {

long& precision_cap() {
    static long cap = 4096;
    return cap;
}

QuadExtElt QuadExtElt::sqrt_of(CycElt w) {
    if (w.is_zero()) throw std::domain_error("radicand must be nonzero");
    QuadExtElt e;
    e.a_ = CycElt::zero(w.ctx());
    e.b_ = CycElt::one(w.ctx());
    e.w_ = std::move(w);
    return e;
}

QuadExtElt QuadExtElt::sqrt_of(CycElt w, CycElt known_root) {
    if (!(known_root * known_root == w))
        throw std::invalid_argument("claimed root does not square to the radicand");
    QuadExtElt e = sqrt_of(w);
    e.root_ = std::move(known_root);
    return e;
}

QuadExtElt QuadExtElt::make(CycElt a, CycElt b, CycElt w) {
    QuadExtElt e = sqrt_of(std::move(w));
    e.a_ = std::move(a);
    e.b_ = std::move(b);
    return e;
}

QuadExtElt QuadExtElt::from_base(CycElt a, CycElt w) {
    return make(std::move(a), CycElt::zero(a.ctx()), std::move(w));
}

QuadExtElt QuadExtElt::operator+(const QuadExtElt& o) const {
    if (!(w_ == o.w_)) throw std::invalid_argument("quadratic extensions differ");
    QuadExtElt e = *this;
    e.a_ = a_ + o.a_;
    e.b_ = b_ + o.b_;
    e.conj_sign_ = 0;
    return e;
}

QuadExtElt QuadExtElt::operator-() const {
    QuadExtElt e = *this;
    e.a_ = -a_;
    e.b_ = -b_;
    return e;
}

QuadExtElt QuadExtElt::operator*(const QuadExtElt& o) const {
    if (!(w_ == o.w_)) throw std::invalid_argument("quadratic extensions differ");
    QuadExtElt e = *this;
    e.a_ = a_ * o.a_ + w_ * (b_ * o.b_);
    e.b_ = a_ * o.b_ + b_ * o.a_;
    e.conj_sign_ = 0;
    return e;
}

bool QuadExtElt::is_zero() const {
    if (root_) return (a_ + b_ * *root_).is_zero();
    return a_.is_zero() && b_.is_zero();
}

bool QuadExtElt::operator==(const QuadExtElt& o) const {
    if (!(w_ == o.w_)) return false;
    return (*this + (-o)).is_zero();
}

std::optional<CycElt> QuadExtElt::eval() const {
    if (!root_) return std::nullopt;
    return a_ + b_ * *root_;
}

int certified_real_sign(const CycElt& x) {
    if (!(x.conj() == x)) throw std::invalid_argument("value is not real");
    if (x.is_zero()) return 0;
    for (long prec = 64; prec <= precision_cap(); prec *= 2) {
        DyadicInterval re = complex_interval(x, prec).re;
        if (re.definitely_positive()) return 1;
        if (re.definitely_negative()) return -1;
    }
    throw precision_exhausted("real sign undecided at precision cap");
}

QuadExtElt quadext_conj(const QuadExtElt& x, const GaloisAuto& sigma) {
    if (x.w_.ctx()->order != sigma.ctx->order)
        throw std::invalid_argument("galois context mismatch");

    if (x.root_) {
        CycElt rw = sigma(*x.root_);
        QuadExtElt out = QuadExtElt::sqrt_of(sigma(x.w_), rw);
        out.a_ = sigma(x.a_);
        out.b_ = sigma(x.b_);
        return out;
    }

    const unsigned N = sigma.ctx->order;
    const bool is_conjugation = (sigma.k == N - 1);
    if (!is_conjugation)
        throw ambiguous_extension(
            "formal square root: only complex conjugation extends canonically; "
            "materialize the root for other Galois elements");

    CycElt wc = x.w_.conj();
    if (wc == x.w_) {
        // real radicand: principal sqrt is real (w > 0) or positive imaginary
        // (w < 0); conjugation fixes it resp. negates it.
        int s = certified_real_sign(x.w_);
        QuadExtElt out = QuadExtElt::sqrt_of(x.w_);
        out.a_ = x.a_.conj();
        out.b_ = s > 0 ? x.b_.conj() : -(x.b_.conj());
        out.conj_sign_ = s > 0 ? 1 : -1;
        return out;
    }
    if ((wc * x.w_).is_one()) {
        // |w| = 1 and w not real: conj(sqrt(w)) = sqrt(w^c) exactly, since
        // conj(sqrt(w)) * sqrt(w) = |sqrt(w)|^2 = |w| = 1 = sqrt(w^c)*sqrt(w)
        // for the principal branches off the negative real axis.
        QuadExtElt out = QuadExtElt::sqrt_of(wc);
        out.a_ = x.a_.conj();
        out.b_ = x.b_.conj();
        out.conj_sign_ = 1;
        return out;
    }
    throw ambiguous_extension(
        "radicand with w^c * w not 1 and w not real: conjugate lives in a "
        "composite extension; materialize the root");
}

} // namespace fomcert
