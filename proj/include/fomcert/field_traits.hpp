#pragma once

#include "fomcert/cyclotomic.hpp"
#include "fomcert/finitefield.hpp"

namespace fomcert {

// Uniform helpers so the matrix/form templates work over both coefficient
// fields. Elements carry their own context, so "like" constructors take a
// sample value.

inline CycElt one_like(const CycElt& x) { return CycElt::one(x.ctx()); }
inline CycElt zero_like(const CycElt& x) { return CycElt::zero(x.ctx()); }
inline CycElt normal_form(const CycElt& x) { return x.normalized(); }
inline int value_cmp(const CycElt& a, const CycElt& b) { return a.cmp(b); }
inline CycElt int_like(const CycElt& x, long v) { return CycElt::from_int(x.ctx(), v); }

inline FqElt one_like(const FqElt& x) { return FqElt::one(x.ctx()); }
inline FqElt zero_like(const FqElt& x) { return FqElt::zero(x.ctx()); }
inline FqElt normal_form(const FqElt& x) { return x; }
inline int value_cmp(const FqElt& a, const FqElt& b) { return a.cmp(b); }
inline FqElt int_like(const FqElt& x, long v) { return FqElt::from_int(x.ctx(), v); }

inline unsigned field_characteristic(const CycElt&) { return 0; }
inline unsigned field_characteristic(const FqElt& x) { return x.ctx()->p; }

template <class K>
concept FieldValue = requires(const K& a, const K& b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a* b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inv() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
};

} // namespace fomcert
