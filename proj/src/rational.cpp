#include "fomcert/rational.hpp"

namespace fomcert {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::domain_error("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool int_is_square(const Int& v, Int& r) {
    if (sgn(v) < 0) return false;
    r = sqrt(v);
    return r * r == v;
}

bool rat_is_square(const Rat& v, Rat& r) {
    Int rn, rd;
    if (!int_is_square(v.get_num(), rn)) return false;
    if (!int_is_square(v.get_den(), rd)) return false;
    r = rat(rn, rd);
    return true;
}

} // namespace fomcert
