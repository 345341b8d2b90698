#pragma once

#include <array>
#include <optional>

#include "fomcert/grundform.hpp"
#include "fomcert/quadext.hpp"

namespace fomcert {

// y^2 = f(x) with squarefree f of degree >= 5. Search operations (isomorphism
// and automorphism enumeration) require the explicit root list; check
// operations work from coefficients alone.
struct HyperCurve {
    CtxPtr ctx;
    Poly<CycElt> f;
    std::optional<std::vector<CycElt>> roots;
    unsigned genus = 0;
    bool infinity_branch = false; // deg f odd

    bool has_roots() const { return roots.has_value(); }
    unsigned branch_count() const { return 2 * genus + 2; }
};

HyperCurve make_curve(Poly<CycElt> f, std::optional<std::vector<CycElt>> roots = std::nullopt);

// Branch points in P^1 (roots of f, plus [1:0] when deg f is odd), sorted.
std::vector<ProjPoint<CycElt>> branch_points(const HyperCurve& x);

// Isomorphism (x, y) -> ((ax+b)/(cx+d), e y/(cx+d)^(g+1)) recorded at the
// (M, lambda) level with lambda = e^2 tied to the stored lift of M.
struct IsomWitness {
    std::array<CycElt, 4> m; // lift entries a, b, c, d
    CycElt lambda;
    unsigned genus = 0;

    ProjMat<CycElt> mobius() const {
        return ProjMat<CycElt>::make(2, {m[0], m[1], m[2], m[3]});
    }
};

// second o first, lambda multiplying along
IsomWitness compose(const IsomWitness& second, const IsomWitness& first);

// apply sigma to all witness data
IsomWitness conj_witness(const GaloisAuto& sigma, const IsomWitness& w);

// exact validation of the defining polynomial identity
bool is_isom_witness(const HyperCurve& x, const HyperCurve& y, const IsomWitness& w);

// lambda for a given Moebius lift, when it is an isomorphism X -> Y
std::optional<CycElt> witness_lambda(const HyperCurve& x, const HyperCurve& y,
                                     const std::array<CycElt, 4>& lift);

// All isomorphisms X -> Y through branch-triple enumeration; deterministic
// order; empty when the curves are not related by a Moebius map.
std::vector<IsomWitness> isomorphisms(const HyperCurve& x, const HyperCurve& y,
                                      bool parallel = true);

struct RedAutGroup {
    MatGroup<CycElt> group;
    GroupFingerprint fp;
    std::string label;
};

// Setwise stabilizer of the branch set, i.e. Aut(X)/<iota>.
RedAutGroup reduced_aut(const HyperCurve& x, bool parallel = true);

HyperCurve conj_curve(const GaloisAuto& sigma, const HyperCurve& x);

enum class C2Outcome { Definable, Obstructed, NotIsomorphicToConjugate };

struct WeilC2Report {
    C2Outcome outcome;
    std::optional<IsomWitness> witness; // set when Definable
    std::size_t candidates_tried = 0;
};

// Weil condition for the order-2 quotient generated by complex conjugation:
// search all isomorphisms X -> cX for one with phi^c o phi = id exactly at
// both the Moebius and the scalar layer.
WeilC2Report weil_search_C2(const HyperCurve& x, bool parallel = true);

// Does this single witness X -> cX satisfy the C2 cocycle condition?
bool c2_cocycle_holds(const HyperCurve& x, const IsomWitness& w);

enum class MainHypClass { GuaranteedDefinable, CyclicUnresolved };

// Non-cyclic reduced automorphism group (or cyclic of order equal to the
// characteristic) guarantees definability over the field of moduli.
MainHypClass mainhyp_classify(const HyperCurve& x);

// Moebius map sending an ordered triple of distinct P^1 points to (0, 1, oo).
ProjMat<CycElt> mobius_to_standard(const ProjPoint<CycElt>& p1, const ProjPoint<CycElt>& p2,
                                   const ProjPoint<CycElt>& p3);

} // namespace fomcert
