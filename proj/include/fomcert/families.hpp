#pragma once

#include "fomcert/descent.hpp"

namespace fomcert {

// ---- degree-6 Hessian invariants -------------------------------------------

HomForm<CycElt> hessian_phi(const CtxPtr& ctx);  // X0 X1 X2
HomForm<CycElt> hessian_psi(const CtxPtr& ctx);  // X0^3 + X1^3 + X2^3
HomForm<CycElt> hessian_chi(const CtxPtr& ctx);  // sum of X_i^3 X_j^3

// chi - 18 a phi^2 + (a - 1/12) psi^2 - 6 a psi phi
HomForm<CycElt> g36_sextic(const CtxPtr& ctx, const CycElt& a);

// c_psi2 psi^2 - 6 c_phipsi phi psi - 18 c_phi2 phi^2 + chi with the
// coefficients mixing omega, sqrt(u), sqrt(v)
HomForm<CycElt> g18_sextic(const CtxPtr& ctx, const Rat& a1, const Rat& a2, const Rat& a3,
                           const Rat& u, const Rat& v);

// ---- conjugate-pair hyperelliptic families ----------------------------------

// f(x) = prod (x^n - a_i)(x^n + 1/a_i^c) resp.
// g(x) = x prod (x^m - b_i)(x^m + 1/b_i^c). The factor constants enter
// through their n-th roots so the branch points stay inside the cyclotomic
// context: a_i = root_params[i]^n.
struct Ch5Params {
    unsigned n = 2; // m for the g-family
    unsigned r = 2; // s for the g-family
    std::vector<CycElt> root_params;
    bool g_family = false;
};

struct Ch5ConditionReport {
    bool params_ok = false;          // 2nr > 5 / sm even, parity constraint
    bool squarefree = false;
    bool not_real = false;           // not a polynomial over R
    bool inversion_moves_zeros = false;
    bool rotation_multiset_ok = false;
    bool special3_plus = true;       // n = 3 condition, +sqrt(3) branch
    bool special3_minus = true;      // and the -sqrt(3) branch
    bool all() const {
        return params_ok && squarefree && not_real && inversion_moves_zeros &&
               rotation_multiset_ok && special3_plus && special3_minus;
    }
};

struct Ch5Build {
    HyperCurve curve;
    Ch5ConditionReport report;
    std::vector<CycElt> constants; // the a_i (resp. b_i)
    CycElt zeta2n;
    CycElt lambda; // product of -a_i^c / a_i (with the zeta factor for g)
};

Ch5Build ch5_build(const Ch5Params& p, const CtxPtr& ctx);

// the explicit isomorphism X -> cX of the family, validated exactly;
// lambda^c * lambda = 1 is asserted
IsomWitness ch5_witness(const Ch5Build& b);

// ---- diagonal plane family ---------------------------------------------------

// h = X2^(2nr) - prod (X0^n - a_i X1^n)(X0^n + a_i^c X1^n)
struct DiagBundle {
    PlaneCurve curve;
    Ch5ConditionReport conditions;
    SmoothCert cert;
    std::size_t aut_order = 0;     // |<E, F, H>| from closure
    bool efh_invariant = false;
    bool w_unit_circle = false;    // w^c w = 1 for w = prod -a_i^c/a_i
    bool mu_is_isom = false;       // the antidiagonal witness with formal gamma
    bool obstructed = false;       // every mu' = mu A fails mu'^c mu' = Id
    std::size_t candidates_tried = 0;
};

DiagBundle ch7_diag_build(const Ch5Params& p, const CtxPtr& ctx);

// ---- G18 sextics --------------------------------------------------------------

struct G18Params {
    Rat alpha1 = rat(1), alpha2 = rat(1), alpha3 = rat(1);
    Rat u = rat(2), v = rat(13);
    long norm_bound = 50;
    unsigned cert_p = 13, cert_k = 2;
};

struct G18Bundle {
    PlaneCurve curve;
    bool dehom_squarefree = false;      // F(X0,1,1)
    std::size_t stab_order = 0;         // in G216
    bool stab_is_g18 = false;
    bool omega_fixing_sigma_in_g72 = false; // sigma with sigma(omega)=omega: coset hit
    bool conjugation_in_g72 = false;        // expected false
    bool normeq_empty = false;
    bool cert_u = false, cert_neg_u = false;
    bool lattice_property = false;      // G72/G18 surjection forces G72/G9
};

G18Bundle g18_build(const G18Params& p, bool parallel = true);

// context hosting omega, sqrt(u), sqrt(v)
unsigned g18_context_order(const Rat& u, const Rat& v);

// ---- G36 sextics ---------------------------------------------------------------

struct G36Params {
    Rat beta = rat(1); // a = beta * i
};

struct G36Bundle {
    PlaneCurve curve;
    SmoothCert cert;
    std::size_t stab_order = 0; // in G72
    bool stab_is_g36 = false;
    bool uvu_maps_to_negated = false; // ([f_a]) UVU^-1 = [f_{-a}]
    bool obstructed = false;
    std::size_t candidates_tried = 0;
};

G36Bundle g36_build(const G36Params& p, bool parallel = true);

} // namespace fomcert
