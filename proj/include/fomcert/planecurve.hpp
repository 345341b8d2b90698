#pragma once

#include "fomcert/grundform.hpp"

namespace fomcert {

// Smooth plane curve F = 0 of degree d > 3, F a ternary form.
struct PlaneCurve {
    HomForm<CycElt> form;
    CtxPtr ctx;
};

PlaneCurve make_plane_curve(HomForm<CycElt> f);

PlaneCurve conj_plane(const GaloisAuto& sigma, const PlaneCurve& x);

// Bezout bound: the largest possible number of singular-or-intersection
// points over all factorizations of a degree-d form, computed from the
// degree partitions.
long bezout_singular_bound(unsigned d);

// Certificate for smoothness established through the symmetry argument: a
// singular point would have a full orbit of singular points, the partition
// bound caps how many there can be, and the finitely many short orbits are
// checked directly. The per-check results are stored so the certificate
// replays deterministically.
struct SmoothCert {
    std::string method;
    bool smooth = false;
    std::string failure;

    long bezout_bound = 0;
    std::size_t min_uncovered_orbit = 0;
    bool counting_ok = false;
    bool resultant_nonzero = false;        // partials restricted to X2 = 0
    bool line_checked = false;             // [delta:1:1] family handled
    bool line_squarefree = false;
    std::vector<std::string> rep_points;
    std::vector<ProjPoint<CycElt>> rep_inputs;
    std::vector<std::size_t> rep_orbit_sizes;
    std::vector<bool> rep_nonsingular;

    bool same_outcome(const SmoothCert& o) const {
        return method == o.method && smooth == o.smooth && failure == o.failure &&
               bezout_bound == o.bezout_bound && counting_ok == o.counting_ok &&
               resultant_nonzero == o.resultant_nonzero && line_checked == o.line_checked &&
               line_squarefree == o.line_squarefree && rep_points == o.rep_points &&
               rep_orbit_sizes == o.rep_orbit_sizes && rep_nonsingular == o.rep_nonsingular;
    }
};

// F must be G-invariant (precondition error otherwise). `reps` lists one
// representative per finite short orbit; orbits of size >= min_uncovered are
// excluded by the counting bound; when check_diagonal_line is set the
// parameterized [delta:1:1] orbits are ruled out via squarefreeness of
// F(X0, 1, 1).
SmoothCert smooth_by_symmetry(const PlaneCurve& x, const MatGroup<CycElt>& g,
                              const std::vector<ProjPoint<CycElt>>& reps,
                              std::size_t min_uncovered_orbit, bool check_diagonal_line,
                              bool parallel = true);

// Replays every stored check; true iff the certificate reproduces.
bool replay_cert(const PlaneCurve& x, const MatGroup<CycElt>& g, const SmoothCert& cert);

// Smoothness for the diagonal family h = X2^(2nr) - f(X0, X1), replaying the
// three checks: distinct zeros on X1 = 0, squarefree f, and the h_X2 case
// analysis (which needs the exact monomial shape).
SmoothCert diag_family_smooth(const PlaneCurve& h, unsigned n, unsigned r);

// Candidates M with ([F_X])M = [F_Y]; the caller supplies the finite
// candidate set dictated by the classification results.
std::vector<ProjMat<CycElt>> isom_candidates_check(const PlaneCurve& x, const PlaneCurve& y,
                                                   const std::vector<ProjMat<CycElt>>& candidates,
                                                   bool parallel = true);

// Short-orbit representatives from the orbit analysis of the Hessian groups.
std::vector<ProjPoint<CycElt>> g18_short_orbit_reps(const CtxPtr& ctx);
std::vector<ProjPoint<CycElt>> g36_short_orbit_reps(const CtxPtr& ctx); // needs sqrt(3)

} // namespace fomcert
