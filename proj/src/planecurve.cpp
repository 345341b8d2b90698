#include "fomcert/planecurve.hpp"

namespace fomcert {

PlaneCurve make_plane_curve(HomForm<CycElt> f) {
    if (f.nvars() != 3) throw std::invalid_argument("plane curve needs a ternary form");
    if (f.degree() <= 3) throw std::invalid_argument("plane curve degree must exceed 3");
    if (f.is_zero()) throw std::invalid_argument("zero form");
    PlaneCurve x;
    x.ctx = f.sample().ctx();
    x.form = std::move(f);
    return x;
}

PlaneCurve conj_plane(const GaloisAuto& sigma, const PlaneCurve& x) {
    HomForm<CycElt> g(3, x.form.degree());
    for (const auto& [e, c] : x.form.terms()) {
        if (c.is_zero()) continue;
        g.add_term(e, sigma(c));
    }
    return make_plane_curve(std::move(g));
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                    long& best) {
    if (remaining == 0) {
        long genus_sum = 0, inter = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            long d = cur[i];
            genus_sum += (d - 1) * (d - 2) / 2;
            for (std::size_t j = i + 1; j < cur.size(); ++j) inter += d * cur[j];
        }
        best = std::max(best, genus_sum + inter);
        return;
    }
    for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, best);
        cur.pop_back();
    }
}

} // namespace

long bezout_singular_bound(unsigned d) {
    long best = 0;
    std::vector<unsigned> cur;
    partitions_rec(d, d, cur, best);
    return best;
}

namespace {

// F(X0, X1, 0) restricted partials share no projective zero
bool restricted_partials_resultant_nonzero(const HomForm<CycElt>& f) {
    const CycElt sample = f.sample();
    const CycElt zero = CycElt::zero(sample.ctx());
    unsigned d = f.degree();
    auto restrict_x2 = [&](const HomForm<CycElt>& g) {
        std::vector<CycElt> c(g.degree() + 1, zero);
        for (const auto& [e, v] : g.terms()) {
            if (e[2] != 0 || v.is_zero()) continue;
            c[e[0]] = c[e[0]] + v;
        }
        return Poly<CycElt>(std::move(c));
    };
    Poly<CycElt> p0 = restrict_x2(f.partial(0));
    Poly<CycElt> p1 = restrict_x2(f.partial(1));
    if (p0.is_zero() || p1.is_zero()) return false;
    CycElt res = resultant_with_degrees(p0, static_cast<long>(d) - 1, p1,
                                        static_cast<long>(d) - 1);
    return !res.is_zero();
}

bool point_nonsingular(const HomForm<CycElt>& f, const ProjPoint<CycElt>& p) {
    std::vector<CycElt> pt(p.x.begin(), p.x.end());
    if (!f.eval(pt).is_zero()) return true;
    for (unsigned v = 0; v < 3; ++v)
        if (!f.partial(v).eval(pt).is_zero()) return true;
    return false;
}

} // namespace

SmoothCert smooth_by_symmetry(const PlaneCurve& x, const MatGroup<CycElt>& g,
                              const std::vector<ProjPoint<CycElt>>& reps,
                              std::size_t min_uncovered_orbit, bool check_diagonal_line,
                              bool parallel) {
    const HomForm<CycElt>& f = x.form;
    for (const auto& m : g.gens)
        if (!proj_eq(f.acted_by(m), f))
            throw std::invalid_argument("form is not invariant under the given group");

    SmoothCert cert;
    cert.method = "symmetry";
    cert.bezout_bound = bezout_singular_bound(f.degree());
    cert.min_uncovered_orbit = min_uncovered_orbit;
    cert.counting_ok = static_cast<long>(min_uncovered_orbit) > cert.bezout_bound;
    cert.resultant_nonzero = restricted_partials_resultant_nonzero(f);
    cert.line_checked = check_diagonal_line;
    if (check_diagonal_line) {
        // F(X0, 1, 1) squarefree kills the [delta:1:1] orbit families
        CycElt one = CycElt::one(x.ctx);
        Poly<CycElt> line = f.dehomogenize(0, {one, one});
        cert.line_squarefree = poly_squarefree(line);
    }

    auto rep_result = [&](std::size_t i) {
        return point_nonsingular(f, reps[i]) ? 1 : 0;
    };
    std::vector<int> ok = parallel ? par_map<int>(reps.size(), rep_result)
                                   : serial_map<int>(reps.size(), rep_result);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        cert.rep_points.push_back(reps[i].str());
        cert.rep_inputs.push_back(reps[i]);
        cert.rep_orbit_sizes.push_back(orbit(g, reps[i], parallel).size());
        cert.rep_nonsingular.push_back(ok[i] != 0);
    }

    cert.smooth = cert.counting_ok && cert.resultant_nonzero &&
                  (!check_diagonal_line || cert.line_squarefree);
    for (std::size_t i = 0; i < reps.size() && cert.smooth; ++i)
        if (!cert.rep_nonsingular[i]) cert.smooth = false;

    if (!cert.smooth) {
        if (!cert.resultant_nonzero)
            cert.failure = "restricted partials share a zero on X2 = 0 (repeated factor)";
        else if (check_diagonal_line && !cert.line_squarefree)
            cert.failure = "F(X0,1,1) is not squarefree";
        else if (!cert.counting_ok)
            cert.failure = "counting bound does not exclude the uncovered orbits";
        else {
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (!cert.rep_nonsingular[i]) {
                    cert.failure = "singular short-orbit point " + cert.rep_points[i];
                    break;
                }
        }
    }
    return cert;
}

bool replay_cert(const PlaneCurve& x, const MatGroup<CycElt>& g, const SmoothCert& cert) {
    if (cert.method != "symmetry") return false;
    SmoothCert fresh = smooth_by_symmetry(x, g, cert.rep_inputs, cert.min_uncovered_orbit,
                                          cert.line_checked);
    return fresh.same_outcome(cert);
}

SmoothCert diag_family_smooth(const PlaneCurve& h, unsigned n, unsigned r) {
    const HomForm<CycElt>& form = h.form;
    const unsigned d = form.degree();
    if (d != 2 * n * r) throw std::invalid_argument("degree does not match X2^(2nr) - f(X0,X1)");
    const CycElt one = CycElt::one(h.ctx);
    const CycElt zero = CycElt::zero(h.ctx);

    SmoothCert cert;
    cert.method = "diagonal-family";
    cert.bezout_bound = bezout_singular_bound(d);

    // shape: X2 appears only in the monomial X2^d with coefficient c, and the
    // rest is a binary form in X0, X1
    CycElt x2_coeff = form.coeff({0, 0, d});
    HomForm<CycElt> minus_f(2, d);
    for (const auto& [e, c] : form.terms()) {
        if (c.is_zero()) continue;
        if (e[2] == d) continue;
        if (e[2] != 0) throw std::invalid_argument("mixed X2 terms: not of the diagonal shape");
        minus_f.add_term({e[0], e[1], 0}, c);
    }
    if (x2_coeff.is_zero()) throw std::invalid_argument("X2^(2nr) term missing");

    // (1) restriction to X1 = 0 is squarefree (2nr distinct zeros)
    std::vector<CycElt> rest(d + 1, zero);
    for (const auto& [e, c] : form.terms()) {
        if (c.is_zero() || e[1] != 0) continue;
        rest[e[2]] = rest[e[2]] + c;
    }
    Poly<CycElt> on_line(std::move(rest));
    bool check1 = poly_squarefree(on_line) && on_line.degree() == static_cast<long>(d) &&
                  !on_line.coeff(0).is_zero();
    // (2) f(X0, 1) squarefree
    Poly<CycElt> f_dehom = minus_f.dehomogenize(0, {one});
    bool check2 = poly_squarefree(f_dehom) && f_dehom.degree() == static_cast<long>(d);
    // (3) h_X2 = d * X2^(d-1) * coeff vanishes only on X2 = 0 (needs char 0
    // or char not dividing d; exact here)
    bool check3 = !CycElt::from_int(h.ctx, static_cast<long>(d)).is_zero();

    cert.resultant_nonzero = check1;
    cert.line_squarefree = check2;
    cert.line_checked = true;
    cert.counting_ok = check3;
    cert.smooth = check1 && check2 && check3;
    if (!cert.smooth) {
        if (!check1) cert.failure = "zeros on X1 = 0 are not distinct";
        else if (!check2) cert.failure = "f(X0,1) is not squarefree";
        else cert.failure = "characteristic divides the degree";
    }
    return cert;
}

std::vector<ProjMat<CycElt>> isom_candidates_check(const PlaneCurve& x, const PlaneCurve& y,
                                                   const std::vector<ProjMat<CycElt>>& candidates,
                                                   bool parallel) {
    if (x.form.degree() != y.form.degree())
        throw std::invalid_argument("curves of different degree");
    auto check = [&](std::size_t i) {
        return proj_eq(x.form.acted_by(candidates[i]), y.form) ? 1 : 0;
    };
    std::vector<int> ok = parallel ? par_map<int>(candidates.size(), check)
                                   : serial_map<int>(candidates.size(), check);
    std::vector<ProjMat<CycElt>> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (ok[i]) out.push_back(candidates[i]);
    return out;
}

std::vector<ProjPoint<CycElt>> g18_short_orbit_reps(const CtxPtr& ctx) {
    CycElt one = CycElt::one(ctx), zero = CycElt::zero(ctx);
    CycElt w = root_of_unity(ctx, 3);
    return {ProjPoint<CycElt>::make({one, zero, zero}),
            ProjPoint<CycElt>::make({one, one, one}),
            ProjPoint<CycElt>::make({one, one, w}),
            ProjPoint<CycElt>::make({one, one, w * w})};
}

std::vector<ProjPoint<CycElt>> g36_short_orbit_reps(const CtxPtr& ctx) {
    CycElt one = CycElt::one(ctx), zero = CycElt::zero(ctx);
    CycElt s3 = embed_quadratic(ctx, rat(3));
    return {ProjPoint<CycElt>::make({one, zero, zero}),
            ProjPoint<CycElt>::make({zero, one, -one}),
            ProjPoint<CycElt>::make({one - s3, one, one}),
            ProjPoint<CycElt>::make({one + s3, one, one})};
}

} // namespace fomcert
