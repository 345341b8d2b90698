// Benchmark: serial reference implementations against the OpenMP kernels.
// The serial versions are the contracts the tests cross-check; this target
// reports the speedup on the three data-parallel hot spots.

#include <chrono>
#include <iostream>

#include "fomcert/catalog.hpp"
#include "fomcert/families.hpp"

using namespace fomcert;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_once(F&& fn) {
    auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, double serial, double parallel) {
    std::cout << name << ": serial " << serial << "s, parallel " << parallel << "s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) worker_threads() = std::atoi(argv[1]);
    std::cout << "threads: " << effective_threads() << "\n";

    // group closure (G216 and G360 generators)
    {
        auto ctx = CycCtx::get(3);
        std::vector<ProjMat<CycElt>> gens{hessian_S(ctx), hessian_T(ctx), hessian_R(ctx),
                                          hessian_V(ctx), hessian_U(ctx)};
        double s = time_once([&] { group_closure_serial(gens); });
        double p = time_once([&] { group_closure(gens); });
        report("closure G216", s, p);
    }
    {
        auto ctx = CycCtx::get(15);
        auto gens = catalog_G360(ctx).gens;
        double s = time_once([&] { group_closure_serial(gens); });
        double p = time_once([&] { group_closure(gens); });
        report("closure G360", s, p);
    }

    // stabilizer scan of the G18 sextic inside G216 over Q(zeta_312)
    {
        auto ctx = CycCtx::get(312);
        HomForm<CycElt> f = g18_sextic(ctx, rat(1), rat(1), rat(1), rat(2), rat(13));
        auto small = catalog_G216(CycCtx::get(3));
        std::vector<ProjMat<CycElt>> lifted;
        for (const auto& m : small.elements) {
            std::vector<CycElt> e;
            for (const auto& v : m.entries()) e.push_back(v.lift_to(ctx));
            lifted.push_back(ProjMat<CycElt>::make(3, std::move(e)));
        }
        MatGroup<CycElt> g216;
        g216.gens = lifted;
        g216.elements = std::move(lifted);
        std::sort(g216.elements.begin(), g216.elements.end());
        double s = time_once([&] { stabilizer_form_serial(f, g216); });
        double p = time_once([&] { stabilizer_form(f, g216); });
        report("stabilizer G216 (deg-96 field)", s, p);
    }

    // triple enumeration for a genus-4 automorphism group
    {
        auto ctx = CycCtx::get(20);
        CycElt one = CycElt::one(ctx);
        CycElt i = root_of_unity(ctx, 4);
        CycElt eps = root_of_unity(ctx, 5);
        CycElt phi = one + eps + eps.pow(4);
        std::vector<CycElt> roots{CycElt::zero(ctx), one,      -one,      i,
                                  -i,                phi,      -phi,      phi.inv(),
                                  -(phi.inv())};
        Poly<CycElt> f = Poly<CycElt>::constant(one);
        for (const auto& r : roots)
            f = f * Poly<CycElt>(std::vector<CycElt>{-r, one});
        HyperCurve x = make_curve(f, roots);
        double s = time_once([&] { reduced_aut(x, false); });
        double p = time_once([&] { reduced_aut(x, true); });
        report("reduced automorphisms (720 triples)", s, p);
    }
    return 0;
}
