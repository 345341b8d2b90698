#pragma once

#include "fomcert/matgroup.hpp"

namespace fomcert {

// Finite subgroups of PGL_2 over a cyclotomic context. Each constructor
// builds the generator matrices, closes them, and verifies the expected
// order.

MatGroup<CycElt> catalog_Cn(const CtxPtr& ctx, unsigned n);
MatGroup<CycElt> catalog_D2n(const CtxPtr& ctx, unsigned n); // order 2n, n > 1
MatGroup<CycElt> catalog_A4(const CtxPtr& ctx);
MatGroup<CycElt> catalog_S4(const CtxPtr& ctx);
MatGroup<CycElt> catalog_A5(const CtxPtr& ctx);

// The Hessian-family tower in PGL_3 (needs a cube root of unity), plus the
// exceptional groups of orders 60, 360 and 168.
MatGroup<CycElt> catalog_G9(const CtxPtr& ctx);
MatGroup<CycElt> catalog_G18(const CtxPtr& ctx);
MatGroup<CycElt> catalog_G36(const CtxPtr& ctx);
MatGroup<CycElt> catalog_G72(const CtxPtr& ctx);
MatGroup<CycElt> catalog_G216(const CtxPtr& ctx);
MatGroup<CycElt> catalog_G60(const CtxPtr& ctx);
MatGroup<CycElt> catalog_G360(const CtxPtr& ctx);
MatGroup<CycElt> catalog_G168(const CtxPtr& ctx);

// Named generators of the Hessian tower.
ProjMat<CycElt> hessian_S(const CtxPtr& ctx);
ProjMat<CycElt> hessian_T(const CtxPtr& ctx);
ProjMat<CycElt> hessian_R(const CtxPtr& ctx);
ProjMat<CycElt> hessian_V(const CtxPtr& ctx);
ProjMat<CycElt> hessian_U(const CtxPtr& ctx);

// Groups of type C (diagonal images together with the 3-cycle T) and type D
// (additionally the swap R). `diagonals` lists the diagonal entries
// (d0, d1, d2) of the generating diagonal images.
MatGroup<CycElt> catalog_typeC(const CtxPtr& ctx,
                               const std::vector<std::array<long, 3>>& diagonal_zeta_exps);
MatGroup<CycElt> catalog_typeD(const CtxPtr& ctx,
                               const std::vector<std::array<long, 3>>& diagonal_zeta_exps);

// Intransitive embedding PGL_2 -> PGL_3 (block upper-left, trailing 1).
ProjMat<CycElt> intransitive_lift(const ProjMat<CycElt>& inner);

// Canonical finite intransitive groups over the named PGL_2 images. The
// block generators are determinant-1 lifts (the binary dihedral, octahedral
// and icosahedral covers), since arbitrary projective representatives need
// not generate a finite subgroup of GL_2.
MatGroup<CycElt> intransitive_lift_D2n(const CtxPtr& ctx, unsigned n); // needs lcm(4, 2n) | N
MatGroup<CycElt> intransitive_lift_S4(const CtxPtr& ctx);              // needs 8 | N
MatGroup<CycElt> intransitive_lift_A5(const CtxPtr& ctx);              // needs 5 | N

// Characteristic-p catalogs.
MatGroup<FqElt> catalog_PSL2(const FqCtxPtr& ctx);
MatGroup<FqElt> catalog_PGL2(const FqCtxPtr& ctx);
// beta a root of unity with beta*A = A; A an additive subgroup containing 1,
// given explicitly and validated.
MatGroup<FqElt> catalog_G_beta_A(const FqCtxPtr& ctx, const FqElt& beta,
                                 const std::vector<FqElt>& A);
MatGroup<FqElt> catalog_PSL2_in_PGL3(const FqCtxPtr& ctx);
MatGroup<FqElt> catalog_PGL2_in_PGL3(const FqCtxPtr& ctx);

unsigned long psl2_order(unsigned long q);
unsigned long pgl2_order(unsigned long q);

// Name-based lookup used by the CLI: "C_n"/"D_2n" take n, "PSL2_Fq"/"PGL2_Fq"
// take (p, r). Cyclotomic groups pick the minimal context when ctx_order = 0.
struct CatalogKey {
    std::string name;
    unsigned n = 0;
    unsigned p = 0, r = 1;
    unsigned ctx_order = 0;
};

struct CatalogEntry {
    std::optional<MatGroup<CycElt>> cyc;
    std::optional<MatGroup<FqElt>> fq;
    std::size_t order() const { return cyc ? cyc->order() : fq->order(); }
};

CatalogEntry catalog(const CatalogKey& key);

} // namespace fomcert
