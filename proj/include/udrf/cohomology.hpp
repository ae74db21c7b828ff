#pragma once

// Cohomological dimensions controlling the universal deformation ring of a
// residual representation V of Gamma = (F_p)^2 x| G.
//
// Because |G| is invertible mod p and the normal subgroup N = (F_p)^2 acts
// trivially on M = Hom(V, V), the relevant cohomology of Gamma collapses to
// G-invariants of the cohomology of N:
//
//   d1 = dim Hom_G(N, M)            (multiplicity of phi in Hom(V, V))
//   d2 = dim (H^2(N, F_p) (x) M)^G  (H^2(N, F_p) is 3-dimensional, p odd)
//
// d1 is computed twice, by the multiplicity solve and by counting crossed
// homomorphisms on a presentation of Gamma; the two must agree.

#include <optional>
#include <string>

#include "udrf/ffield.hpp"
#include "udrf/groups.hpp"
#include "udrf/reps.hpp"

namespace udrf {

struct CohomDims {
  int d1 = 0;
  std::optional<int> d2;
  bool operator==(const CohomDims&) const = default;
};

// dim of { linear T : F_p^2 -> M_2(F_p) with T(phi(g) x) =
// rho(g) T(x) rho(g)^{-1} for all g }.  phi and rho are G-representations.
int d1_multiplicity(const PrimeField& F, const Rep2& phi, const Rep2& rho);

// dim Z^1(Gamma, M) - dim B^1(Gamma, M) from cocycle values on the generators
// {n1, n2, X, Y, Z} of Gamma constrained by its defining relations.
int d1_cocycle_oracle(const Group& G, const PrimeField& F, const Rep2& phi,
                      const Rep2& rho);

// dim of the G-invariants of H^2(N, F_p) (x) Hom(V, V).  The action on
// H^2(N, F_p) is computed on the explicit basis (two carry cocycles, one cup
// cocycle) by reducing each transformed cocycle modulo coboundaries with an
// exact linear solve in p^2 + 3 unknowns.
int d2_invariants(const PrimeField& F, const Rep2& phi, const Rep2& rho);

enum class UDRTag { ZP, ZP_T_MOD_T2_PT };

struct UDRClass {
  UDRTag tag = UDRTag::ZP;
  CohomDims dims;
};

// d1 = 0 -> Z_p;  d1 = 1 -> Z_p[[t]]/(t^2, pt).  d1 >= 2 falls outside the
// classified regime: RegimeError.
UDRClass classify_udr(const CohomDims& dims);

std::string udr_tag_string(UDRTag tag);

}  // namespace udrf
