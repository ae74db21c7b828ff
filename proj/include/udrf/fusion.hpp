#pragma once

// Fusion of the normal subgroup N = (F_p)^2 inside Gamma = N x| G: the orbit
// partition of N under the matrix group phi(G).  For phi = theta_ell the
// partition has a closed form depending only on gcd(n, ell), which is what a
// kernel set recovers.

#include <utility>
#include <vector>

#include "udrf/ffield.hpp"
#include "udrf/groups.hpp"
#include "udrf/reps.hpp"

namespace udrf {

// Canonical orbit partition of F_p^2.  Points are encoded v1 * p + v2; each
// block is sorted and blocks are ordered by (size, least element).
struct FusionPartition {
  int p = 0;
  std::vector<std::vector<int>> blocks;
  bool operator==(const FusionPartition&) const = default;
};

FusionPartition fusion_bruteforce(const PrimeField& F, const Rep2& phi);

// Orbit templates for theta_ell with omega = w^{(p-1)/n}, k = n/gcd(n, ell):
//   {0};  {(omega^{j ell} x, omega^{-j ell} y)} of size k when x, y != 0 and
//   y/x lies in <omega^ell>;  otherwise the rotation orbits of (x, y) and
//   (y, x) fuse into one block of size 2k.
FusionPartition fusion_closed_form(int n, const PrimeField& F, int ell);

// Partition of { (v, id) } under conjugation by every element of Gamma.
// Exercises gamma_mul/gamma_inv directly, so it is only sensible for small
// |Gamma| (ParamError above 10^7 conjugations).
FusionPartition fusion_by_gamma_conjugation(const Group& G,
                                            const PrimeField& F,
                                            const Rep2& phi);

// Reads gcd(n, ell) off a kernel set K = kernel_set(theta_ell).  Kernels
// containing Z are the inflations of dihedral kernels and are present exactly
// when the gcd is even; those pin down the even case, and in the odd case the
// least positive X-exponent e across K is n / gcd directly:
//   no kernel contains Z:  gcd = n / e            (e = n when no X-power)
//   some kernel contains Z: gcd = 2n / max e_ker over the Z-containing
//                           kernels, e_ker their least positive X-exponent.
// Empty K: RegimeError; a reading that fails to divide: ConsistencyError.
int recover_gcd_from_kernel_set(const Group& G, const KernelSet& K);

}  // namespace udrf
