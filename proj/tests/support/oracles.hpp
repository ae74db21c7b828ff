#pragma once

// Independent oracles for the tests.  Each recomputes a library result along
// a route the library does not use, so agreement is meaningful.

#include "udrf/ffield.hpp"
#include "udrf/groups.hpp"
#include "udrf/reps.hpp"

namespace udrf::testing {

// Exhaustive exponent search for a faithful two-dimensional matrix model:
// some (t, i, a) with ord(w^t) = m, ord(w^i) = n, an = t*alpha and
// 2a + i = t(alpha+gamma) mod p-1, and 2r = t*beta solvable.  Tries every
// exponent; the library's embeddable() is a parity formula and
// find_embedding_base() fixes t and i, so this is a genuinely different
// route.
bool embedding_witness_search(const ExtensionParams& par, const PrimeField& F);

// Isomorphism test by exhausting candidate generator images of B.
bool groups_isomorphic_brute(const Group& A, const Group& B);

// dim H^2(D_2n, F_q), trivial action, by direct cocycle/coboundary rank
// computation over F_q (q a small prime).
int dihedral_h2_dim_oracle(int n, int q);

// dim H^2((Z/p)^2, F_p), trivial action, same machinery.
int elementary_h2_dim_oracle(int p);

// d2 along the dual-functional route: the basis coefficients of a
// transformed 2-cocycle are read off by closed-form functionals
// (antisymmetrization for the cup class, column sums for the carries)
// instead of the library's linear solve modulo coboundaries.
int d2_lambda_oracle(const PrimeField& F, const Rep2& phi, const Rep2& rho);

}  // namespace udrf::testing
