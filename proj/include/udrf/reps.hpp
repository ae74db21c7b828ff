#pragma once

// Representation layer.
//
// Degree-one representations (characters) of G, degree-two irreducible
// representations over F_p, the dihedral representations theta_ell, the
// matrix model rho_ell for embeddable parameters, character twists, and the
// two routes to kernels: direct evaluation and the Diophantine description
//
//   ker(chi^k . rho_ell) = { X^{(n/g) sigma} Z^tau :
//                            A sigma + B tau = 0 (mod m) },   g = gcd(n, ell),
//
// with coefficients (A, B) advancing by a fixed step as the twist varies.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "udrf/ffield.hpp"
#include "udrf/groups.hpp"

namespace udrf {

enum class RepSource { G, Dihedral };

// Degree-two representation given by generator images.  For source G the
// images are of X, Y, Z in the normal position: x and z diagonal (z scalar),
// y skew-diagonal.  For source Dihedral the fields x and y hold the images of
// the rotation r and the reflection s, and z is the identity.
struct Rep2 {
  Matrix2 x{};
  Matrix2 y{};
  Matrix2 z{};
  RepSource source = RepSource::G;
  bool operator==(const Rep2&) const = default;
};

// r |-> diag(omega^ell, omega^-ell), s |-> antidiag(1,1), omega = w^{(p-1)/n}.
// Throws ParamError unless n | p-1 and 1 <= ell <= n-1, RegimeError when
// omega^{2 ell} = 1 (the representation would be reducible).
Rep2 theta_ell(int n, const PrimeField& F, int ell);

// View a dihedral representation as a representation of G that is trivial on
// <Z> (Z |-> identity).
Rep2 inflate(const Rep2& theta);

bool satisfies_relations(const Group& G, const PrimeField& F, const Rep2& rep);

Matrix2 rep_eval(const PrimeField& F, const Rep2& rep, const GElement& g);

// Commutant has dimension one.
bool is_absolutely_irreducible(const PrimeField& F, const Rep2& rep);

struct Character {
  int cX = 1;
  int cY = 1;
  int cZ = 1;
  auto operator<=>(const Character&) const = default;
};

int char_eval(const PrimeField& F, const Character& c, const GElement& g);
Subgroup char_kernel(const Group& G, const PrimeField& F, const Character& c);

// Which closed form the degree-one representations take:
//   1: beta=0, alpha+gamma even     2: beta=0, alpha+gamma odd
//   3: beta=1, alpha+gamma even     4: beta=1, alpha+gamma odd
// (beta is normalized first; requires m even).
int character_case(const ExtensionParams& par);

// All 2m degree-one representations, sorted by (dlog cZ, dlog cX, dlog cY).
// Requires embeddable parameters; cross-checks the count and the closed-form
// list for the applicable case (ConsistencyError on mismatch).
std::vector<Character> enumerate_characters(const Group& G,
                                            const PrimeField& F);

// All m(n-1)/2 classes of degree-two irreducibles: Z |-> zeta I with
// zeta^m = 1, X |-> diag(x1, x2) with x1^n = zeta^alpha and
// x2 = x1^{-1} zeta^{alpha+gamma}, Y |-> antidiag(u, u') with u u' =
// zeta^beta, deduplicated under the diagonal swap.  ConsistencyError when the
// count or an internal check fails.
std::vector<Rep2> enumerate_irreps2(const Group& G, const PrimeField& F);

// Class invariant of a normal-position G-representation: (dlog of the scalar
// of imgZ, unordered dlog pair of the diagonal of imgX).
struct RepClassKey {
  int zeta_log = 0;
  int x1_log = 0;  // <= x2_log
  int x2_log = 0;
  auto operator<=>(const RepClassKey&) const = default;
};

RepClassKey class_key(const PrimeField& F, const Rep2& rep);

// Index of rep's class in the canonical enumeration, or nullopt.
std::optional<int> class_index(const PrimeField& F,
                               const std::vector<Rep2>& irreps,
                               const Rep2& rep);

// Exponents for the matrix model: X |-> diag(w^{a+i}, w^a),
// Y |-> antidiag(w^r, w^r), Z |-> w^t I, with <w^t> = Z/m, <w^i> = Z/n,
// w^{an} = w^{t alpha}, w^{2a+i} = w^{t(alpha+gamma)},
// w^{2r} = 1 (beta = 0) or w^t (beta = 1).
struct EmbeddingBase {
  int a = 0;
  int i = 0;
  int r = 0;
  int t = 0;
};

// Canonical choice t = (p-1)/m, i = (p-1)/n; a exists iff the parameters are
// embeddable.  Requires even n, m (RegimeError otherwise).
std::optional<EmbeddingBase> find_embedding_base(const ExtensionParams& par,
                                                 const PrimeField& F);

// X |-> diag(w^{a ell}, w^{(a+i) ell}), Z |-> w^{t ell} I,
// Y |-> antidiag(w^r) for beta = 0 or antidiag(w^{r ell}) for beta = 1.
// Throws ParamError if the base does not satisfy the identities above or if
// the result would be reducible (i*ell = 0 mod p-1).
Rep2 rho_ell(const Group& G, const PrimeField& F, const EmbeddingBase& base,
             int ell);

Rep2 twist(const PrimeField& F, const Character& chi, const Rep2& rep);

// Elements evaluating to the identity matrix; a Subgroup in canonical form.
Subgroup kernel_direct(const Group& G, const PrimeField& F, const Rep2& rep);

struct DiophantineEq {
  int A = 0;  // coefficient of sigma, in [0, m)
  int B = 0;  // coefficient of tau, in [0, m)
  int sigma_count = 0;  // sigma ranges over [0, gcd(n, ell))
  int tau_count = 0;    // tau ranges over [0, m)
  bool operator==(const DiophantineEq&) const = default;
};

// A character of <X, Z> with values in mu_m, stored as exponents base w^t
// (t = (p-1)/m):  X |-> w^{t eX}, Z |-> w^{t eZ}.
struct RestrictedChar {
  int eX = 0;
  int eZ = 0;
  auto operator<=>(const RestrictedChar&) const = default;
};

// Restrictions of the 2m degree-one representations to <X, Z>: exactly m
// distinct ones.  When alpha+gamma is odd the group of restrictions is cyclic
// and the list is ordered by powers of the generator
// (X, Z) |-> (w^{t(-alpha-gamma)}, w^{-2t}), so that the Diophantine
// coefficients advance by the printed step rule; otherwise the list is sorted
// by (eX, eZ).
std::vector<RestrictedChar> restricted_characters(const Group& G,
                                                  const PrimeField& F);

// Any degree-one representation restricting to rc (lex-least lift).
Character lift_restricted(const Group& G, const PrimeField& F,
                          const RestrictedChar& rc);

// Kernel of the k-th twist of rho_ell:  A = alpha*(ell/g) + eX*(n/g),
// B = ell + eZ (mod m), solutions { X^{(n/g) sigma} Z^tau }.
std::pair<DiophantineEq, Subgroup> kernel_diophantine(const Group& G,
                                                      const PrimeField& F,
                                                      int ell, int k);

// Indices into irreps of the classes rho with d1(phi, rho) >= 1, i.e. those V
// whose universal deformation ring over Gamma_phi is not Z_p.
std::vector<int> udr_nontrivial_set(const Group& G, const PrimeField& F,
                                    const std::vector<Rep2>& irreps,
                                    const Rep2& phi);

// Same set computed along the second route: the character orbit of rho_ell,
// mapped to class indices.  Only defined when phi is theta_ell inflated.
std::vector<int> character_orbit_of_rho(const Group& G, const PrimeField& F,
                                        const std::vector<Rep2>& irreps,
                                        int ell);

using KernelSet = std::vector<Subgroup>;

// Deduplicated, sorted set of kernels of the representations in
// udr_nontrivial_set(phi).
KernelSet kernel_set(const Group& G, const PrimeField& F,
                     const std::vector<Rep2>& irreps, const Rep2& phi);

std::string subgroup_to_string(const Subgroup& H);

}  // namespace udrf
