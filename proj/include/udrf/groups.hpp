#pragma once

// The group family G = G(n, m, alpha, beta, gamma): central extensions of the
// dihedral group D_2n by Z/m with presentation
//
//   < X, Y, Z | X^n = Z^alpha, Y^2 = Z^beta, YX = X^{n-1} Y Z^gamma,
//               Z central, Z^m = 1 >.
//
// Elements carry the normal form X^x Y^y Z^z with x in [0,n), y in {0,1},
// z in [0,m), so |G| = 2nm.  The rewriting above is associative exactly when
// n(alpha+gamma) = 2*alpha (mod m); Group's constructor enforces this.
//
// Also here: the semidirect product Gamma = (F_p)^2 x| G attached to a
// two-dimensional representation phi (elements GammaElement), and the
// embeddability test for faithful two-dimensional representations.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "udrf/ffield.hpp"

namespace udrf {

struct ExtensionParams {
  int n = 0;
  int m = 0;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  bool operator==(const ExtensionParams&) const = default;
};

// Range checks only: n >= 1, m >= 1, alpha/beta/gamma in [0, m).
void validate_params(const ExtensionParams& par);

// Whether the presentation defines a group of order 2nm, i.e. whether
// conjugation by Y respects X^n = Z^alpha:  n(alpha+gamma) = 2*alpha (mod m).
bool presentation_consistent(const ExtensionParams& par);

// Z^beta lies in <Z^2> iff m is odd or beta is even; in that case the group is
// isomorphic to the one with beta' = 0, otherwise to beta' = 1.
ExtensionParams normalize_beta(ExtensionParams par);

// Criterion for G to admit a faithful two-dimensional irreducible
// representation:  (n/2)(alpha+gamma) = alpha + m/2  (mod m).
// Throws RegimeError unless both n and m are even.
bool embeddable(const ExtensionParams& par);

// Invariant factors of H^2(D_2n, Z/m) with trivial action:
// {} if m is odd, {2} if n is odd and m even, {2,2,2} if both even.
std::vector<int> dihedral_h2(int n, int m);

int select_prime(const ExtensionParams& par, int search_bound);
// p prime, p = 1 (mod lcm(2n,2m)), p coprime to 2nm.
bool valid_prime(const ExtensionParams& par, int p);

struct GElement {
  int x = 0;
  int y = 0;
  int z = 0;
  auto operator<=>(const GElement&) const = default;
};

class Group {
 public:
  // Validates ranges and presentation consistency (ParamError otherwise).
  explicit Group(ExtensionParams par);

  const ExtensionParams& params() const { return par_; }
  int order() const { return 2 * par_.n * par_.m; }

  GElement identity() const { return {0, 0, 0}; }
  GElement genX() const { return {1, 0, 0}; }
  GElement genY() const { return {0, 1, 0}; }
  GElement genZ() const { return {0, 0, 1}; }

  GElement mul(const GElement& a, const GElement& b) const;
  GElement inv(const GElement& a) const;
  GElement conj(const GElement& a, const GElement& b) const;  // a b a^{-1}
  GElement pow(const GElement& a, long long e) const;
  int element_order(const GElement& a) const;

  // All 2nm normal forms, ordered by (x, y, z).
  std::vector<GElement> elements() const;

 private:
  ExtensionParams par_;
};

// Canonical subgroup value: the sorted list of member normal forms.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup generated(const Group& G, std::span<const GElement> gens);
  // Sorts and, when verify is set, checks closure under the group operation.
  static Subgroup from_elements(const Group& G, std::vector<GElement> elems,
                                bool verify = true);

  std::size_t size() const { return elems_.size(); }
  bool contains(const GElement& g) const;
  const std::vector<GElement>& elements() const { return elems_; }
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup&) const = default;

 private:
  std::vector<GElement> elems_;
};

Subgroup center(const Group& G);

// Derived subgroup, computed two ways: closure of all commutators [g,h], and
// the closed form < X^2 Z^{-alpha-gamma} >.  Throws ConsistencyError if the
// two disagree.
Subgroup commutator_subgroup(const Group& G);

struct Rep2;  // reps.hpp

// Element (v, g) of Gamma = (F_p)^2 x| G, where g acts on the normal subgroup
// through the representation phi: (v1,g1)(v2,g2) = (v1 + phi(g1) v2, g1 g2).
struct GammaElement {
  std::array<int, 2> v{0, 0};
  GElement g{};
  auto operator<=>(const GammaElement&) const = default;
};

GammaElement gamma_mul(const Group& G, const PrimeField& F, const Rep2& phi,
                       const GammaElement& a, const GammaElement& b);
GammaElement gamma_inv(const Group& G, const PrimeField& F, const Rep2& phi,
                       const GammaElement& a);
// a b a^{-1}
GammaElement gamma_conj(const Group& G, const PrimeField& F, const Rep2& phi,
                        const GammaElement& a, const GammaElement& b);
long long gamma_order(const Group& G, const PrimeField& F, const Rep2& phi,
                      const GammaElement& a);

}  // namespace udrf
