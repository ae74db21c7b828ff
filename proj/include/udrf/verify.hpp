#pragma once

// Theorem-level verifiers.  Each runs the full statement on one parameter set
// and returns a report; refuted reports carry a concrete witness.

#include <string>
#include <vector>

#include "udrf/cohomology.hpp"
#include "udrf/ffield.hpp"
#include "udrf/fusion.hpp"
#include "udrf/groups.hpp"
#include "udrf/reps.hpp"

namespace udrf {

enum class Verdict { Verified, Refuted, UnsupportedRegime };

std::string verdict_string(Verdict v);

struct VerificationReport {
  std::string task;
  ExtensionParams params;
  int p = 0;
  Verdict verdict = Verdict::Verified;
  std::string witness;  // empty when verified
  double seconds = 0.0;
};

// For every degree-two irreducible phi of G: some V in Sigma has a
// deformation ring other than Z_p over Gamma_phi  iff  phi is trivial on the
// center of G.
VerificationReport verify_theorem1(const Group& G, const PrimeField& F);

// For phi = theta_ell: kernel sets coincide iff fusions coincide iff
// gcd(n, ell) coincide; and the gcd is recoverable from the kernel set.
VerificationReport verify_theorem2(const Group& G, const PrimeField& F);

struct ExampleCell {
  int ell = 0;
  int k = 0;
  int A = 0;
  int B = 0;
  std::string rendered;  // e.g. "18σ + τ"
};

// The bundled worked example: (n, m) = (20, 24), (alpha, beta, gamma) =
// (18, 0, 9), p = 241.  Thirteen twist rows for each ell in {1, 3, 7, 9}
// (row 12 repeats row 0), the step rule, and the ell = 5 comparison: its
// equation list matches ell = 1 but its kernel set does not.
struct ExampleTable {
  ExtensionParams params;
  int p = 0;
  std::vector<int> ells;       // {1, 3, 7, 9}
  int rows = 0;                // 13
  std::vector<ExampleCell> cells;  // row-major
  std::string step_rule;       // "12σ - 2τ"
  int period = 0;              // true period of the coefficient orbit
  std::vector<ExampleCell> ell5_cells;
  bool ell5_same_equations = false;
  bool ell5_same_kernels = false;
  Verdict verdict = Verdict::Verified;
  std::string witness;
  double seconds = 0.0;
};

ExampleTable reproduce_example();

std::string render_equation(int A, int B);

struct SweepOutcome {
  ExtensionParams params;
  int p = 0;
  bool embeddable = false;
  Verdict verdict = Verdict::Verified;
  std::string detail;
};

// All (alpha, gamma) in [0,m)^2 and beta in {0,1} for fixed even n, m:
// checks the embeddability formula against the constructive base search, and
// for embeddable sets the counting identities (2m characters, m(n-1)/2
// degree-two classes, sum of squares 2nm) and the structural identities
// (center = <Z>, commutator subgroup closed form).
std::vector<SweepOutcome> sweep_family(int n, int m, int max_prime);

}  // namespace udrf
