#include "udrf/reps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "udrf/cohomology.hpp"
#include "linalg.hpp"

namespace udrf {

namespace {

int mod_i(long long v, int m) {
  int r = static_cast<int>(v % m);
  return r < 0 ? r + m : r;
}

// The two solutions of c^2 = rhs in F_p^*, or empty when rhs is a non-square.
std::vector<int> square_roots(const PrimeField& F, int rhs) {
  if (rhs == 0) throw ParamError("square_roots: zero argument");
  const int d = F.dlog(rhs);
  if (d % 2 != 0) return {};
  const int h = d / 2;
  return {F.exp(h), F.exp(h + (F.p() - 1) / 2)};
}

std::vector<Character> sort_characters(const PrimeField& F,
                                       std::vector<Character> chars) {
  std::sort(chars.begin(), chars.end(),
            [&](const Character& a, const Character& b) {
              const auto ka =
                  std::array{F.dlog(a.cZ), F.dlog(a.cX), F.dlog(a.cY)};
              const auto kb =
                  std::array{F.dlog(b.cZ), F.dlog(b.cX), F.dlog(b.cY)};
              return ka < kb;
            });
  return chars;
}

}  // namespace

Rep2 theta_ell(int n, const PrimeField& F, int ell) {
  if (n < 3) throw ParamError("theta_ell: need n >= 3");
  if ((F.p() - 1) % n != 0) throw ParamError("theta_ell: n does not divide p-1");
  if (ell < 1 || ell > n - 1) throw ParamError("theta_ell: ell outside [1, n-1]");
  if ((2 * ell) % n == 0)
    throw RegimeError("theta_ell: omega^{2 ell} = 1, representation reducible");
  const int step = (F.p() - 1) / n;
  Rep2 rep;
  rep.x = mat_diag(F.exp(static_cast<long long>(step) * ell),
                   F.exp(-static_cast<long long>(step) * ell));
  rep.y = mat_antidiag(1, 1);
  rep.z = mat_identity();
  rep.source = RepSource::Dihedral;
  return rep;
}

Rep2 inflate(const Rep2& theta) {
  if (theta.source != RepSource::Dihedral)
    throw ParamError("inflate: source is not a dihedral representation");
  Rep2 rep = theta;
  rep.z = mat_identity();
  rep.source = RepSource::G;
  return rep;
}

Matrix2 rep_eval(const PrimeField& F, const Rep2& rep, const GElement& g) {
  Matrix2 out = mat_pow(F, rep.x, g.x);
  if (g.y) out = mat_mul(F, out, rep.y);
  return mat_mul(F, out, mat_pow(F, rep.z, g.z));
}

bool satisfies_relations(const Group& G, const PrimeField& F, const Rep2& rep) {
  const ExtensionParams& par = G.params();
  const Matrix2& x = rep.x;
  const Matrix2& y = rep.y;
  const Matrix2& z = rep.z;
  if (!(mat_pow(F, x, par.n) == mat_pow(F, z, par.alpha))) return false;
  if (!(mat_mul(F, y, y) == mat_pow(F, z, par.beta))) return false;
  const Matrix2 lhs = mat_mul(F, y, x);
  const Matrix2 rhs = mat_mul(F, mat_pow(F, x, par.n - 1),
                              mat_mul(F, y, mat_pow(F, z, par.gamma)));
  if (!(lhs == rhs)) return false;
  if (!(mat_mul(F, x, z) == mat_mul(F, z, x))) return false;
  if (!(mat_mul(F, y, z) == mat_mul(F, z, y))) return false;
  return mat_pow(F, z, par.m) == mat_identity();
}

bool is_absolutely_irreducible(const PrimeField& F, const Rep2& rep) {
  // Commutant of {x, y, z}: solve TA = AT, four unknowns T = (t00 t01 t10 t11).
  std::vector<std::vector<int>> M;
  for (const Matrix2* A : {&rep.x, &rep.y, &rep.z}) {
    const auto& a = A->e;
    // Rows of TA - AT as linear forms in T.
    M.push_back({0, a[2], F.neg(a[1]), 0});
    M.push_back({a[1], F.sub(a[3], a[0]), 0, F.neg(a[1])});
    M.push_back({F.neg(a[2]), 0, F.sub(a[0], a[3]), a[2]});
    M.push_back({0, F.neg(a[2]), a[1], 0});
  }
  return detail::nullspace(F, std::move(M), 4).size() == 1;
}

int char_eval(const PrimeField& F, const Character& c, const GElement& g) {
  return F.mul(F.mul(F.pow(c.cX, g.x), F.pow(c.cY, g.y)), F.pow(c.cZ, g.z));
}

Subgroup char_kernel(const Group& G, const PrimeField& F, const Character& c) {
  std::vector<GElement> elems;
  for (const GElement& g : G.elements())
    if (char_eval(F, c, g) == 1) elems.push_back(g);
  return Subgroup::from_elements(G, std::move(elems), false);
}

int character_case(const ExtensionParams& par) {
  validate_params(par);
  if (par.m % 2 != 0)
    throw RegimeError("character_case: requires even m");
  const int b = par.beta % 2;
  const int ag = (par.alpha + par.gamma) % 2;
  return b == 0 ? (ag == 0 ? 1 : 2) : (ag == 0 ? 3 : 4);
}

std::vector<Character> enumerate_characters(const Group& G,
                                            const PrimeField& F) {
  const ExtensionParams& par = G.params();
  if (!embeddable(par))
    throw RegimeError("enumerate_characters: parameters not embeddable");
  const int n = par.n, m = par.m;
  const int t = (F.p() - 1) / m;

  std::vector<Character> brute;
  for (int j = 0; j < m; ++j) {
    const int cZ = F.exp(static_cast<long long>(t) * j);
    for (int cX : square_roots(F, F.pow(cZ, par.alpha + par.gamma))) {
      if (F.pow(cX, n) != F.pow(cZ, par.alpha)) continue;
      for (int cY : square_roots(F, F.pow(cZ, par.beta)))
        brute.push_back({cX, cY, cZ});
    }
  }
  if (static_cast<int>(brute.size()) != 2 * m)
    throw ConsistencyError("enumerate_characters: count is not 2m");
  brute = sort_characters(F, std::move(brute));

  // Closed form: cZ ranges over the (m/2)-th roots of unity I^{2c}, and then
  // cX = +-I^{c(alpha+gamma)}, cY = +-I^{c beta'} shifted by cZ^{(beta-beta')/2}
  // for the non-normalized part of beta.  character_case picks the printed
  // shape; all four cases specialize from this one list.
  (void)character_case(par);
  const int half = (F.p() - 1) / 2;
  const int bp = par.beta % 2;
  std::vector<Character> closed;
  for (int c = 0; c < m / 2; ++c)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        Character ch;
        ch.cZ = F.exp(2LL * t * c);
        ch.cX = F.exp(static_cast<long long>(t) * c * (par.alpha + par.gamma) +
                      static_cast<long long>(s1) * half);
        const int cy0 = F.exp(static_cast<long long>(t) * c * bp +
                              static_cast<long long>(s2) * half);
        ch.cY = F.mul(cy0, F.pow(ch.cZ, (par.beta - bp) / 2));
        closed.push_back(ch);
      }
  closed = sort_characters(F, std::move(closed));
  if (closed != brute)
    throw ConsistencyError(
        "enumerate_characters: closed form disagrees with enumeration");
  return brute;
}

std::vector<Rep2> enumerate_irreps2(const Group& G, const PrimeField& F) {
  const ExtensionParams& par = G.params();
  if (!embeddable(par))
    throw RegimeError("enumerate_irreps2: parameters not embeddable");
  const int n = par.n, m = par.m;
  const int pm1 = F.p() - 1;
  const int t = pm1 / m;

  std::map<RepClassKey, Rep2> classes;
  int fixed_points = 0;
  for (int j = 0; j < m; ++j) {
    const int zeta = F.exp(static_cast<long long>(t) * j);
    // x1^n = zeta^alpha by discrete log: n e = t j alpha (mod p-1).
    const long long d = mod_i(static_cast<long long>(t) * j * par.alpha, pm1);
    if (d % n != 0)
      throw ConsistencyError("enumerate_irreps2: x1^n = zeta^alpha unsolvable");
    for (int k = 0; k < n; ++k) {
      const long long e = d / n + static_cast<long long>(k) * (pm1 / n);
      const int x1 = F.exp(e);
      const int x2 =
          F.mul(F.inv(x1), F.pow(zeta, par.alpha + par.gamma));
      if (x1 == x2) {
        ++fixed_points;
        continue;
      }
      const long long s = mod_i(static_cast<long long>(t) * j * par.beta, pm1);
      if (s % 2 != 0)
        throw ConsistencyError("enumerate_irreps2: zeta^beta is a non-square");
      const int u = F.exp(s / 2);
      Rep2 rep;
      rep.x = mat_diag(x1, x2);
      rep.y = mat_antidiag(u, F.mul(F.pow(zeta, par.beta), F.inv(u)));
      rep.z = mat_scalar(zeta);
      classes.emplace(class_key(F, rep), rep);
    }
  }
  if (fixed_points != m)
    throw ConsistencyError("enumerate_irreps2: fixed-point count is not m");
  if (static_cast<int>(classes.size()) != m * (n - 1) / 2)
    throw ConsistencyError("enumerate_irreps2: class count is not m(n-1)/2");

  std::vector<Rep2> out;
  out.reserve(classes.size());
  for (auto& [key, rep] : classes) {
    if (!satisfies_relations(G, F, rep))
      throw ConsistencyError("enumerate_irreps2: relations fail");
    if (!is_absolutely_irreducible(F, rep))
      throw ConsistencyError("enumerate_irreps2: reducible class");
    out.push_back(rep);
  }
  return out;
}

RepClassKey class_key(const PrimeField& F, const Rep2& rep) {
  if (!mat_is_scalar(rep.z) || !mat_is_diag(rep.x) || !mat_is_antidiag(rep.y))
    throw ParamError("class_key: representation not in normal position");
  RepClassKey key;
  key.zeta_log = F.dlog(rep.z.e[0]);
  key.x1_log = F.dlog(rep.x.e[0]);
  key.x2_log = F.dlog(rep.x.e[3]);
  if (key.x1_log > key.x2_log) std::swap(key.x1_log, key.x2_log);
  return key;
}

std::optional<int> class_index(const PrimeField& F,
                               const std::vector<Rep2>& irreps,
                               const Rep2& rep) {
  const RepClassKey key = class_key(F, rep);
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (class_key(F, irreps[i]) == key) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<EmbeddingBase> find_embedding_base(const ExtensionParams& par,
                                                 const PrimeField& F) {
  const bool criterion = embeddable(par);  // RegimeError unless n, m even
  if (!valid_prime(par, F.p()))
    throw ParamError("find_embedding_base: prime incompatible with n, m");
  const int pm1 = F.p() - 1;
  const int t = pm1 / par.m;
  const int i = pm1 / par.n;

  // 2a = t(alpha+gamma) - i (mod p-1); both sides are even.
  const int c = mod_i(static_cast<long long>(t) * (par.alpha + par.gamma) - i,
                      pm1);
  std::optional<EmbeddingBase> found;
  for (const int a : {c / 2, c / 2 + pm1 / 2}) {
    if (mod_i(static_cast<long long>(a) * par.n -
                  static_cast<long long>(t) * par.alpha,
              pm1) != 0)
      continue;
    EmbeddingBase base;
    base.a = a % pm1;
    base.i = i;
    base.t = t;
    base.r = mod_i(static_cast<long long>(t) * par.beta, pm1) / 2;
    found = base;
    break;
  }
  if (found.has_value() != criterion)
    throw ConsistencyError(
        "find_embedding_base: witness search disagrees with the criterion");
  return found;
}

Rep2 rho_ell(const Group& G, const PrimeField& F, const EmbeddingBase& base,
             int ell) {
  const ExtensionParams& par = G.params();
  const int pm1 = F.p() - 1;
  const bool base_ok =
      F.order(F.exp(base.t)) == par.m && F.order(F.exp(base.i)) == par.n &&
      mod_i(static_cast<long long>(base.a) * par.n -
                static_cast<long long>(base.t) * par.alpha,
            pm1) == 0 &&
      mod_i(2LL * base.a + base.i -
                static_cast<long long>(base.t) * (par.alpha + par.gamma),
            pm1) == 0 &&
      mod_i(2LL * base.r - static_cast<long long>(base.t) * par.beta, pm1) == 0;
  if (!base_ok) throw ParamError("rho_ell: invalid embedding base");
  if (mod_i(static_cast<long long>(base.i) * ell, pm1) == 0)
    throw ParamError("rho_ell: i*ell = 0 (mod p-1), representation reducible");

  Rep2 rep;
  rep.x = mat_diag(F.exp(static_cast<long long>(base.a) * ell),
                   F.exp(static_cast<long long>(base.a + base.i) * ell));
  const int yoff = F.exp(static_cast<long long>(base.r) * ell);
  rep.y = mat_antidiag(yoff, yoff);
  rep.z = mat_scalar(F.exp(static_cast<long long>(base.t) * ell));
  if (!satisfies_relations(G, F, rep))
    throw ConsistencyError("rho_ell: relations fail");
  return rep;
}

Rep2 twist(const PrimeField& F, const Character& chi, const Rep2& rep) {
  Rep2 out = rep;
  out.x = mat_scale(F, chi.cX, rep.x);
  out.y = mat_scale(F, chi.cY, rep.y);
  out.z = mat_scale(F, chi.cZ, rep.z);
  out.source = RepSource::G;
  return out;
}

Subgroup kernel_direct(const Group& G, const PrimeField& F, const Rep2& rep) {
  std::vector<GElement> elems;
  for (const GElement& g : G.elements())
    if (rep_eval(F, rep, g) == mat_identity()) elems.push_back(g);
  return Subgroup::from_elements(G, std::move(elems), false);
}

std::vector<RestrictedChar> restricted_characters(const Group& G,
                                                  const PrimeField& F) {
  const ExtensionParams& par = G.params();
  const int m = par.m;
  const int t = (F.p() - 1) / m;
  std::set<RestrictedChar> seen;
  for (const Character& c : enumerate_characters(G, F)) {
    const int dx = F.dlog(c.cX);
    const int dz = F.dlog(c.cZ);
    if (dx % t != 0 || dz % t != 0)
      throw ConsistencyError("restricted_characters: value outside mu_m");
    seen.insert({dx / t, dz / t});
  }
  if (static_cast<int>(seen.size()) != m)
    throw ConsistencyError("restricted_characters: count is not m");

  if ((par.alpha + par.gamma) % 2 != 0) {
    // Cyclic: powers of (X, Z) |-> (w^{t(-alpha-gamma)}, w^{-2t}).
    const RestrictedChar gen{mod_i(-par.alpha - par.gamma, m), mod_i(-2, m)};
    std::vector<RestrictedChar> ordered;
    std::set<RestrictedChar> check;
    for (int k = 0; k < m; ++k) {
      const RestrictedChar rc{mod_i(static_cast<long long>(gen.eX) * k, m),
                              mod_i(static_cast<long long>(gen.eZ) * k, m)};
      ordered.push_back(rc);
      check.insert(rc);
    }
    if (check != seen)
      throw ConsistencyError(
          "restricted_characters: generator orbit misses restrictions");
    return ordered;
  }
  return {seen.begin(), seen.end()};
}

Character lift_restricted(const Group& G, const PrimeField& F,
                          const RestrictedChar& rc) {
  const int t = (F.p() - 1) / G.params().m;
  const int vx = F.exp(static_cast<long long>(t) * rc.eX);
  const int vz = F.exp(static_cast<long long>(t) * rc.eZ);
  for (const Character& c : enumerate_characters(G, F))
    if (c.cX == vx && c.cZ == vz) return c;
  throw ParamError("lift_restricted: not the restriction of a character");
}

std::pair<DiophantineEq, Subgroup> kernel_diophantine(const Group& G,
                                                      const PrimeField& F,
                                                      int ell, int k) {
  const ExtensionParams& par = G.params();
  const int n = par.n, m = par.m;
  if (ell < 1) throw ParamError("kernel_diophantine: ell must be positive");
  if (ell % n == 0)
    throw ParamError("kernel_diophantine: rho_ell reducible for n | ell");
  const std::vector<RestrictedChar> rcs = restricted_characters(G, F);
  if (k < 0 || k >= static_cast<int>(rcs.size()))
    throw ParamError("kernel_diophantine: twist index outside [0, m)");
  const RestrictedChar& rc = rcs[k];

  const int g = std::gcd(n, ell);
  DiophantineEq eq;
  eq.A = mod_i(static_cast<long long>(par.alpha) * (ell / g) +
                   static_cast<long long>(rc.eX) * (n / g),
               m);
  eq.B = mod_i(static_cast<long long>(ell) + rc.eZ, m);
  eq.sigma_count = g;
  eq.tau_count = m;

  std::vector<GElement> elems;
  for (int sigma = 0; sigma < g; ++sigma)
    for (int tau = 0; tau < m; ++tau)
      if (mod_i(static_cast<long long>(eq.A) * sigma +
                    static_cast<long long>(eq.B) * tau,
                m) == 0)
        elems.push_back({(n / g) * sigma, 0, tau});
  return {eq, Subgroup::from_elements(G, std::move(elems), true)};
}

std::vector<int> udr_nontrivial_set(const Group& G, const PrimeField& F,
                                    const std::vector<Rep2>& irreps,
                                    const Rep2& phi) {
  std::vector<int> out;
  for (std::size_t i = 0; i < irreps.size(); ++i)
    if (d1_multiplicity(F, phi, irreps[i]) >= 1)
      out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> character_orbit_of_rho(const Group& G, const PrimeField& F,
                                        const std::vector<Rep2>& irreps,
                                        int ell) {
  const auto base = find_embedding_base(G.params(), F);
  if (!base)
    throw RegimeError("character_orbit_of_rho: parameters not embeddable");
  const Rep2 rho = rho_ell(G, F, *base, ell);
  std::set<int> out;
  for (const Character& chi : enumerate_characters(G, F)) {
    const auto idx = class_index(F, irreps, twist(F, chi, rho));
    if (!idx)
      throw ConsistencyError("character_orbit_of_rho: twist class missing");
    out.insert(*idx);
  }
  return {out.begin(), out.end()};
}

KernelSet kernel_set(const Group& G, const PrimeField& F,
                     const std::vector<Rep2>& irreps, const Rep2& phi) {
  KernelSet out;
  for (int idx : udr_nontrivial_set(G, F, irreps, phi))
    out.push_back(kernel_direct(G, F, irreps[idx]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string subgroup_to_string(const Subgroup& H) {
  std::ostringstream os;
  bool first = true;
  for (const GElement& g : H.elements()) {
    if (!first) os << ';';
    first = false;
    os << g.x << ',' << g.y << ',' << g.z;
  }
  return os.str();
}

}  // namespace udrf
