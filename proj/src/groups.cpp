#include "udrf/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "udrf/reps.hpp"

namespace udrf {

namespace {

int mod_i(long long v, int m) {
  int r = static_cast<int>(v % m);
  return r < 0 ? r + m : r;
}

}  // namespace

void validate_params(const ExtensionParams& par) {
  if (par.n < 1 || par.m < 1)
    throw ParamError("params: n and m must be positive");
  if (par.alpha < 0 || par.alpha >= par.m || par.gamma < 0 ||
      par.gamma >= par.m || par.beta < 0 || par.beta >= par.m)
    throw ParamError("params: alpha, beta, gamma must lie in [0, m)");
}

bool presentation_consistent(const ExtensionParams& par) {
  validate_params(par);
  // Y X^n Y^{-1} computed through the conjugation rule must equal Z^alpha.
  return mod_i(static_cast<long long>(par.n) * (par.alpha + par.gamma) -
                   2LL * par.alpha,
               par.m) == 0;
}

ExtensionParams normalize_beta(ExtensionParams par) {
  validate_params(par);
  par.beta = (par.m % 2 == 1) ? 0 : par.beta % 2;
  return par;
}

bool embeddable(const ExtensionParams& par) {
  validate_params(par);
  if (par.n % 2 != 0 || par.m % 2 != 0)
    throw RegimeError("embeddable: requires even n and m");
  const int lhs = mod_i(static_cast<long long>(par.n / 2) *
                            (par.alpha + par.gamma),
                        par.m);
  const int rhs = mod_i(par.alpha + par.m / 2, par.m);
  return lhs == rhs;
}

std::vector<int> dihedral_h2(int n, int m) {
  if (n < 3 || m < 1) throw ParamError("dihedral_h2: need n >= 3, m >= 1");
  if (m % 2 == 1) return {};
  if (n % 2 == 1) return {2};
  return {2, 2, 2};
}

int select_prime(const ExtensionParams& par, int search_bound) {
  validate_params(par);
  return select_prime(par.n, par.m, search_bound);
}

bool valid_prime(const ExtensionParams& par, int p) {
  validate_params(par);
  if (!is_prime(p)) return false;
  const long long L = std::lcm(2LL * par.n, 2LL * par.m);
  return (p - 1) % L == 0 && (2LL * par.n * par.m) % p != 0;
}

Group::Group(ExtensionParams par) : par_(par) {
  validate_params(par_);
  if (!presentation_consistent(par_))
    throw ParamError(
        "Group: presentation inconsistent, n(alpha+gamma) != 2 alpha mod m");
}

GElement Group::mul(const GElement& a, const GElement& b) const {
  const int n = par_.n, m = par_.m;
  long long e;
  long long z = static_cast<long long>(a.z) + b.z;
  if (a.y == 0) {
    e = static_cast<long long>(a.x) + b.x;
  } else {
    // Y X^k = X^{-k} Y Z^{k(alpha+gamma)}
    e = static_cast<long long>(a.x) - b.x;
    z += static_cast<long long>(b.x) * (par_.alpha + par_.gamma);
  }
  if (a.y == 1 && b.y == 1) z += par_.beta;
  const int x = mod_i(e, n);
  z += (e - x) / n * par_.alpha;  // X^n = Z^alpha
  return {x, a.y ^ b.y, mod_i(z, m)};
}

GElement Group::inv(const GElement& a) const {
  const int n = par_.n, m = par_.m;
  if (a.y == 0) {
    if (a.x == 0) return {0, 0, mod_i(-static_cast<long long>(a.z), m)};
    return {n - a.x, 0, mod_i(-static_cast<long long>(a.z) - par_.alpha, m)};
  }
  // (X^x Y Z^z)^{-1} = X^x Y Z^{-z - x(alpha+gamma) - beta}
  return {a.x, 1,
          mod_i(-static_cast<long long>(a.z) -
                    static_cast<long long>(a.x) * (par_.alpha + par_.gamma) -
                    par_.beta,
                m)};
}

GElement Group::conj(const GElement& a, const GElement& b) const {
  return mul(mul(a, b), inv(a));
}

GElement Group::pow(const GElement& a, long long e) const {
  GElement base = e < 0 ? inv(a) : a;
  if (e < 0) e = -e;
  GElement acc = identity();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int Group::element_order(const GElement& a) const {
  GElement g = a;
  int k = 1;
  while (!(g == identity())) {
    g = mul(g, a);
    ++k;
    if (k > order()) throw ConsistencyError("element_order: exceeded |G|");
  }
  return k;
}

std::vector<GElement> Group::elements() const {
  std::vector<GElement> out;
  out.reserve(order());
  for (int x = 0; x < par_.n; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < par_.m; ++z) out.push_back({x, y, z});
  return out;
}

Subgroup Subgroup::generated(const Group& G, std::span<const GElement> gens) {
  std::set<GElement> seen{G.identity()};
  std::vector<GElement> work{G.identity()};
  while (!work.empty()) {
    GElement g = work.back();
    work.pop_back();
    for (const GElement& h : gens) {
      GElement gh = G.mul(g, h);
      if (seen.insert(gh).second) work.push_back(gh);
    }
  }
  Subgroup H;
  H.elems_.assign(seen.begin(), seen.end());
  return H;
}

Subgroup Subgroup::from_elements(const Group& G, std::vector<GElement> elems,
                                 bool verify) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup H;
  H.elems_ = std::move(elems);
  if (verify) {
    if (!H.contains(G.identity()))
      throw ParamError("Subgroup: missing identity");
    for (const GElement& a : H.elems_)
      for (const GElement& b : H.elems_)
        if (!H.contains(G.mul(a, b)))
          throw ParamError("Subgroup: element set not closed");
  }
  return H;
}

bool Subgroup::contains(const GElement& g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

Subgroup center(const Group& G) {
  const std::array<GElement, 3> gens{G.genX(), G.genY(), G.genZ()};
  std::vector<GElement> out;
  for (const GElement& g : G.elements()) {
    bool central = true;
    for (const GElement& h : gens)
      if (!(G.mul(g, h) == G.mul(h, g))) {
        central = false;
        break;
      }
    if (central) out.push_back(g);
  }
  return Subgroup::from_elements(G, std::move(out), false);
}

Subgroup commutator_subgroup(const Group& G) {
  std::set<GElement> comms;
  const auto elems = G.elements();
  for (const GElement& g : elems)
    for (const GElement& h : elems)
      comms.insert(G.mul(G.mul(g, h), G.mul(G.inv(g), G.inv(h))));
  std::vector<GElement> gens(comms.begin(), comms.end());
  Subgroup brute = Subgroup::generated(G, gens);

  const int m = G.params().m;
  const GElement closed_gen{2 % G.params().n, 0,
                            mod_i(-static_cast<long long>(G.params().alpha) -
                                      G.params().gamma,
                                  m)};
  Subgroup closed = Subgroup::generated(G, std::array{closed_gen});
  if (!(brute == closed))
    throw ConsistencyError(
        "commutator_subgroup: closed form disagrees with brute force");
  return brute;
}

GammaElement gamma_mul(const Group& G, const PrimeField& F, const Rep2& phi,
                       const GammaElement& a, const GammaElement& b) {
  const Matrix2 A = rep_eval(F, phi, a.g);
  GammaElement r;
  r.v[0] = F.reduce(a.v[0] + static_cast<long long>(A.e[0]) * b.v[0] +
                    static_cast<long long>(A.e[1]) * b.v[1]);
  r.v[1] = F.reduce(a.v[1] + static_cast<long long>(A.e[2]) * b.v[0] +
                    static_cast<long long>(A.e[3]) * b.v[1]);
  r.g = G.mul(a.g, b.g);
  return r;
}

GammaElement gamma_inv(const Group& G, const PrimeField& F, const Rep2& phi,
                       const GammaElement& a) {
  const GElement gi = G.inv(a.g);
  const Matrix2 Ai = rep_eval(F, phi, gi);
  GammaElement r;
  r.v[0] = F.reduce(-(static_cast<long long>(Ai.e[0]) * a.v[0] +
                      static_cast<long long>(Ai.e[1]) * a.v[1]));
  r.v[1] = F.reduce(-(static_cast<long long>(Ai.e[2]) * a.v[0] +
                      static_cast<long long>(Ai.e[3]) * a.v[1]));
  r.g = gi;
  return r;
}

GammaElement gamma_conj(const Group& G, const PrimeField& F, const Rep2& phi,
                        const GammaElement& a, const GammaElement& b) {
  return gamma_mul(G, F, phi, gamma_mul(G, F, phi, a, b),
                   gamma_inv(G, F, phi, a));
}

long long gamma_order(const Group& G, const PrimeField& F, const Rep2& phi,
                      const GammaElement& a) {
  const GammaElement id{};
  GammaElement g = a;
  long long k = 1;
  const long long bound = static_cast<long long>(G.order()) * F.p() * F.p();
  while (!(g == id)) {
    g = gamma_mul(G, F, phi, g, a);
    ++k;
    if (k > bound) throw ConsistencyError("gamma_order: exceeded |Gamma|");
  }
  return k;
}

}  // namespace udrf
