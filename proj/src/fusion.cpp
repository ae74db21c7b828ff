#include "udrf/fusion.hpp"

#include <algorithm>
#include <numeric>

namespace udrf {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

FusionPartition canonicalize(int p, std::vector<std::vector<int>> blocks) {
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return std::pair(a.size(), a[0]) < std::pair(b.size(), b[0]);
            });
  FusionPartition out;
  out.p = p;
  out.blocks = std::move(blocks);
  return out;
}

FusionPartition from_union_find(int p, UnionFind& uf) {
  std::vector<std::vector<int>> by_root(p * p);
  for (int v = 0; v < p * p; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (auto& block : by_root)
    if (!block.empty()) blocks.push_back(std::move(block));
  return canonicalize(p, std::move(blocks));
}

int apply_code(const PrimeField& F, const Matrix2& A, int code) {
  const int p = F.p();
  const int v1 = code / p, v2 = code % p;
  const int w1 = F.reduce(static_cast<long long>(A.e[0]) * v1 +
                          static_cast<long long>(A.e[1]) * v2);
  const int w2 = F.reduce(static_cast<long long>(A.e[2]) * v1 +
                          static_cast<long long>(A.e[3]) * v2);
  return w1 * p + w2;
}

}  // namespace

FusionPartition fusion_bruteforce(const PrimeField& F, const Rep2& phi) {
  const int p = F.p();
  UnionFind uf(p * p);
  for (const Matrix2* A : {&phi.x, &phi.y, &phi.z})
    for (int code = 0; code < p * p; ++code)
      uf.unite(code, apply_code(F, *A, code));
  return from_union_find(p, uf);
}

FusionPartition fusion_closed_form(int n, const PrimeField& F, int ell) {
  if (n < 3) throw ParamError("fusion_closed_form: need n >= 3");
  if ((F.p() - 1) % n != 0)
    throw ParamError("fusion_closed_form: n does not divide p-1");
  if (ell < 1 || ell > n - 1)
    throw ParamError("fusion_closed_form: ell outside [1, n-1]");
  if ((2 * ell) % n == 0)
    throw RegimeError("fusion_closed_form: theta_ell reducible");

  const int p = F.p();
  const int k = n / std::gcd(n, ell);
  const int rot = F.pow(F.unity_root(n), ell);  // order k
  const int sub_index = (p - 1) / k;  // <omega^ell> = { w^{sub_index * j} }

  std::vector<char> visited(p * p, 0);
  std::vector<std::vector<int>> blocks;
  const auto orbit_of = [&](int x, int y) {
    std::vector<int> out;
    int cx = x, cy = y;
    for (int j = 0; j < k; ++j) {
      out.push_back(cx * p + cy);
      cx = F.mul(cx, rot);
      cy = F.mul(cy, F.inv(rot));
    }
    return out;
  };

  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      if (visited[x * p + y]) continue;
      std::vector<int> block;
      if (x == 0 && y == 0) {
        block = {0};
      } else if (x != 0 && y != 0 &&
                 F.dlog(F.mul(y, F.inv(x))) % sub_index == 0) {
        block = orbit_of(x, y);
      } else {
        block = orbit_of(x, y);
        const auto swapped = orbit_of(y, x);
        block.insert(block.end(), swapped.begin(), swapped.end());
      }
      for (int code : block) {
        if (visited[code])
          throw ConsistencyError("fusion_closed_form: overlapping orbits");
        visited[code] = 1;
      }
      blocks.push_back(std::move(block));
    }
  return canonicalize(p, std::move(blocks));
}

FusionPartition fusion_by_gamma_conjugation(const Group& G,
                                            const PrimeField& F,
                                            const Rep2& phi) {
  const int p = F.p();
  const long long conjugations =
      static_cast<long long>(G.order()) * p * p * p * p;
  if (conjugations > 10'000'000)
    throw ParamError("fusion_by_gamma_conjugation: Gamma too large");

  UnionFind uf(p * p);
  const auto elems = G.elements();
  for (int v1 = 0; v1 < p; ++v1)
    for (int v2 = 0; v2 < p; ++v2)
      for (const GElement& g : elems) {
        const GammaElement a{{v1, v2}, g};
        for (int u1 = 0; u1 < p; ++u1)
          for (int u2 = 0; u2 < p; ++u2) {
            const GammaElement x{{u1, u2}, G.identity()};
            const GammaElement c = gamma_conj(G, F, phi, a, x);
            if (!(c.g == G.identity()))
              throw ConsistencyError(
                  "fusion_by_gamma_conjugation: conjugate left N");
            uf.unite(u1 * p + u2, c.v[0] * p + c.v[1]);
          }
      }
  return from_union_find(p, uf);
}

int recover_gcd_from_kernel_set(const Group& G, const KernelSet& K) {
  if (K.empty())
    throw RegimeError(
        "recover_gcd_from_kernel_set: empty kernel set, gcd not determined");
  const int n = G.params().n;
  const GElement z = G.genZ();
  const auto min_x_exponent = [&](const Subgroup& H) {
    int e = n;
    for (const GElement& g : H.elements())
      if (g.x > 0) e = std::min(e, g.x);
    return e;
  };

  std::vector<int> dihedral_exps;
  for (const Subgroup& H : K)
    if (H.contains(z)) dihedral_exps.push_back(min_x_exponent(H));

  if (dihedral_exps.empty()) {
    int e = n;
    for (const Subgroup& H : K) e = std::min(e, min_x_exponent(H));
    if (n % e != 0)
      throw ConsistencyError("recover_gcd_from_kernel_set: e does not divide n");
    return n / e;
  }
  const int emax = *std::max_element(dihedral_exps.begin(),
                                     dihedral_exps.end());
  if ((2 * n) % emax != 0 || n % (2 * n / emax) != 0)
    throw ConsistencyError(
        "recover_gcd_from_kernel_set: dihedral reading does not divide n");
  return 2 * n / emax;
}

}  // namespace udrf
