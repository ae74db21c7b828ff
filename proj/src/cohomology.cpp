#include "udrf/cohomology.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "linalg.hpp"

namespace udrf {

namespace {

// Matrix of T |-> R T R^{-1} on the entry basis E00, E01, E10, E11.
std::array<std::array<int, 4>, 4> conj_matrix(const PrimeField& F,
                                              const Matrix2& R) {
  const Matrix2 Rinv = mat_inv(F, R);
  std::array<std::array<int, 4>, 4> C{};
  for (int col = 0; col < 4; ++col) {
    Matrix2 E;
    E.e = {0, 0, 0, 0};
    E.e[col] = 1;
    const Matrix2 out = mat_mul(F, R, mat_mul(F, E, Rinv));
    for (int row = 0; row < 4; ++row) C[row][col] = out.e[row];
  }
  return C;
}

int commutant_dim(const PrimeField& F, const Rep2& rep) {
  std::vector<std::vector<int>> M;
  for (const Matrix2* A : {&rep.x, &rep.y, &rep.z}) {
    const auto& a = A->e;
    M.push_back({0, a[2], F.neg(a[1]), 0});
    M.push_back({a[1], F.sub(a[3], a[0]), 0, F.neg(a[1])});
    M.push_back({F.neg(a[2]), 0, F.sub(a[0], a[3]), a[2]});
    M.push_back({0, F.neg(a[2]), a[1], 0});
  }
  return static_cast<int>(detail::nullspace(F, std::move(M), 4).size());
}

}  // namespace

int d1_multiplicity(const PrimeField& F, const Rep2& phi, const Rep2& rho) {
  // Unknowns T = (T1, T2), eight entries; T(phi(g) e_j) = rho(g) T_j rho(g)^-1.
  std::vector<std::vector<int>> M;
  for (const Matrix2* gp : {&phi.x, &phi.y, &phi.z}) {
    const Matrix2& A = *gp;
    const Matrix2& R = (gp == &phi.x) ? rho.x : (gp == &phi.y) ? rho.y : rho.z;
    const auto C = conj_matrix(F, R);
    for (int j = 0; j < 2; ++j) {
      // Column j of A: coefficients of T1 and T2 on the left side.
      const int a1 = A.e[j];
      const int a2 = A.e[2 + j];
      for (int q = 0; q < 4; ++q) {
        std::vector<int> row(8, 0);
        row[q] = F.add(row[q], a1);
        row[4 + q] = F.add(row[4 + q], a2);
        for (int r = 0; r < 4; ++r)
          row[4 * j + r] = F.sub(row[4 * j + r], C[q][r]);
        M.push_back(std::move(row));
      }
    }
  }
  return 8 - detail::rref(F, M);
}

namespace {

// f extended over a word by f(ug) = f(u) + u.f(g): a running Gamma element
// together with the 4 x 20 coefficient matrix of f(word) in the unknown
// generator values f(n1), f(n2), f(X), f(Y), f(Z).
struct SymbolicWord {
  GammaElement u{};
  std::array<std::array<int, 20>, 4> coef{};
};

void append_generator(const Group& G, const PrimeField& F, const Rep2& phi,
                      const Rep2& rho, const std::array<GammaElement, 5>& gens,
                      SymbolicWord& wd, int gen) {
  const Matrix2 R = rep_eval(F, rho, wd.u.g);
  const auto C = conj_matrix(F, R);
  for (int q = 0; q < 4; ++q)
    for (int r = 0; r < 4; ++r)
      wd.coef[q][4 * gen + r] = F.add(wd.coef[q][4 * gen + r], C[q][r]);
  wd.u = gamma_mul(G, F, phi, wd.u, gens[gen]);
}

SymbolicWord eval_word(const Group& G, const PrimeField& F, const Rep2& phi,
                       const Rep2& rho, const std::array<GammaElement, 5>& gens,
                       const std::vector<int>& word) {
  SymbolicWord wd;
  for (int gen : word) append_generator(G, F, phi, rho, gens, wd, gen);
  return wd;
}

std::vector<int> repeat(int gen, int times) {
  return std::vector<int>(static_cast<std::size_t>(times), gen);
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace

int d1_cocycle_oracle(const Group& G, const PrimeField& F, const Rep2& phi,
                      const Rep2& rho) {
  const ExtensionParams& par = G.params();
  const int p = F.p();
  // Generators of Gamma: n1, n2 (indices 0, 1) and X, Y, Z (2, 3, 4).
  const std::array<GammaElement, 5> gens{
      GammaElement{{1, 0}, G.identity()}, GammaElement{{0, 1}, G.identity()},
      GammaElement{{0, 0}, G.genX()}, GammaElement{{0, 0}, G.genY()},
      GammaElement{{0, 0}, G.genZ()}};

  // g n_j g^{-1} = n1^{c0} n2^{c1} with (c0, c1) the j-th column of phi(g).
  const auto action_rhs = [&](const Matrix2& A, int j, int gen) {
    return cat({repeat(0, A.e[j]), repeat(1, A.e[2 + j]), {gen}});
  };
  std::vector<std::pair<std::vector<int>, std::vector<int>>> relations{
      {repeat(0, p), {}},
      {repeat(1, p), {}},
      {{0, 1}, {1, 0}},
      {{2, 0}, action_rhs(phi.x, 0, 2)},
      {{2, 1}, action_rhs(phi.x, 1, 2)},
      {{3, 0}, action_rhs(phi.y, 0, 3)},
      {{3, 1}, action_rhs(phi.y, 1, 3)},
      {{4, 0}, action_rhs(phi.z, 0, 4)},
      {{4, 1}, action_rhs(phi.z, 1, 4)},
      {repeat(2, par.n), repeat(4, par.alpha)},
      {{3, 3}, repeat(4, par.beta)},
      {{3, 2}, cat({repeat(2, par.n - 1), {3}, repeat(4, par.gamma)})},
      {{2, 4}, {4, 2}},
      {{3, 4}, {4, 3}},
      {repeat(4, par.m), {}}};

  std::vector<std::vector<int>> M;
  for (const auto& [lhs, rhs] : relations) {
    const SymbolicWord wl = eval_word(G, F, phi, rho, gens, lhs);
    const SymbolicWord wr = eval_word(G, F, phi, rho, gens, rhs);
    if (!(wl.u == wr.u))
      throw ConsistencyError("d1_cocycle_oracle: relation fails in Gamma");
    for (int q = 0; q < 4; ++q) {
      std::vector<int> row(20);
      for (int c = 0; c < 20; ++c) row[c] = F.sub(wl.coef[q][c], wr.coef[q][c]);
      M.push_back(std::move(row));
    }
  }
  const int dim_z1 = 20 - detail::rref(F, M);
  const int dim_b1 = 4 - commutant_dim(F, rho);
  return dim_z1 - dim_b1;
}

namespace {

struct Vec2 {
  int a = 0;
  int b = 0;
};

Vec2 apply(const PrimeField& F, const Matrix2& A, const Vec2& v) {
  return {F.reduce(static_cast<long long>(A.e[0]) * v.a +
                   static_cast<long long>(A.e[1]) * v.b),
          F.reduce(static_cast<long long>(A.e[2]) * v.a +
                   static_cast<long long>(A.e[3]) * v.b)};
}

// The three basis 2-cocycles on N = (F_p)^2 with trivial coefficients:
// two carries and one cup product.
int basis_cocycle(const PrimeField& F, int which, const Vec2& u,
                  const Vec2& v) {
  switch (which) {
    case 0:
      return u.a + v.a >= F.p() ? 1 : 0;
    case 1:
      return u.b + v.b >= F.p() ? 1 : 0;
    default:
      return F.mul(u.a, v.b);
  }
}

// Coordinates of the class of (u, v) |-> basis_cocycle(which, A^-1 u, A^-1 v)
// in the carry/carry/cup basis: solve
//   f' = l1 b1 + l2 b2 + l3 c + (coboundary of h)
// exactly, then check the expression on every pair of N x N.
std::array<int, 3> reduce_transformed(const PrimeField& F, const Matrix2& Ainv,
                                      int which) {
  const int p = F.p();
  const int points = p * p;
  const int cols = 3 + points + 1;  // lambda, h on N, right-hand side
  const auto idx = [p](const Vec2& v) { return v.a * p + v.b; };
  const auto fprime = [&](const Vec2& u, const Vec2& v) {
    return basis_cocycle(F, which, apply(F, Ainv, u), apply(F, Ainv, v));
  };
  const auto make_row = [&](const Vec2& u, const Vec2& v) {
    std::vector<int> row(cols, 0);
    for (int i = 0; i < 3; ++i) row[i] = basis_cocycle(F, i, u, v);
    const Vec2 s{(u.a + v.a) % p, (u.b + v.b) % p};
    row[3 + idx(u)] = F.add(row[3 + idx(u)], 1);
    row[3 + idx(v)] = F.add(row[3 + idx(v)], 1);
    row[3 + idx(s)] = F.sub(row[3 + idx(s)], 1);
    row[cols - 1] = fprime(u, v);
    return row;
  };

  // The coefficient matrix over all pairs has rank points + 1 (its kernel is
  // Hom(N, F_p), dimension two); feed structured pairs first and stop as soon
  // as that rank is reached.
  const int target = points + 1;
  detail::RrefAccumulator acc(F, cols);
  const auto feed_family = [&](auto&& second) {
    for (int a = 0; a < p && acc.rank() < target; ++a)
      for (int b = 0; b < p && acc.rank() < target; ++b) {
        const Vec2 u{a, b};
        acc.add(make_row(u, second(u)));
      }
  };
  feed_family([](const Vec2&) { return Vec2{1, 0}; });
  feed_family([](const Vec2&) { return Vec2{0, 1}; });
  feed_family([](const Vec2& u) { return u; });
  for (int ua = 0; ua < p && acc.rank() < target; ++ua)
    for (int ub = 0; ub < p && acc.rank() < target; ++ub)
      for (int va = 0; va < p && acc.rank() < target; ++va)
        for (int vb = 0; vb < p && acc.rank() < target; ++vb)
          acc.add(make_row({ua, ub}, {va, vb}));
  if (acc.rank() != target)
    throw ConsistencyError("d2: cohomology solve did not reach full rank");

  // Free unknowns zero; every pivot unknown reads off the augmented column.
  std::vector<int> sol(cols - 1, 0);
  for (int i = 0; i < acc.rank(); ++i) {
    if (acc.pivots()[i] == cols - 1)
      throw ConsistencyError("d2: transformed cocycle outside the basis span");
    sol[acc.pivots()[i]] = acc.rows()[i][cols - 1];
  }
  for (int ua = 0; ua < p; ++ua)
    for (int ub = 0; ub < p; ++ub)
      for (int va = 0; va < p; ++va)
        for (int vb = 0; vb < p; ++vb) {
          const Vec2 u{ua, ub}, v{va, vb};
          long long lhs = 0;
          for (int i = 0; i < 3; ++i)
            lhs += static_cast<long long>(sol[i]) * basis_cocycle(F, i, u, v);
          const Vec2 s{(ua + va) % p, (ub + vb) % p};
          lhs += sol[3 + idx(u)] + sol[3 + idx(v)] - sol[3 + idx(s)];
          if (F.reduce(lhs) != fprime(u, v))
            throw ConsistencyError("d2: reduced cocycle fails verification");
        }
  return {sol[0], sol[1], sol[2]};
}

}  // namespace

int d2_invariants(const PrimeField& F, const Rep2& phi, const Rep2& rho) {
  // For each generator g: action on H^2(N, F_p) in the basis, tensored with
  // conjugation on M; invariants are the common fixed space.
  std::vector<std::vector<int>> M;
  const std::array<const Matrix2*, 3> phis{&phi.x, &phi.y, &phi.z};
  const std::array<const Matrix2*, 3> rhos{&rho.x, &rho.y, &rho.z};
  for (int g = 0; g < 3; ++g) {
    const Matrix2 Ainv = mat_inv(F, *phis[g]);
    std::array<std::array<int, 3>, 3> Mg{};
    for (int col = 0; col < 3; ++col) {
      const auto lambda = reduce_transformed(F, Ainv, col);
      for (int row = 0; row < 3; ++row) Mg[row][col] = lambda[row];
    }
    const auto C = conj_matrix(F, *rhos[g]);
    // K_g - I on the 12-dimensional tensor space, coordinates (i, q).
    for (int i = 0; i < 3; ++i)
      for (int q = 0; q < 4; ++q) {
        std::vector<int> row(12, 0);
        for (int i2 = 0; i2 < 3; ++i2)
          for (int q2 = 0; q2 < 4; ++q2)
            row[4 * i2 + q2] = F.mul(Mg[i][i2], C[q][q2]);
        row[4 * i + q] = F.sub(row[4 * i + q], 1);
        M.push_back(std::move(row));
      }
  }
  return 12 - detail::rref(F, M);
}

UDRClass classify_udr(const CohomDims& dims) {
  if (dims.d1 >= 2)
    throw RegimeError("classify_udr: classification covers d1 <= 1 only");
  UDRClass out;
  out.dims = dims;
  out.tag = dims.d1 == 0 ? UDRTag::ZP : UDRTag::ZP_T_MOD_T2_PT;
  return out;
}

std::string udr_tag_string(UDRTag tag) {
  return tag == UDRTag::ZP ? "Z_p" : "Z_p[[t]]/(t^2,pt)";
}

}  // namespace udrf
