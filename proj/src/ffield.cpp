#include "udrf/ffield.hpp"

#include <numeric>

namespace udrf {

namespace {

long long mod_ll(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

std::vector<int> prime_factors(int v) {
  std::vector<int> out;
  for (int q = 2; static_cast<long long>(q) * q <= v; ++q) {
    if (v % q == 0) {
      out.push_back(q);
      while (v % q == 0) v /= q;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

int pow_mod(long long base, long long e, int p) {
  long long acc = 1;
  base = mod_ll(base, p);
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int find_primitive_root(int p) {
  if (!is_prime(p)) throw ParamError("find_primitive_root: p not prime");
  if (p == 2) return 1;
  const auto qs = prime_factors(p - 1);
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : qs)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw ConsistencyError("find_primitive_root: no generator found");
}

int select_prime(int n, int m, int search_bound) {
  if (n < 1 || m < 1) throw ParamError("select_prime: n, m must be positive");
  const long long L = std::lcm(2LL * n, 2LL * m);
  for (long long p = 1 + L; p <= search_bound; p += L) {
    if (p > 2 && is_prime(static_cast<int>(p)) &&
        (2LL * n * m) % p != 0)
      return static_cast<int>(p);
  }
  throw ParamError("select_prime: no admissible prime within bound " +
                   std::to_string(search_bound));
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p) || p < 3) throw ParamError("PrimeField: p must be an odd prime");
  w_ = find_primitive_root(p);
  exp_.resize(p - 1);
  log_.assign(p, 0);
  long long v = 1;
  for (int k = 0; k < p - 1; ++k) {
    exp_[k] = static_cast<int>(v);
    log_[v] = k;
    v = v * w_ % p;
  }
  if (v != 1) throw ConsistencyError("PrimeField: generator order mismatch");
}

int PrimeField::inv(int a) const {
  if (a % p_ == 0) throw ParamError("PrimeField::inv: zero");
  return exp(-static_cast<long long>(dlog(reduce(a))));
}

int PrimeField::pow(int base, long long e) const {
  base = reduce(base);
  if (base == 0) {
    if (e < 0) throw ParamError("PrimeField::pow: zero to negative power");
    return e == 0 ? 1 : 0;
  }
  return exp(static_cast<long long>(dlog(base)) * mod_ll(e, p_ - 1));
}

int PrimeField::exp(long long k) const {
  return exp_[static_cast<std::size_t>(mod_ll(k, p_ - 1))];
}

int PrimeField::dlog(int x) const {
  x = reduce(x);
  if (x == 0) throw ParamError("PrimeField::dlog: zero has no logarithm");
  return log_[x];
}

int PrimeField::unity_root(int k) const {
  if (k < 1 || (p_ - 1) % k != 0)
    throw ParamError("PrimeField::unity_root: k must divide p-1");
  return exp((p_ - 1) / k);
}

int PrimeField::order(int x) const {
  x = reduce(x);
  if (x == 0) throw ParamError("PrimeField::order: zero");
  const int d = dlog(x);
  return (p_ - 1) / std::gcd(p_ - 1, d == 0 ? p_ - 1 : d);
}

Matrix2 mat_identity() { return Matrix2{{1, 0, 0, 1}}; }

Matrix2 mat_scalar(int c) { return Matrix2{{c, 0, 0, c}}; }

Matrix2 mat_diag(int a, int d) { return Matrix2{{a, 0, 0, d}}; }

Matrix2 mat_antidiag(int b, int c) { return Matrix2{{0, b, c, 0}}; }

Matrix2 mat_mul(const PrimeField& F, const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  r.e[0] = F.reduce(static_cast<long long>(a.e[0]) * b.e[0] +
                    static_cast<long long>(a.e[1]) * b.e[2]);
  r.e[1] = F.reduce(static_cast<long long>(a.e[0]) * b.e[1] +
                    static_cast<long long>(a.e[1]) * b.e[3]);
  r.e[2] = F.reduce(static_cast<long long>(a.e[2]) * b.e[0] +
                    static_cast<long long>(a.e[3]) * b.e[2]);
  r.e[3] = F.reduce(static_cast<long long>(a.e[2]) * b.e[1] +
                    static_cast<long long>(a.e[3]) * b.e[3]);
  return r;
}

int mat_det(const PrimeField& F, const Matrix2& a) {
  return F.reduce(static_cast<long long>(a.e[0]) * a.e[3] -
                  static_cast<long long>(a.e[1]) * a.e[2]);
}

Matrix2 mat_inv(const PrimeField& F, const Matrix2& a) {
  const int d = mat_det(F, a);
  if (d == 0) throw ParamError("mat_inv: singular matrix");
  const int di = F.inv(d);
  return Matrix2{{F.mul(di, a.e[3]), F.mul(di, F.neg(a.e[1])),
                  F.mul(di, F.neg(a.e[2])), F.mul(di, a.e[0])}};
}

Matrix2 mat_pow(const PrimeField& F, Matrix2 a, long long e) {
  if (e < 0) return mat_pow(F, mat_inv(F, a), -e);
  Matrix2 acc = mat_identity();
  while (e > 0) {
    if (e & 1) acc = mat_mul(F, acc, a);
    a = mat_mul(F, a, a);
    e >>= 1;
  }
  return acc;
}

Matrix2 mat_scale(const PrimeField& F, int c, const Matrix2& a) {
  Matrix2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = F.mul(c, a.e[k]);
  return r;
}

bool mat_is_scalar(const Matrix2& a) {
  return a.e[1] == 0 && a.e[2] == 0 && a.e[0] == a.e[3];
}

bool mat_is_diag(const Matrix2& a) { return a.e[1] == 0 && a.e[2] == 0; }

bool mat_is_antidiag(const Matrix2& a) { return a.e[0] == 0 && a.e[3] == 0; }

}  // namespace udrf
