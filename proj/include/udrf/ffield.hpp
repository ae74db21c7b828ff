#pragma once

// Prime-field arithmetic with discrete-log tables, plus 2x2 matrices over F_p.
// Fields are small by design (p is selected so that F_p contains the 2n-th and
// 2m-th roots of unity needed by the representation layer), so full log/exp
// tables are cheap and every computation stays exact.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace udrf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument or a value outside an operation's domain.  CLI exit code 2.
struct ParamError : Error {
  using Error::Error;
};

// Structurally valid input that falls outside the regime the underlying
// results cover (odd n or m, reducible twist, undetermined recovery).
// CLI exit code 2.
struct RegimeError : Error {
  using Error::Error;
};

// Two independent routes to the same quantity disagreed.  CLI exit code 3.
struct ConsistencyError : Error {
  using Error::Error;
};

bool is_prime(int q);

// Least generator of (Z/p)^*.  p must be prime.
int find_primitive_root(int p);

// Least prime p <= search_bound with p = 1 (mod lcm(2n, 2m)) and p not
// dividing 2nm.  Throws ParamError when the bound is exhausted.
int select_prime(int n, int m, int search_bound);

class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int w() const { return w_; }  // least primitive root

  int reduce(long long v) const {
    int r = static_cast<int>(v % p_);
    return r < 0 ? r + p_ : r;
  }
  int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
  int inv(int a) const;
  int pow(int base, long long e) const;

  // w^k for any integer k (reduced mod p-1).
  int exp(long long k) const;
  // Discrete log base w; throws ParamError on 0.
  int dlog(int x) const;
  // Primitive k-th root of unity w^{(p-1)/k}; requires k | p-1.
  int unity_root(int k) const;
  int order(int x) const;

 private:
  int p_ = 0;
  int w_ = 0;
  std::vector<int> exp_;  // exp_[k] = w^k, k in [0, p-1)
  std::vector<int> log_;  // log_[x] = dlog(x), log_[0] unused
};

// Row-major 2x2 matrix over F_p.  Entries are residues in [0, p).
struct Matrix2 {
  std::array<int, 4> e{1, 0, 0, 1};
  bool operator==(const Matrix2&) const = default;
};

Matrix2 mat_identity();
Matrix2 mat_scalar(int c);
Matrix2 mat_diag(int a, int d);
Matrix2 mat_antidiag(int b, int c);  // [[0, b], [c, 0]]

Matrix2 mat_mul(const PrimeField& F, const Matrix2& a, const Matrix2& b);
int mat_det(const PrimeField& F, const Matrix2& a);
// Throws ParamError on singular input.
Matrix2 mat_inv(const PrimeField& F, const Matrix2& a);
Matrix2 mat_pow(const PrimeField& F, Matrix2 a, long long e);
Matrix2 mat_scale(const PrimeField& F, int c, const Matrix2& a);

bool mat_is_scalar(const Matrix2& a);
bool mat_is_diag(const Matrix2& a);
bool mat_is_antidiag(const Matrix2& a);

}  // namespace udrf
