#include "doctest.h"
#include "udrf/ffield.hpp"

using namespace udrf;

TEST_CASE("primality and prime selection") {
  CHECK(is_prime(2));
  CHECK(is_prime(17));
  CHECK(is_prime(241));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(221));  // 13 * 17

  // p = 1 mod lcm(2n, 2m), least such prime.
  CHECK(select_prime(6, 2, 100) == 13);
  CHECK(select_prime(4, 2, 100) == 17);
  CHECK(select_prime(8, 2, 100) == 17);
  CHECK(select_prime(10, 2, 100) == 41);
  CHECK(select_prime(6, 4, 100) == 73);
  CHECK(select_prime(10, 4, 100) == 41);
  CHECK(select_prime(4, 6, 100) == 73);
  CHECK(select_prime(6, 6, 100) == 13);
  CHECK(select_prime(8, 6, 100) == 97);
  CHECK(select_prime(10, 6, 100) == 61);
  CHECK(select_prime(20, 24, 500) == 241);
  CHECK_THROWS_AS(select_prime(20, 24, 200), ParamError);
}

TEST_CASE("primitive roots") {
  CHECK(find_primitive_root(3) == 2);
  CHECK(find_primitive_root(7) == 3);
  CHECK(find_primitive_root(13) == 2);
  // 2 has order 8 mod 17, so the least generator is 3.
  CHECK(find_primitive_root(17) == 3);

  for (int p : {13, 17, 241}) {
    const PrimeField F(p);
    int v = 1;
    for (int k = 1; k < p - 1; ++k) {
      v = F.mul(v, F.w());
      CHECK(v != 1);
    }
    CHECK(F.mul(v, F.w()) == 1);
  }
}

TEST_CASE("field arithmetic") {
  const PrimeField F(13);
  CHECK(F.p() == 13);
  CHECK(F.w() == 2);
  CHECK(F.add(7, 9) == 3);
  CHECK(F.sub(3, 7) == 9);
  CHECK(F.neg(0) == 0);
  CHECK(F.neg(5) == 8);
  CHECK(F.reduce(-1) == 12);
  for (int a = 1; a < 13; ++a) {
    CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(a, 12) == 1);
    CHECK(F.exp(F.dlog(a)) == a);
  }
  CHECK(F.dlog(1) == 0);
  CHECK(F.dlog(2) == 1);
  CHECK(F.dlog(8) == 3);
  CHECK_THROWS_AS(F.dlog(0), ParamError);
  CHECK(F.pow(0, 5) == 0);
  CHECK(F.exp(-1) == F.inv(2));

  CHECK(F.order(1) == 1);
  CHECK(F.order(12) == 2);
  CHECK(F.order(2) == 12);
  CHECK(F.unity_root(12) == 2);
  CHECK(F.order(F.unity_root(6)) == 6);
  CHECK(F.order(F.unity_root(4)) == 4);
  CHECK_THROWS_AS(F.unity_root(5), ParamError);
}

TEST_CASE("matrix operations") {
  const PrimeField F(13);
  const Matrix2 I = mat_identity();
  CHECK(I.e == std::array<int, 4>{1, 0, 0, 1});
  const Matrix2 A = mat_diag(2, 4);
  const Matrix2 B = mat_antidiag(3, 5);
  CHECK(mat_is_diag(A));
  CHECK(mat_is_antidiag(B));
  CHECK_FALSE(mat_is_scalar(A));
  CHECK(mat_is_scalar(mat_scalar(6)));

  CHECK(mat_mul(F, A, I) == A);
  CHECK(mat_det(F, A) == 8);
  CHECK(mat_inv(F, A) == mat_diag(7, 10));
  CHECK(mat_mul(F, B, mat_inv(F, B)) == I);
  CHECK(mat_pow(F, A, 0) == I);
  CHECK(mat_pow(F, A, 3) == mat_diag(8, 12));
  CHECK(mat_pow(F, A, -1) == mat_inv(F, A));
  CHECK(mat_scale(F, 2, B) == mat_antidiag(6, 10));

  // antidiag squares to a diagonal
  CHECK(mat_mul(F, B, B) == mat_diag(F.mul(3, 5), F.mul(3, 5)));
  CHECK_THROWS_AS(mat_inv(F, mat_diag(0, 4)), ParamError);
}
