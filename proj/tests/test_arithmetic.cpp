#include <doctest.h>

#include <numeric>

#include "orthomod/arithmetic.hpp"
#include "orthomod/integer_matrix.hpp"

using namespace orthomod;

TEST_CASE("factorization and multiplicative functions") {
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(distinct_prime_count(1) == 0);
  CHECK(distinct_prime_count(30) == 3);
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t phi = 0;
    for (std::int64_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == phi);
    int mu_sum = 0;
    for (auto d : divisors(n)) mu_sum += moebius(d);
    CHECK(mu_sum == (n == 1 ? 1 : 0));
  }
  CHECK(divisor_sigma(12, 1) == 28);
  CHECK(divisor_sigma(6, 2) == 50);
}

TEST_CASE("modular helpers") {
  CHECK(mod(-7, 5) == 3);
  CHECK(inverse_mod(3, 7) == 5);
  CHECK_THROWS_AS(inverse_mod(2, 4), InvalidArgument);
  CHECK(ord_p(48, 2) == 4);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(12));
}

TEST_CASE("kronecker symbol against Euler's criterion and the rule at 2") {
  for (std::int64_t p : {3, 5, 7, 11, 13})
    for (std::int64_t a = -20; a <= 20; ++a) {
      std::int64_t r = 1;
      for (std::int64_t k = 0; k < (p - 1) / 2; ++k) r = mod(r * mod(a, p), p);
      const int euler = mod(a, p) == 0 ? 0 : (r == 1 ? 1 : -1);
      CHECK(kronecker(a, p) == euler);
    }
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(17, 2) == 1);
  CHECK(kronecker(8, 2) == 0);
}

TEST_CASE("fundamental discriminants") {
  CHECK(fundamental_discriminant(3) == 12);
  CHECK(fundamental_discriminant(-1) == -4);
  CHECK(fundamental_discriminant(5) == 5);
  CHECK(fundamental_discriminant(18) == 8);
  CHECK(fundamental_discriminant(9) == 1);
  CHECK(is_fundamental_discriminant(-3));
  CHECK_FALSE(is_fundamental_discriminant(-12 * 4));
}

TEST_CASE("Bareiss determinant and Smith normal form") {
  IntMatrix a(3, 3);
  a << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  CHECK(abs(determinant(a)) == 144);
  const SmithForm s = smith_normal_form(a);
  CHECK(IntMatrix(s.left * a * s.right) == s.diagonal);
  CHECK(s.diagonal(0, 0) == 2);
  CHECK(s.diagonal(1, 1) == 6);
  CHECK(s.diagonal(2, 2) == 12);
  CHECK(abs(determinant(s.left)) == 1);
  CHECK(abs(determinant(s.right)) == 1);
}

TEST_CASE("integer kernel is saturated") {
  IntMatrix m(1, 3);
  m << 2, 4, 6;
  const IntMatrix k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).isZero());
  // Saturation: the 2x2 minors of the kernel basis have gcd 1.
  std::int64_t g = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) g = std::gcd(g, k(i, 0) * k(j, 1) - k(j, 0) * k(i, 1));
  CHECK(g == 1);
}

TEST_CASE("checked arithmetic refuses to wrap") {
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), std::overflow_error);
}
