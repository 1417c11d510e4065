#pragma once

// Elementary number theory on machine integers.

#include <cstdint>
#include <utility>
#include <vector>

#include "orthomod/types.hpp"

namespace orthomod {

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Number of distinct prime divisors; rho(1) = 0.
int distinct_prime_count(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// Exponent of p in n (n != 0).
int ord_p(std::int64_t n, std::int64_t p);

bool is_squarefree(std::int64_t n);
bool is_prime(std::int64_t n);

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);
__int128 isqrt128(__int128 n);

/// Non-negative residue of a mod m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a mod m; throws InvalidArgument when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Kronecker symbol (D/n) with the standard rule at 2:
/// (D/2) = 0 for even D, 1 for D = +-1 mod 8, -1 for D = +-3 mod 8.
int kronecker(std::int64_t D, std::int64_t n);

/// Discriminant of the quadratic field Q(sqrt(x)), x != 0; returns 1 when x
/// is a perfect square.
std::int64_t fundamental_discriminant(std::int64_t x);

bool is_fundamental_discriminant(std::int64_t D);

/// Exact rational power base^e for integer e (base != 0 when e < 0).
Rational rational_pow(const Rational& base, int e);

/// sigma_k(n) = sum over d | n of d^k, for k >= 0.
BigInt divisor_sigma(std::int64_t n, int k);

}  // namespace orthomod
