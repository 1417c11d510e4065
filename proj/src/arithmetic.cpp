#include "orthomod/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

namespace orthomod {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
  if (n < 0) n = -n;
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int distinct_prime_count(std::int64_t n) { return static_cast<int>(factorize(n).size()); }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int moebius(std::int64_t n) {
  int s = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> ds{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t sz = ds.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int ord_p(std::int64_t n, std::int64_t p) {
  if (n == 0) throw InvalidArgument("ord_p: zero");
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

bool is_squarefree(std::int64_t n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw InvalidArgument("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

__int128 isqrt128(__int128 n) {
  if (n < 0) throw InvalidArgument("isqrt128: negative argument");
  auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1 && m != 1) throw InvalidArgument("inverse_mod: not invertible");
  return mod(old_s, m);
}

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t D, std::int64_t n) {
  if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (D < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (D % 2 == 0) return 0;
    const std::int64_t r = mod(D, 8);
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(D, n);
}

std::int64_t fundamental_discriminant(std::int64_t x) {
  if (x == 0) throw InvalidArgument("fundamental_discriminant: zero");
  std::int64_t core = x < 0 ? -1 : 1;
  for (auto [p, e] : factorize(x))
    if (e % 2 == 1) core *= p;
  if (core == 1) return 1;
  return mod(core, 4) == 1 ? core : 4 * core;
}

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 1) return true;
  if (D == 0) return false;
  if (mod(D, 4) == 1) return is_squarefree(D);
  if (mod(D, 4) != 0) return false;
  const std::int64_t m = D / 4;
  return (mod(m, 4) == 2 || mod(m, 4) == 3) && is_squarefree(m);
}

Rational rational_pow(const Rational& base, int e) {
  Rational r = 1;
  Rational b = e < 0 ? Rational(1) / base : base;
  for (int k = 0; k < std::abs(e); ++k) r *= b;
  return r;
}

BigInt divisor_sigma(std::int64_t n, int k) {
  BigInt s = 0;
  for (auto d : divisors(n)) s += boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
  return s;
}

}  // namespace orthomod
