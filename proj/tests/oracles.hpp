#pragma once

// Test-only reference computations that share no code with the library.

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <Eigen/Core>

namespace oracle {

// Visits every y in Z^k with |y_i| <= bound and sum y_i^2 <= max_sq, where
// each coordinate satisfies keep(y_i).
inline void box(int k, std::int64_t bound, std::int64_t max_sq, const std::function<bool(std::int64_t)>& keep,
                const std::function<void(const std::vector<std::int64_t>&, std::int64_t)>& visit) {
  std::vector<std::int64_t> y(static_cast<std::size_t>(k));
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t sq) {
    if (i == k) {
      visit(y, sq);
      return;
    }
    for (std::int64_t v = -bound; v <= bound; ++v) {
      if (!keep(v) || sq + v * v > max_sq) continue;
      y[static_cast<std::size_t>(i)] = v;
      rec(i + 1, sq + v * v);
    }
  };
  rec(0, 0);
}

inline std::int64_t isqrt(std::int64_t n) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::int64_t sum(const std::vector<std::int64_t>& y) { return std::accumulate(y.begin(), y.end(), std::int64_t{0}); }

/// counts[k] = #{x in A_n : |x|^2 = k}, A_n = {x in Z^{n+1} : sum x = 0}.
inline std::vector<std::int64_t> counts_A(int n, std::int64_t max_norm) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_norm + 1), 0);
  box(n + 1, isqrt(max_norm), max_norm, [](std::int64_t) { return true; },
      [&](const std::vector<std::int64_t>& y, std::int64_t sq) {
        if (sum(y) == 0) ++c[static_cast<std::size_t>(sq)];
      });
  return c;
}

/// D_n = {x in Z^n : sum x even}.
inline std::vector<std::int64_t> counts_D(int n, std::int64_t max_norm) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_norm + 1), 0);
  box(n, isqrt(max_norm), max_norm, [](std::int64_t) { return true; },
      [&](const std::vector<std::int64_t>& y, std::int64_t sq) {
        if (sum(y) % 2 == 0) ++c[static_cast<std::size_t>(sq)];
      });
  return c;
}

/// E7 = {x in E8 : sum x = 0}, E8 = D8 together with D8 + (1/2, ..., 1/2).
/// Works with y = 2x.
inline std::vector<std::int64_t> counts_E7(std::int64_t max_norm) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_norm + 1), 0);
  const std::int64_t max_sq = 4 * max_norm;
  for (int parity = 0; parity < 2; ++parity) {
    box(8, isqrt(max_sq), max_sq, [&](std::int64_t v) { return ((v % 2) + 2) % 2 == parity; },
        [&](const std::vector<std::int64_t>& y, std::int64_t sq) {
          const std::int64_t s = sum(y);
          if (s == 0) ++c[static_cast<std::size_t>(sq / 4)];
        });
  }
  return c;
}

/// A1 + D4 with A1 = sqrt(2) Z.
inline std::vector<std::int64_t> counts_A1D4(std::int64_t max_norm) {
  const auto d4 = counts_D(4, max_norm);
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_norm + 1), 0);
  for (std::int64_t a = -isqrt(max_norm / 2); a <= isqrt(max_norm / 2); ++a)
    for (std::int64_t k = 0; k + 2 * a * a <= max_norm; ++k)
      c[static_cast<std::size_t>(k + 2 * a * a)] += d4[static_cast<std::size_t>(k)];
  return c;
}

/// dist[t] = #{X mod q : X^T A X / 2 = t mod q} for an even Gram matrix A.
inline std::vector<std::int64_t> density_counts(const Eigen::Matrix<std::int64_t, -1, -1>& A, std::int64_t q) {
  const int n = static_cast<int>(A.rows());
  std::vector<std::int64_t> dist(static_cast<std::size_t>(q), 0);
  std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::int64_t s = 0;
      for (int a = 0; a < n; ++a) {
        s += A(a, a) / 2 * x[a] * x[a];
        for (int b = a + 1; b < n; ++b) s += A(a, b) * x[a] * x[b];
      }
      ++dist[static_cast<std::size_t>(((s % q) + q) % q)];
      return;
    }
    for (std::int64_t v = 0; v < q; ++v) {
      x[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return dist;
}

/// #{x mod 2n : x^2 = delta mod 4n}.
inline std::int64_t b_n(std::int64_t delta, std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t x = 0; x < 2 * n; ++x)
    if ((((x * x - delta) % (4 * n)) + 4 * n) % (4 * n) == 0) ++c;
  return c;
}

}  // namespace oracle
