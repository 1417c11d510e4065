#include <algorithm>

#include "orthomod/arithmetic.hpp"
#include "orthomod/integer_matrix.hpp"
#include "orthomod/lattice.hpp"

namespace orthomod {

namespace {

using i128 = __int128;

// Scaled Schur complements: M_k = det(G_k) * (G / G_k), where G_k is the
// leading k x k block. For fixed x_k..x_{n-1}, the minimum of the form over
// x_0..x_{k-1} is x^T M_k x / det(G_k), an exact integer bound.
struct Schur {
  std::vector<std::int64_t> det;  // det(G_k)
  std::vector<IntMatrix> m;       // (n-k) x (n-k)
};

Schur schur_complements(const IntMatrix& g) {
  const Index n = g.rows();
  Schur s;
  for (Index k = 0; k < n; ++k) {
    const BigInt dk = determinant(g.topLeftCorner(k, k));
    s.det.push_back(to_int64(dk));
    IntMatrix mk(n - k, n - k);
    if (k == 0) {
      mk = g;
    } else {
      const Matrix<Rational> inv = rational_inverse(g.topLeftCorner(k, k));
      for (Index i = k; i < n; ++i)
        for (Index j = k; j < n; ++j) {
          Rational v = g(i, j);
          for (Index a = 0; a < k; ++a)
            for (Index b = 0; b < k; ++b) v -= Rational(g(i, a)) * inv(a, b) * Rational(g(b, j));
          v *= Rational(dk);
          if (boost::multiprecision::denominator(v) != 1) throw CrossCheckFailure("non-integral Schur complement");
          mk(i - k, j - k) = to_int64(boost::multiprecision::numerator(v));
        }
    }
    s.m.push_back(std::move(mk));
  }
  return s;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

class Enumerator {
 public:
  Enumerator(const GramLattice& l, std::int64_t lo, std::int64_t hi,
             const std::function<void(const IntVector&, std::int64_t)>& visit)
      : n_(l.rank()), s_(schur_complements(l.gram())), lo_(lo), hi_(hi), visit_(visit), x_(IntVector::Zero(n_)) {}

  void run() {
    if (hi_ < 0 || lo_ > hi_) return;
    level(n_ - 1);
  }

 private:
  void level(Index k) {
    const IntMatrix& m = s_.m[k];
    const Index r = n_ - k;
    i128 b = 0, c = 0;
    for (Index j = 1; j < r; ++j) b += static_cast<i128>(m(0, j)) * x_(k + j);
    for (Index i = 1; i < r; ++i) {
      if (x_(k + i) == 0) continue;
      i128 row = 0;
      for (Index j = 1; j < r; ++j) row += static_cast<i128>(m(i, j)) * x_(k + j);
      c += row * x_(k + i);
    }
    const i128 a = m(0, 0);
    const i128 bound = static_cast<i128>(s_.det[k]) * hi_;
    const i128 disc = b * b - a * (c - bound);
    if (disc < 0) return;

    if (k == 0 && lo_ == hi_) {
      // Exact shell: (a x + b)^2 = disc.
      const i128 s = isqrt128(disc);
      if (s * s != disc) return;
      for (i128 num : {-b - s, -b + s}) {
        if (num % a != 0) continue;
        x_(0) = static_cast<std::int64_t>(num / a);
        visit_(x_, hi_);
        if (s == 0) break;
      }
      x_(0) = 0;
      return;
    }

    const i128 s = isqrt128(disc);
    const i128 lo_x = ceil_div(-b - s, a), hi_x = floor_div(-b + s, a);
    for (i128 v = lo_x; v <= hi_x; ++v) {
      x_(k) = static_cast<std::int64_t>(v);
      if (k == 0) {
        const i128 nrm = a * v * v + 2 * b * v + c;
        if (nrm >= lo_ && nrm <= hi_) visit_(x_, static_cast<std::int64_t>(nrm));
      } else {
        level(k - 1);
      }
    }
    x_(k) = 0;
  }

  Index n_;
  Schur s_;
  std::int64_t lo_, hi_;
  const std::function<void(const IntVector&, std::int64_t)>& visit_;
  IntVector x_;
};

void require_definite(const GramLattice& l) {
  if (!l.is_positive_definite()) throw InvalidArgument("enumeration requires a positive-definite lattice");
}

}  // namespace

void for_each_vector(const GramLattice& l, std::int64_t lo, std::int64_t hi,
                     const std::function<void(const IntVector&, std::int64_t)>& visit) {
  require_definite(l);
  Enumerator(l, lo, hi, visit).run();
}

std::vector<LatticeVector> enumerate_norm(const GramLattice& l, std::int64_t n) {
  require_definite(l);
  if (n < 0) throw InvalidArgument("enumerate_norm: negative norm");
  std::vector<IntVector> found;
  for_each_vector(l, n, n, [&](const IntVector& x, std::int64_t) { found.push_back(x); });
  std::sort(found.begin(), found.end(), [](const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  std::vector<LatticeVector> out;
  out.reserve(found.size());
  for (auto& x : found) out.emplace_back(l, std::move(x));
  return out;
}

std::int64_t rep_count(const GramLattice& l, std::int64_t n) {
  require_definite(l);
  if (n < 0) throw InvalidArgument("rep_count: negative norm");
  std::int64_t count = 0;
  for_each_vector(l, n, n, [&](const IntVector&, std::int64_t) { ++count; });
  return count;
}

std::vector<std::int64_t> norm_counts(const GramLattice& l, std::int64_t max_norm) {
  require_definite(l);
  if (max_norm < 0) throw InvalidArgument("norm_counts: negative bound");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(max_norm) + 1, 0);
  for_each_vector(l, 0, max_norm, [&](const IntVector&, std::int64_t nrm) { ++counts[static_cast<std::size_t>(nrm)]; });
  return counts;
}

std::vector<LatticeVector> roots(const GramLattice& l) { return enumerate_norm(l, 2); }

}  // namespace orthomod
