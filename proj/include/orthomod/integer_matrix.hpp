#pragma once

// Exact integer linear algebra on small dense matrices.

#include "orthomod/types.hpp"

namespace orthomod {

/// Fraction-free (Bareiss) determinant.
template <typename Derived>
BigInt determinant(const Eigen::MatrixBase<Derived>& m) {
  const Index n = m.rows();
  if (n != m.cols()) throw InvalidArgument("determinant: matrix is not square");
  if (n == 0) return 1;
  Matrix<BigInt> a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = BigInt(m(i, j));
  BigInt sign = 1, prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank over Q.
Index rank(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x in Z^n : m x = 0}. The basis
/// spans a saturated sublattice of Z^n.
IntMatrix integer_kernel(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      // unimodular U
  IntMatrix diagonal;  // U * A * V, diagonal with d1 | d2 | ...
  IntMatrix right;     // unimodular V
};

/// Smith normal form of a square integer matrix; diagonal entries are made
/// non-negative.
SmithForm smith_normal_form(const IntMatrix& a);

/// Inverse of a non-singular integer matrix, exactly.
Matrix<Rational> rational_inverse(const IntMatrix& m);

/// Leading principal minors det(m[0..k-1, 0..k-1]) for k = 0..n.
std::vector<BigInt> leading_minors(const IntMatrix& m);

}  // namespace orthomod
