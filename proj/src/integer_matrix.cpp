#include "orthomod/integer_matrix.hpp"

#include <utility>

namespace orthomod {

namespace {

Matrix<BigInt> to_big(const IntMatrix& m) {
  Matrix<BigInt> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix to_small(const Matrix<BigInt>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = to_int64(m(i, j));
  return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Column operations on (a | v) so that a ends up in column echelon form.
// Returns the number of pivot columns; columns [r, n) of v then span ker a.
Index column_echelon(Matrix<BigInt>& a, Matrix<BigInt>& v) {
  const Index rows = a.rows(), n = a.cols();
  Index r = 0;
  for (Index i = 0; i < rows && r < n; ++i) {
    // Euclid on row i over columns r..n-1 until a single nonzero remains.
    for (;;) {
      Index piv = -1;
      for (Index j = r; j < n; ++j)
        if (a(i, j) != 0 && (piv < 0 || abs(a(i, j)) < abs(a(i, piv)))) piv = j;
      if (piv < 0) break;
      bool done = true;
      for (Index j = r; j < n; ++j) {
        if (j == piv || a(i, j) == 0) continue;
        const BigInt q = floor_div(a(i, j), a(i, piv));
        a.col(j) -= q * a.col(piv);
        v.col(j) -= q * v.col(piv);
        if (a(i, j) != 0) done = false;
      }
      if (done) {
        a.col(r).swap(a.col(piv));
        v.col(r).swap(v.col(piv));
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace

Index rank(const IntMatrix& m) {
  Matrix<BigInt> a = to_big(m);
  Matrix<BigInt> v = Matrix<BigInt>::Identity(m.cols(), m.cols());
  return column_echelon(a, v);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  Matrix<BigInt> a = to_big(m);
  Matrix<BigInt> v = Matrix<BigInt>::Identity(m.cols(), m.cols());
  const Index r = column_echelon(a, v);
  return to_small(v.rightCols(m.cols() - r));
}

SmithForm smith_normal_form(const IntMatrix& input) {
  const Index n = input.rows();
  if (n != input.cols()) throw InvalidArgument("smith_normal_form: matrix is not square");
  Matrix<BigInt> a = to_big(input);
  Matrix<BigInt> u = Matrix<BigInt>::Identity(n, n);
  Matrix<BigInt> v = Matrix<BigInt>::Identity(n, n);

  for (Index k = 0; k < n; ++k) {
    for (;;) {
      // Move the smallest nonzero entry of the trailing block to (k, k).
      Index pi = -1, pj = -1;
      for (Index i = k; i < n; ++i)
        for (Index j = k; j < n; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      a.row(k).swap(a.row(pi));
      u.row(k).swap(u.row(pi));
      a.col(k).swap(a.col(pj));
      v.col(k).swap(v.col(pj));

      bool clean = true;
      for (Index i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        const BigInt q = floor_div(a(i, k), a(k, k));
        a.row(i) -= q * a.row(k);
        u.row(i) -= q * u.row(k);
        if (a(i, k) != 0) clean = false;
      }
      for (Index j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        const BigInt q = floor_div(a(k, j), a(k, k));
        a.col(j) -= q * a.col(k);
        v.col(j) -= q * v.col(k);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the rest of the block by the pivot.
      Index bad_row = -1;
      for (Index i = k + 1; i < n && bad_row < 0; ++i)
        for (Index j = k + 1; j < n; ++j)
          if (a(i, j) % a(k, k) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      a.row(k) += a.row(bad_row);
      u.row(k) += u.row(bad_row);
    }
    if (a(k, k) < 0) {
      a.row(k) = -a.row(k);
      u.row(k) = -u.row(k);
    }
  }
  return {to_small(u), to_small(a), to_small(v)};
}

Matrix<Rational> rational_inverse(const IntMatrix& m) {
  const Index n = m.rows();
  if (n != m.cols()) throw InvalidArgument("rational_inverse: matrix is not square");
  Matrix<Rational> a(n, 2 * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      a(i, j) = m(i, j);
      a(i, n + j) = (i == j) ? 1 : 0;
    }
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw InvalidArgument("rational_inverse: singular matrix");
    if (p != k) a.row(k).swap(a.row(p));
    const Rational inv = Rational(1) / a(k, k);
    for (Index j = 0; j < 2 * n; ++j) a(k, j) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (Index j = 0; j < 2 * n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return a.rightCols(n);
}

std::vector<BigInt> leading_minors(const IntMatrix& m) {
  std::vector<BigInt> out;
  for (Index k = 0; k <= m.rows(); ++k) out.push_back(determinant(m.topLeftCorner(k, k)));
  return out;
}

}  // namespace orthomod
