#pragma once

// Truncated q-expansions with exponents on a grid (1/N)Z and exact
// coefficients, plus theta series of root lattices.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "orthomod/lattice.hpp"
#include "orthomod/types.hpp"

namespace orthomod {

/// a + b*zeta with zeta a primitive sixth root of unity, zeta^2 = zeta - 1.
template <typename Int>
struct EisensteinInteger {
  Int a{0};
  Int b{0};

  constexpr EisensteinInteger() = default;
  constexpr EisensteinInteger(Int re) : a(re) {}  // NOLINT: implicit from integers is intended
  constexpr EisensteinInteger(Int re, Int zeta) : a(re), b(zeta) {}

  /// zeta^k.
  static EisensteinInteger zeta_power(std::int64_t k) {
    switch (((k % 6) + 6) % 6) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 1};
      case 3: return {-1, 0};
      case 4: return {0, -1};
      default: return {1, -1};
    }
  }

  EisensteinInteger conj() const { return {checked_add(a, b), -b}; }
  Int norm() const { return checked_add(checked_add(checked_mul(a, a), checked_mul(a, b)), checked_mul(b, b)); }
  bool is_rational() const { return b == 0; }

  friend EisensteinInteger operator+(const EisensteinInteger& x, const EisensteinInteger& y) {
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
  }
  friend EisensteinInteger operator-(const EisensteinInteger& x, const EisensteinInteger& y) {
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
  }
  EisensteinInteger operator-() const { return {-a, -b}; }
  // (a + b z)(c + d z) = ac + (ad + bc) z + bd (z - 1)
  friend EisensteinInteger operator*(const EisensteinInteger& x, const EisensteinInteger& y) {
    const Int bd = checked_mul(x.b, y.b);
    return {checked_sub(checked_mul(x.a, y.a), bd),
            checked_add(checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a)), bd)};
  }
  EisensteinInteger& operator+=(const EisensteinInteger& y) { return *this = *this + y; }
  EisensteinInteger& operator-=(const EisensteinInteger& y) { return *this = *this - y; }
  EisensteinInteger& operator*=(const EisensteinInteger& y) { return *this = *this * y; }
  bool operator==(const EisensteinInteger& y) const { return a == y.a && b == y.b; }
  bool operator!=(const EisensteinInteger& y) const { return !(*this == y); }

  friend std::ostream& operator<<(std::ostream& os, const EisensteinInteger& x) {
    return os << "(" << x.a << (x.b < 0 ? " - " : " + ") << (x.b < 0 ? -x.b : x.b) << "z)";
  }
};

using Eisenstein = EisensteinInteger<std::int64_t>;

namespace detail {
inline std::int64_t ring_add(std::int64_t x, std::int64_t y) { return checked_add(x, y); }
inline std::int64_t ring_mul(std::int64_t x, std::int64_t y) { return checked_mul(x, y); }
inline bool is_unit(std::int64_t x) { return x == 1 || x == -1; }
inline std::int64_t unit_inverse(std::int64_t x) { return x; }

inline Eisenstein ring_add(const Eisenstein& x, const Eisenstein& y) { return x + y; }
inline Eisenstein ring_mul(const Eisenstein& x, const Eisenstein& y) { return x * y; }
inline bool is_unit(const Eisenstein& x) { return x.norm() == 1; }
inline Eisenstein unit_inverse(const Eisenstein& x) { return x.conj(); }
}  // namespace detail

/// Sum of c_k q^{k/N} for 0 <= k/N < precision.
template <typename Coeff>
class QSeries {
 public:
  QSeries(std::int64_t grid, std::int64_t precision) : grid_(grid), precision_(precision) {
    if (grid < 1) throw InvalidArgument("QSeries: grid must be >= 1");
    if (precision < 1) throw InvalidArgument("QSeries: precision must be >= 1");
    c_.assign(static_cast<std::size_t>(checked_mul(grid, precision)), Coeff(0));
  }

  std::int64_t grid() const { return grid_; }
  std::int64_t precision() const { return precision_; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of q^{k/grid}.
  const Coeff& operator[](std::size_t k) const { return c_.at(k); }
  Coeff& operator[](std::size_t k) { return c_.at(k); }
  const std::vector<Coeff>& coefficients() const { return c_; }

  /// Coefficient of q^{num/den}; zero off the grid.
  Coeff at(std::int64_t num, std::int64_t den = 1) const {
    if (num < 0 || den < 1) throw InvalidArgument("QSeries::at: bad exponent");
    if ((num * grid_) % den != 0) return Coeff(0);
    const auto k = static_cast<std::size_t>(num * grid_ / den);
    return k < c_.size() ? c_[k] : Coeff(0);
  }

  /// Same series on a finer grid (new_grid a multiple of grid).
  QSeries regrid(std::int64_t new_grid) const {
    if (new_grid % grid_ != 0) throw InvalidArgument("QSeries::regrid: new grid must be a multiple");
    const std::int64_t f = new_grid / grid_;
    QSeries out(new_grid, precision_);
    for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k * static_cast<std::size_t>(f)] = c_[k];
    return out;
  }

  /// Coarser grid; every coefficient off the new grid must vanish.
  QSeries coarsen(std::int64_t new_grid) const {
    if (grid_ % new_grid != 0) throw InvalidArgument("QSeries::coarsen: grid must be a multiple of the new grid");
    const auto f = static_cast<std::size_t>(grid_ / new_grid);
    QSeries out(new_grid, precision_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (k % f == 0) out.c_[k / f] = c_[k];
      else if (c_[k] != Coeff(0)) throw CrossCheckFailure("QSeries::coarsen: nonzero coefficient off the target grid");
    }
    return out;
  }

  QSeries truncate(std::int64_t precision) const {
    QSeries out(grid_, std::min(precision, precision_));
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = c_[k];
    return out;
  }

  friend QSeries operator+(const QSeries& x, const QSeries& y) {
    auto [u, v] = common(x, y);
    for (std::size_t k = 0; k < u.c_.size(); ++k) u.c_[k] = detail::ring_add(u.c_[k], v.c_[k]);
    return u;
  }
  friend QSeries operator-(const QSeries& x) {
    QSeries out = x;
    for (auto& c : out.c_) c = detail::ring_mul(c, Coeff(-1));
    return out;
  }
  friend QSeries operator-(const QSeries& x, const QSeries& y) { return x + (-y); }
  friend QSeries operator*(const Coeff& s, const QSeries& x) {
    QSeries out = x;
    for (auto& c : out.c_) c = detail::ring_mul(s, c);
    return out;
  }

  /// Truncated Cauchy product.
  friend QSeries operator*(const QSeries& x, const QSeries& y) {
    auto [u, v] = common(x, y);
    QSeries out(u.grid_, u.precision_);
    const std::size_t n = out.c_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (u.c_[i] == Coeff(0)) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (v.c_[j] == Coeff(0)) continue;
        out.c_[i + j] = detail::ring_add(out.c_[i + j], detail::ring_mul(u.c_[i], v.c_[j]));
      }
    }
    return out;
  }

  QSeries pow(int e) const {
    if (e < 0) throw InvalidArgument("QSeries::pow: negative exponent");
    QSeries out(grid_, precision_);
    out.c_[0] = Coeff(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  /// Multiplicative inverse; the constant term must be a unit.
  QSeries invert() const {
    if (!detail::is_unit(c_[0])) throw InvalidArgument("QSeries::invert: constant term is not a unit");
    const Coeff u = detail::unit_inverse(c_[0]);
    QSeries out(grid_, precision_);
    out.c_[0] = u;
    for (std::size_t k = 1; k < c_.size(); ++k) {
      Coeff s(0);
      for (std::size_t j = 1; j <= k; ++j)
        if (c_[j] != Coeff(0)) s = detail::ring_add(s, detail::ring_mul(c_[j], out.c_[k - j]));
      out.c_[k] = detail::ring_mul(detail::ring_mul(s, u), Coeff(-1));
    }
    return out;
  }

  friend QSeries operator/(const QSeries& x, const QSeries& y) {
    auto [u, v] = common(x, y);
    return u * v.invert();
  }

  /// q^e -> q^{m e}.
  QSeries scale_tau(std::int64_t m) const {
    if (m < 1) throw InvalidArgument("QSeries::scale_tau: factor must be >= 1");
    QSeries out(grid_, precision_);
    for (std::size_t k = 0; k * static_cast<std::size_t>(m) < c_.size(); ++k) out.c_[k * static_cast<std::size_t>(m)] = c_[k];
    return out;
  }

  /// tau -> tau + 1: the coefficient at exponent e picks up exp(2 pi i e),
  /// which lies in the ring only for grids 1 and 2.
  QSeries shift_tau_by_one() const {
    if (grid_ > 2) throw InvalidArgument("QSeries::shift_tau_by_one: needs grid 1 or 2");
    QSeries out = *this;
    if (grid_ == 2)
      for (std::size_t k = 1; k < c_.size(); k += 2) out.c_[k] = detail::ring_mul(out.c_[k], Coeff(-1));
    return out;
  }

  bool operator==(const QSeries& o) const { return grid_ == o.grid_ && precision_ == o.precision_ && c_ == o.c_; }

 private:
  static std::pair<QSeries, QSeries> common(const QSeries& x, const QSeries& y) {
    const std::int64_t g = std::lcm(x.grid_, y.grid_);
    const std::int64_t p = std::min(x.precision_, y.precision_);
    return {x.regrid(g).truncate(p), y.regrid(g).truncate(p)};
  }

  std::int64_t grid_;
  std::int64_t precision_;
  std::vector<Coeff> c_;
};

using IntSeries = QSeries<std::int64_t>;
using EisensteinSeries = QSeries<Eisenstein>;

inline constexpr std::int64_t kDefaultPrecision = 128;

/// sum over n of q^{n^2/2}, grid 2.
IntSeries theta3(std::int64_t prec);
/// sum over n of zeta^{nk} q^{n^2/2} with zeta = exp(2 pi i / 6).
EisensteinSeries theta3_shifted(int k, std::int64_t prec);

/// Theta series of A_n (n in {1, 2, 5}) from Jacobi theta functions, grid 1.
IntSeries theta_A(int n, std::int64_t prec);
/// Theta series of D_n (n >= 2), grid 1.
IntSeries theta_D(int n, std::int64_t prec);
/// sum over v in L of q^{norm(v)/2}; grid 1 for even L, 2 otherwise.
IntSeries theta_by_enumeration(const GramLattice& l, std::int64_t prec);

/// Recognized names: "A<n>" and "D<n>" have closed forms; everything
/// standard_lattice accepts can be enumerated.
bool has_closed_form(const std::string& lattice);
IntSeries theta_closed_form(const std::string& lattice, std::int64_t prec);

// Plain-text coefficient cache.

class SeriesCache {
 public:
  SeriesCache() = default;
  /// Reads the file if it exists; throws on format or checksum errors.
  static SeriesCache load(const std::string& path);
  void save(const std::string& path) const;

  const IntSeries* find(const std::string& name, std::int64_t grid, std::int64_t precision) const;
  void put(const std::string& name, const IntSeries& s);
  std::size_t size() const { return entries_.size(); }

 private:
  struct Entry {
    std::string name;
    IntSeries series;
  };
  std::vector<Entry> entries_;
};

}  // namespace orthomod
