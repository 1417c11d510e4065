#include "orthomod/orbits.hpp"

#include <numeric>

#include "orthomod/arithmetic.hpp"
#include "orthomod/integer_matrix.hpp"

namespace orthomod {

namespace {

bool is_square_mod(std::int64_t r, std::int64_t n) {
  r = mod(r, n);
  for (std::int64_t x = 0; x < n; ++x)
    if (mod(x * x, n) == r) return true;
  return false;
}

std::int64_t pow2(int e) { return e >= 0 ? (std::int64_t{1} << e) : 0; }

std::int64_t rho(std::int64_t n) { return distinct_prime_count(n); }

void require_positive(std::int64_t t, std::int64_t d, std::int64_t f) {
  if (t < 1 || d < 1 || f < 1) throw InvalidArgument("t, d and f must be positive");
}

void require_w_one(const PolarisationQuery& q) {
  if (!q.admissible) throw InvalidArgument("f must divide gcd(2t, 2d)");
  if (q.w != 1)
    throw HypothesisViolated("stable index is only established for w = 1 (here w = " + std::to_string(q.w) + ")");
}

}  // namespace

PolarisationQuery make_query(std::int64_t t, std::int64_t d, std::int64_t f) {
  require_positive(t, d, f);
  PolarisationQuery q{t, d, f, false, 0, 0, 0, 0, 0, 0};
  if ((2 * t) % f != 0 || (2 * d) % f != 0) return q;
  q.admissible = true;
  q.g = std::gcd(2 * t / f, 2 * d / f);
  q.w = std::gcd(q.g, f);
  q.g1 = q.g / q.w;
  q.f1 = f / q.w;
  q.t1 = 2 * t / (f * q.g);
  q.d1 = 2 * d / (f * q.g);
  return q;
}

std::string to_string(OrbitCase c) {
  switch (c) {
    case OrbitCase::NotAdmissible: return "none";
    case OrbitCase::I: return "i";
    case OrbitCase::IIEvenF1: return "ii-even-f1";
    case OrbitCase::IIOddF1OddD1: return "ii-odd-f1-odd-d1";
    case OrbitCase::III: return "iii";
  }
  return "?";
}

OrbitReport orbit_count_formula(std::int64_t t, std::int64_t d, std::int64_t f) {
  OrbitReport rep;
  rep.query = make_query(t, d, f);
  const auto& q = rep.query;
  if (!q.admissible) return rep;

  // w = w_+ w_-, with w_+ the part of w at primes dividing f1.
  std::int64_t wp = 1;
  for (auto [p, e] : factorize(q.w))
    if (q.f1 % p == 0)
      for (int k = 0; k < e; ++k) wp *= p;
  const std::int64_t base = wp * euler_phi(q.w / wp);

  std::int64_t count = 0;
  if (q.g1 % 2 == 0) {
    rep.orbit_case = OrbitCase::I;
    if (std::gcd(q.d1, q.f1) == 1 && std::gcd(q.f1, q.t1) == 1 &&
        (q.f1 == 1 || is_square_mod(-q.d1 * inverse_mod(q.t1, q.f1), q.f1)))
      count = base * pow2(static_cast<int>(rho(q.f1)));
  } else if (q.f1 % 2 == 0 || q.d1 % 2 == 1) {
    rep.orbit_case = q.f1 % 2 == 0 ? OrbitCase::IIEvenF1 : OrbitCase::IIOddF1OddD1;
    const std::int64_t m = 2 * q.f1;
    if (std::gcd(q.d1, q.f1) == 1 && std::gcd(q.t1, m) == 1 && is_square_mod(-q.d1 * inverse_mod(q.t1, m), m))
      count = base * pow2(static_cast<int>(rho(q.f1 % 2 == 0 ? q.f1 / 2 : q.f1)));
  } else {
    rep.orbit_case = OrbitCase::III;
    if (std::gcd(q.d1, q.f1) == 1 && std::gcd(q.t1, 2 * q.f1) == 1 && q.w % 2 == 1 &&
        (q.f1 == 1 || is_square_mod(-q.d1 * inverse_mod(4 * q.t1, q.f1), q.f1)))
      count = base * pow2(static_cast<int>(rho(q.f1)));
  }
  rep.count = count;
  rep.exists = count > 0;
  if (rep.exists) {
    for (std::int64_t c = 0; c < f; ++c)
      if (std::gcd(c, f) == 1 && (d + c * c * t) % (f * f) == 0) {
        rep.witness_c = c;
        break;
      }
  }
  return rep;
}

std::int64_t orbit_count_oracle(std::int64_t t, std::int64_t d, std::int64_t f) {
  require_positive(t, d, f);
  if ((2 * t) % f != 0 || (2 * d) % f != 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t c = 0; c < f; ++c)
    if (std::gcd(c, f) == 1 && (d + checked_mul(c * c, t)) % (f * f) == 0) ++count;
  return count;
}

PerpGram perp_gram(std::int64_t t, std::int64_t d, std::int64_t f, std::int64_t c) {
  require_positive(t, d, f);
  if (std::gcd(c, f) != 1) throw InvalidArgument("perp_gram: gcd(c, f) must be 1");
  const std::int64_t num = checked_add(d, checked_mul(c * c, t));
  if (num % (f * f) != 0) throw InvalidArgument("perp_gram: f^2 must divide d + c^2 t");
  if ((2 * t * c) % f != 0) throw InvalidArgument("perp_gram: f must divide 2tc");
  PerpGram out;
  out.b = num / (f * f);
  const std::int64_t k = 2 * t * c / f;
  out.B.resize(2, 2);
  out.B << -2 * out.b, k, k, -2 * t;

  // U + <-2t> with basis e1, e2, l_t.
  IntMatrix g(3, 3);
  g << 0, 1, 0, 1, 0, 0, 0, 0, -2 * t;
  const GramLattice ambient(g);
  IntVector h(3);
  h << f, f * out.b, c;
  if (norm(LatticeVector(ambient, h)) != 2 * d) throw CrossCheckFailure("perp_gram: h_d does not have norm 2d");
  out.basis.resize(3, 2);
  out.basis << 1, 0, -out.b, k, 0, 1;
  if (IntMatrix(out.basis.transpose() * g * out.basis) != out.B)
    throw CrossCheckFailure("perp_gram: Gram matrix of the stated basis differs from B");
  const GramLattice kernel = orthogonal_complement(ambient, {LatticeVector(ambient, h)});
  out.det = to_int64(determinant(out.B));
  if (kernel.det() != out.det) throw CrossCheckFailure("perp_gram: stated basis does not span the complement");

  out.entry_gcd = std::gcd(std::gcd(2 * out.b, k), 2 * t);
  const auto q = make_query(t, d, f);
  out.predicted_gcd = (2 * out.b) % q.g1 == 0 ? q.g1 * std::gcd(2 * out.b / q.g1, q.w) : 0;
  return out;
}

std::int64_t stable_index_formula(std::int64_t t, std::int64_t d, std::int64_t f) {
  const auto q = make_query(t, d, f);
  require_w_one(q);
  if (f % 2 == 1) return pow2(static_cast<int>(rho(t / f)));
  const std::int64_t n = 2 * t / f;
  int delta = 0;
  if (n % 2 == 0 && n % 8 != 4) delta = n % 4 == 2 ? -1 : 1;
  return pow2(static_cast<int>(rho(n)) + delta);
}

std::int64_t stable_index_oracle(std::int64_t t, std::int64_t d, std::int64_t f) {
  const auto q = make_query(t, d, f);
  require_w_one(q);
  const std::int64_t n = 2 * t / f;
  const std::int64_t m = f % 2 == 1 ? 2 * n : n;
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < n; ++x)
    if (mod(x * x - 1, m) == 0) ++count;
  return count;
}

std::int64_t disc_auto_order(std::int64_t t) {
  if (t < 1) throw InvalidArgument("disc_auto_order: t must be >= 1");
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < 2 * t; ++x)
    if (mod(checked_mul(x, x) - 1, 4 * t) == 0) ++count;
  return count;
}

}  // namespace orthomod
