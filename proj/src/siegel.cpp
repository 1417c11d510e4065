#include "orthomod/siegel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <boost/math/special_functions/zeta.hpp>

namespace orthomod {

namespace {

Rational rpow(std::int64_t p, int e) { return rational_pow(Rational(p), e); }

BigInt exact_sqrt(const BigInt& n) {
  if (n < 0) throw CrossCheckFailure("exact_sqrt: negative");
  BigInt r = boost::multiprecision::sqrt(n);
  if (r * r != n) throw CrossCheckFailure("exact_sqrt: not a perfect square");
  return r;
}

Rational exact_sqrt(const Rational& q) {
  return Rational(exact_sqrt(boost::multiprecision::numerator(q)), exact_sqrt(boost::multiprecision::denominator(q)));
}

long double to_ld(const Rational& q) { return q.convert_to<long double>(); }

// Largest s with s^2 | n, for n >= 1.
std::int64_t square_part_root(std::int64_t n) {
  std::int64_t s = 1;
  for (auto [p, e] : factorize(n))
    for (int k = 0; k < e / 2; ++k) s *= p;
  return s;
}

// sum_{a | f} mu(a) chi_D(a) a^{-s} sigma_{1-2s}(f/a) for integer s.
Rational conductor_sum(std::int64_t D, std::int64_t f, int s) {
  Rational total = 0;
  for (auto a : divisors(f)) {
    const int mu = moebius(a);
    const int chi = kronecker(D, a);
    if (mu == 0 || chi == 0) continue;
    Rational sigma = 0;
    for (auto d : divisors(f / a)) sigma += rpow(d, 1 - 2 * s);
    total += Rational(mu * chi) * rpow(a, -s) * sigma;
  }
  return total;
}

}  // namespace

ZagierDiscriminant zagier_discriminant(std::int64_t delta) {
  if (delta == 0 || (mod(delta, 4) != 0 && mod(delta, 4) != 1))
    throw InvalidArgument("discriminant must be nonzero and congruent to 0 or 1 mod 4");
  const std::int64_t D = fundamental_discriminant(delta);
  const std::int64_t q = delta / D;
  const std::int64_t f = isqrt(q);
  if (delta % D != 0 || f * f != q) throw CrossCheckFailure("zagier_discriminant: delta / D is not a square");
  return {delta, D, f};
}

std::int64_t b_n(std::int64_t delta, std::int64_t n) {
  zagier_discriminant(delta);
  if (n < 1) throw InvalidArgument("b_n: n must be >= 1");
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < 2 * n; ++x)
    if (mod(static_cast<std::int64_t>((static_cast<__int128>(x) * x - delta) % (4 * n)), 4 * n) == 0) ++count;
  return count;
}

NumericValue zagier_L_numeric(double s, std::int64_t delta, std::int64_t terms) {
  if (!(s > 1.5)) throw InvalidArgument("zagier_L_numeric: needs s > 3/2");
  if (terms < 1) throw InvalidArgument("zagier_L_numeric: needs terms >= 1");
  const auto zd = zagier_discriminant(delta);

  // b_n = N(4n)/2 with N(m) = #{x mod m : x^2 = delta mod m}, multiplicative in m.
  std::map<std::int64_t, std::int64_t> prime_power_count;
  auto count_pk = [&](std::int64_t p, std::int64_t pk) -> std::int64_t {
    if (p != 2 && delta % p != 0) return 1 + kronecker(delta, p);
    auto it = prime_power_count.find(pk);
    if (it != prime_power_count.end()) return it->second;
    std::int64_t c = 0;
    for (std::int64_t x = 0; x < pk; ++x)
      if (mod(static_cast<std::int64_t>((static_cast<__int128>(x) * x - delta) % pk), pk) == 0) ++c;
    return prime_power_count[pk] = c;
  };
  std::vector<std::int64_t> spf(static_cast<std::size_t>(terms) + 1, 0);
  for (std::int64_t i = 2; i <= terms; ++i)
    if (spf[static_cast<std::size_t>(i)] == 0)
      for (std::int64_t j = i; j <= terms; j += i)
        if (spf[static_cast<std::size_t>(j)] == 0) spf[static_cast<std::size_t>(j)] = i;

  long double sum = 0;
  for (std::int64_t n = 1; n <= terms; ++n) {
    std::int64_t rest = n, twos = 4, count = 1;
    while (rest % 2 == 0) {
      rest /= 2;
      twos *= 2;
    }
    count *= count_pk(2, twos);
    while (rest > 1) {
      const std::int64_t p = spf[static_cast<std::size_t>(rest)];
      std::int64_t pk = 1;
      while (rest % p == 0) {
        rest /= p;
        pk *= p;
      }
      count *= count_pk(p, pk);
      if (count == 0) break;
    }
    if (count != 0) sum += static_cast<long double>(count / 2) * std::pow(static_cast<long double>(n), -s);
  }
  const long double ratio = boost::math::zeta(2.0L * s) / boost::math::zeta(static_cast<long double>(s));
  // b_n <= 2 d(n) sqrt|delta| and d(n) <= 2 sqrt(n).
  const long double tail = 2.0L * std::sqrt(static_cast<long double>(std::llabs(zd.delta))) * 2.0L *
                           std::pow(static_cast<long double>(terms), 1.5L - s) / (s - 1.5L);
  const long double rounding = 1e-15L * terms * sum;
  return {static_cast<double>(ratio * sum), static_cast<double>(ratio * (tail + rounding))};
}

NumericValue zagier_L2(std::int64_t delta, std::int64_t terms) {
  const auto zd = zagier_discriminant(delta);
  long double l2;
  long double err;
  if (zd.D == 1) {
    l2 = std::numbers::pi_v<long double> * std::numbers::pi_v<long double> / 6;
    err = 4 * std::numeric_limits<long double>::epsilon();
  } else {
    const std::int64_t f = std::llabs(zd.D);
    std::vector<int> chi(static_cast<std::size_t>(f));
    for (std::int64_t a = 0; a < f; ++a) chi[static_cast<std::size_t>(a)] = kronecker(zd.D, a);
    l2 = 0;
    for (std::int64_t n = terms; n >= 1; --n) {
      const int c = chi[static_cast<std::size_t>(n % f)];
      if (c != 0) l2 += c / (static_cast<long double>(n) * n);
    }
    // Partial sums of chi are bounded by f/2; summation by parts.
    err = static_cast<long double>(f) / ((terms + 1.0L) * (terms + 1.0L)) +
          terms * 4 * std::numeric_limits<long double>::epsilon();
  }
  const long double factor = to_ld(conductor_sum(zd.D, zd.f, 2));
  return {static_cast<double>(l2 * factor), static_cast<double>(err * std::fabs(factor))};
}

Rational bernoulli_number(int k) {
  if (k < 0) throw InvalidArgument("bernoulli_number: negative index");
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int n = 1; n <= k; ++n) {
    // sum_{j=0}^{n} C(n+1, j) B_j = 0
    Rational s = 0;
    BigInt binom = 1;
    for (int j = 0; j < n; ++j) {
      s += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(n)] = -s / Rational(n + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

Rational bernoulli_polynomial(int k, const Rational& x) {
  Rational s = 0;
  BigInt binom = 1;
  for (int j = 0; j <= k; ++j) {
    s += Rational(binom) * bernoulli_number(j) * rational_pow(x, k - j);
    binom = binom * (k - j) / (j + 1);
  }
  return s;
}

Rational generalized_bernoulli(int k, std::int64_t D) {
  if (!is_fundamental_discriminant(D)) throw InvalidArgument("generalized_bernoulli: D must be fundamental");
  const std::int64_t f = std::llabs(D);
  Rational s = 0;
  for (std::int64_t a = 1; a <= f; ++a) {
    const int chi = kronecker(D, a);
    if (chi != 0) s += Rational(chi) * bernoulli_polynomial(k, Rational(a, f));
  }
  return rpow(f, k - 1) * s;
}

Rational cohen_H(int m1, std::int64_t delta) {
  if (m1 < 1) throw InvalidArgument("cohen_H: m1 must be >= 1");
  const auto zd = zagier_discriminant(delta);
  const Rational l_chi = -generalized_bernoulli(m1, zd.D) / Rational(m1);
  return l_chi * conductor_sum(zd.D, zd.f, 1 - m1);
}

const OddFormInfo& form_info(OddForm form) {
  static const OddFormInfo s5{OddForm::S5, "S5", 5, 32, {2}, 2 * IntMatrix::Identity(5, 5)};
  static const OddFormInfo ad{OddForm::A1D4, "A1D4", 5, 8, {2}, standard_lattice("A1+D4").gram()};
  static const OddFormInfo a5{OddForm::A5, "A5", 5, 6, {2, 3}, lattice_A(5).gram()};
  switch (form) {
    case OddForm::S5: return s5;
    case OddForm::A1D4: return ad;
    default: return a5;
  }
}

OddForm parse_form(const std::string& name) {
  if (name == "S5") return OddForm::S5;
  if (name == "A1D4" || name == "A1+D4") return OddForm::A1D4;
  if (name == "A5") return OddForm::A5;
  throw InvalidArgument("unknown form \"" + name + "\" (expected S5, A1D4 or A5)");
}

GramLattice form_lattice(OddForm form) { return GramLattice(form_info(form).A, form_info(form).name); }

TDecomposition decompose_t(std::int64_t t, std::int64_t detA) {
  if (t < 1) throw InvalidArgument("decompose_t: t must be >= 1");
  TDecomposition out{1, 1, 1};
  for (auto [p, e] : factorize(t)) {
    std::int64_t pe = 1;
    for (int k = 0; k < e; ++k) pe *= p;
    if (detA % p == 0) {
      out.tA *= pe;
      continue;
    }
    for (int k = 0; k < e / 2; ++k) out.t2 *= p;
    if (e % 2 == 1) out.t1 *= p;
  }
  return out;
}

ZagierDiscriminant discriminant_of(OddForm form, std::int64_t t) {
  const auto& info = form_info(form);
  const auto dec = decompose_t(t, info.detA);
  const std::int64_t sign = ((info.m - 1) / 2) % 2 == 0 ? 1 : -1;
  const std::int64_t D = fundamental_discriminant(checked_mul(sign * 2 * t, info.detA));
  return zagier_discriminant(checked_mul(D, dec.t2 * dec.t2));
}

double ExactRadical::value() const {
  return static_cast<double>(to_ld(coefficient) * std::pow(std::numbers::pi_v<long double>, pi_power) *
                             std::sqrt(to_ld(radicand)));
}

ExactRadical alpha_infinity(std::int64_t t, int m, std::int64_t detA) {
  if (t < 1) throw InvalidArgument("alpha_infinity: t must be >= 1");
  if (m < 3 || m % 2 == 0) throw InvalidArgument("alpha_infinity: m must be odd and >= 3");
  if (detA < 1) throw InvalidArgument("alpha_infinity: |A| must be positive");
  // Gamma(m/2) = (m-2)!! sqrt(pi) / 2^{(m-1)/2}, so
  // alpha = 2^{m-1} / (m-2)!! * t^{(m-3)/2} * pi^{(m-1)/2} * sqrt(2t/|A|).
  BigInt dfact = 1;
  for (int k = m - 2; k > 1; k -= 2) dfact *= k;
  ExactRadical out;
  out.coefficient = Rational(BigInt(1) << (m - 1), dfact) * rational_pow(Rational(t), (m - 3) / 2);
  out.pi_power = (m - 1) / 2;
  // Move square factors of 2t/|A| out of the root.
  const std::int64_t g = std::gcd(2 * t, detA);
  const std::int64_t num = 2 * t / g, den = detA / g;
  const std::int64_t sn = square_part_root(num), sd = square_part_root(den);
  out.coefficient *= Rational(sn, sd);
  out.radicand = Rational(num / (sn * sn), den / (sd * sd));
  return out;
}

int regular_epsilon(std::int64_t p, std::int64_t t, int m, std::int64_t detA) {
  std::int64_t tbar = t;
  while (tbar % p == 0) tbar /= p;
  const std::int64_t sign = ((m - 1) / 2) % 2 == 0 ? 1 : -1;
  return kronecker(checked_mul(sign * detA, 2 * tbar), p);
}

Rational alpha_regular(std::int64_t p, std::int64_t t, int m, std::int64_t detA) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("alpha_regular: p must be an odd prime");
  if (detA % p == 0) throw InvalidArgument("alpha_regular: p divides |A|");
  if (t < 1) throw InvalidArgument("alpha_regular: t must be >= 1");
  const int l = ord_p(t, p);
  const Rational x = rpow(p, 2 - m);
  const Rational lead = 1 - rpow(p, 1 - m);
  Rational bracket = 0;
  if (l % 2 == 1) {
    for (int j = 0; j <= (l - 1) / 2; ++j) bracket += rational_pow(x, j);
  } else {
    for (int j = 0; j < l / 2; ++j) bracket += rational_pow(x, j);
    const int eps = regular_epsilon(p, t, m, detA);
    bracket += rational_pow(x, l / 2) / (1 - Rational(eps) * rpow(p, (1 - m) / 2));
  }
  return lead * bracket;
}

DensityReport siegel_r(OddForm form, std::int64_t t) {
  const auto& info = form_info(form);
  if (info.m != 5) throw InvalidArgument("siegel_r: only rank 5 is implemented");
  DensityReport rep{};
  rep.form = form;
  rep.t = t;
  rep.decomposition = decompose_t(t, info.detA);
  rep.discriminant = discriminant_of(form, t);
  const std::int64_t D = rep.discriminant.D;

  Rational local = 1;
  for (auto p : info.primes) {
    const Rational a = alpha_closed(form, p, t);
    rep.alpha[p] = a;
    local *= (1 - Rational(kronecker(D, p)) * rpow(p, -2)) / (1 - rpow(p, -4)) * a;
  }
  rep.alpha_inf = alpha_infinity(t, info.m, info.detA);

  // Cohen-number route: r = sqrt((tA/DA)^3 2^7 / |A|) * (-120) H(2, Delta) * local.
  std::int64_t DA = 1;
  for (auto p : info.primes) {
    for (std::int64_t d = D; d % p == 0; d /= p) DA *= p;
  }
  const Rational pref2 = rational_pow(Rational(rep.decomposition.tA, DA), 3) * Rational(128, info.detA);
  rep.cohen_H = cohen_H(2, rep.discriminant.delta);
  rep.r_exact = exact_sqrt(pref2) * Rational(-120) * rep.cohen_H * local;
  if (boost::multiprecision::denominator(rep.r_exact) != 1)
    throw CrossCheckFailure("siegel_r: non-integral value " + to_string(rep.r_exact) + " for " + info.name +
                            ", t=" + std::to_string(t));
  rep.r = boost::multiprecision::numerator(rep.r_exact);

  // L-value route: r = alpha_inf * L(2, Delta) / zeta(4) * local.
  rep.L2 = zagier_L2(rep.discriminant.delta);
  const long double zeta4 = std::pow(std::numbers::pi_v<long double>, 4) / 90;
  const long double scale = rep.alpha_inf.value() / zeta4 * to_ld(local);
  const long double approx = scale * rep.L2.value;
  const long double err = std::fabs(scale) * rep.L2.error_bound + 1e-12L * std::fabs(approx) + 1e-12L;
  rep.r_numeric = {static_cast<double>(approx), static_cast<double>(err)};
  if (std::fabs(approx - to_ld(rep.r_exact)) > err)
    throw CrossCheckFailure("siegel_r: routes disagree for " + info.name + ", t=" + std::to_string(t));
  return rep;
}

BigInt sigma_chi4(std::int64_t m, int k) {
  BigInt s = 0;
  for (auto d : divisors(m)) s += kronecker(-4, d) * boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
  return s;
}

BigInt sigma_tilde_chi4(std::int64_t m, int k) {
  BigInt s = 0;
  for (auto d : divisors(m))
    s += kronecker(-4, m / d) * boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(k));
  return s;
}

BigInt nd6(std::int64_t m) {
  if (m < 1) throw InvalidArgument("nd6: m must be >= 1");
  return 64 * sigma_tilde_chi4(m, 2) - 4 * sigma_chi4(m, 2);
}

}  // namespace orthomod
