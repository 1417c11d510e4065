#include <doctest.h>

#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

#include "oracles.hpp"
#include "orthomod/siegel.hpp"

using namespace orthomod;

TEST_CASE("Zagier discriminants and b_n") {
  const auto z = zagier_discriminant(-12);
  CHECK(z.D == -3);
  CHECK(z.f == 2);
  CHECK(zagier_discriminant(9).D == 1);
  CHECK_THROWS_AS(zagier_discriminant(2), InvalidArgument);
  for (std::int64_t delta : {-20, -15, -4, -3, 1, 5, 8, 12, 24})
    for (std::int64_t n = 1; n <= 40; ++n) CHECK(b_n(delta, n) == oracle::b_n(delta, n));
}

TEST_CASE("sieved L-series matches a direct Dirichlet sum") {
  for (std::int64_t delta : {-24, -3, 5, 40}) {
    const std::int64_t terms = 3000;
    const auto lib = zagier_L_numeric(3.0, delta, terms);
    double direct = 0;
    for (std::int64_t n = 1; n <= terms; ++n) direct += static_cast<double>(oracle::b_n(delta, n)) / std::pow(double(n), 3.0);
    direct *= boost::math::zeta(6.0) / boost::math::zeta(3.0);
    CHECK(std::abs(lib.value - direct) < 1e-9);
    CHECK(lib.error_bound > 0);
  }
}

TEST_CASE("Cohen numbers at known L-values") {
  // zeta_{Q(sqrt 5)}(-1) = 1/30 and zeta_{Q(sqrt 2)}(-1) = 1/12.
  CHECK(cohen_H(2, 5) == Rational(-2, 5));
  CHECK(cohen_H(2, 8) == Rational(-1));
  CHECK(cohen_H(2, -3) == 0);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(generalized_bernoulli(2, 5) == Rational(4, 5));
}

TEST_CASE("Cohen numbers agree with the numerical L-value route") {
  // Functional equation for Delta > 0: L(2, Delta) = -2 pi^2 Delta^{-3/2} L(-1, Delta).
  for (std::int64_t delta : {5, 8, 12, 13, 20, 21, 24, 45, 60}) {
    const auto L = zagier_L2(delta, 100000);
    const double predicted = -2.0 * M_PI * M_PI * static_cast<double>(cohen_H(2, delta)) / std::pow(double(delta), 1.5);
    CHECK(std::abs(L.value - predicted) <= L.error_bound + 1e-12);
  }
}

TEST_CASE("worked forms") {
  CHECK(form_info(OddForm::S5).detA == 32);
  CHECK(form_info(OddForm::A1D4).detA == 8);
  CHECK(form_info(OddForm::A5).detA == 6);
  CHECK(parse_form("A1D4") == OddForm::A1D4);
  CHECK_THROWS_AS(parse_form("E6"), InvalidArgument);
  const auto dec = decompose_t(2 * 2 * 3 * 5 * 5 * 7, 6);
  CHECK(dec.tA == 12);
  CHECK(dec.t1 == 7);
  CHECK(dec.t2 == 5);
}

TEST_CASE("Siegel's formula equals the ambient-coordinate count") {
  const std::int64_t tmax = 20;
  const auto a5 = oracle::counts_A(5, 2 * tmax);
  const auto a1d4 = oracle::counts_A1D4(2 * tmax);
  std::vector<std::int64_t> s5(static_cast<std::size_t>(tmax + 1), 0);
  oracle::box(5, oracle::isqrt(tmax), tmax, [](std::int64_t) { return true; },
              [&](const std::vector<std::int64_t>&, std::int64_t sq) { ++s5[static_cast<std::size_t>(sq)]; });
  for (std::int64_t t = 1; t <= tmax; ++t) {
    CHECK(siegel_r(OddForm::S5, t).r == s5[static_cast<std::size_t>(t)]);
    CHECK(siegel_r(OddForm::A1D4, t).r == a1d4[static_cast<std::size_t>(2 * t)]);
    CHECK(siegel_r(OddForm::A5, t).r == a5[static_cast<std::size_t>(2 * t)]);
  }
}

TEST_CASE("local splittings give the same counts as the global Gram matrix") {
  struct Case {
    OddForm form;
    std::int64_t p;
    int max_a;
  };
  for (const Case c : {Case{OddForm::S5, 2, 4}, Case{OddForm::A1D4, 2, 4}, Case{OddForm::A5, 2, 4},
                       Case{OddForm::A5, 3, 2}, Case{OddForm::S5, 3, 2}, Case{OddForm::A1D4, 5, 1}}) {
    const LocalForm lf = local_form(c.form, c.p);
    std::int64_t q = 1;
    for (int a = 1; a <= c.max_a; ++a) {
      q *= c.p;
      const auto dist = oracle::density_counts(form_info(c.form).A, q);
      const Rational scale = rational_pow(Rational(c.p), -a * 4);
      for (std::int64_t t = 1; t <= 2 * q; ++t)
        CHECK(local_density_oracle(c.p, a, lf, t) == Rational(dist[static_cast<std::size_t>(t % q)]) * scale);
    }
  }
}

TEST_CASE("regular local densities from brute force") {
  for (OddForm form : {OddForm::S5, OddForm::A1D4, OddForm::A5}) {
    const auto& info = form_info(form);
    for (std::int64_t p : {5, 7}) {
      const std::int64_t q = p * p;
      const auto dist = oracle::density_counts(info.A, q);
      for (std::int64_t t = 1; t <= 40; ++t) {
        if (t % q == 0) continue;  // level p^2 only stabilises for ord_p(t) <= 1
        const Rational brute = Rational(dist[static_cast<std::size_t>(t % q)]) * rational_pow(Rational(p), -8);
        CHECK(alpha_regular(p, t, info.m, info.detA) == brute);
      }
    }
  }
}

TEST_CASE("closed-form densities at small t") {
  for (std::int64_t t = 1; t <= 24; ++t) {
    CHECK(alpha_closed(OddForm::S5, 2, t) == stabilized_density(2, local_form(OddForm::S5, 2), t).value);
    CHECK(alpha_closed(OddForm::A5, 3, t) == stabilized_density(3, local_form(OddForm::A5, 3), t).value);
  }
  CHECK_THROWS_AS(alpha_closed(OddForm::A1D4, 3, 5), InvalidArgument);
}

TEST_CASE("alpha_infinity is exact") {
  const ExactRadical a = alpha_infinity(1, 5, 32);
  const double expected = std::pow(2 * M_PI, 2.5) / std::tgamma(2.5) / std::sqrt(32.0);
  CHECK(a.value() == doctest::Approx(expected).epsilon(1e-12));
  for (std::int64_t t = 1; t <= 30; ++t) {
    const double e = std::pow(2 * M_PI, 2.5) / std::tgamma(2.5) * std::pow(double(t), 1.5) / std::sqrt(6.0);
    CHECK(alpha_infinity(t, 5, 6).value() == doctest::Approx(e).epsilon(1e-12));
  }
}

TEST_CASE("D6 counts from divisor sums") {
  const auto d6 = oracle::counts_D(6, 24);
  for (std::int64_t m = 1; m <= 12; ++m) CHECK(nd6(m) == d6[static_cast<std::size_t>(2 * m)]);
}
