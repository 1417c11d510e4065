#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "oracles.hpp"
#include "orthomod/series.hpp"

using namespace orthomod;

TEST_CASE("Eisenstein integers") {
  const Eisenstein z = Eisenstein::zeta_power(1);
  Eisenstein p = 1;
  for (int k = 0; k < 6; ++k) {
    CHECK(p == Eisenstein::zeta_power(k));
    CHECK(p.norm() == 1);
    p *= z;
  }
  CHECK(p == Eisenstein(1));
  CHECK(z * z.conj() == Eisenstein(1));
  const Eisenstein a(3, -2), b(-1, 5);
  CHECK((a * b).norm() == a.norm() * b.norm());
}

TEST_CASE("series ring laws") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> c(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    IntSeries x(2, 12), y(1, 12), z(2, 12);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = c(rng);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = c(rng);
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = c(rng);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("series inverse and grids") {
  const IntSeries t = theta3(10);
  CHECK(t.grid() == 2);
  CHECK(t[0] == 1);
  CHECK(t[1] == 2);  // q^{1/2}
  CHECK(t[2] == 0);
  CHECK(t[4] == 2);  // q^{4/2}
  CHECK(t[9] == 2);
  const IntSeries one = t * t.invert();
  CHECK(one[0] == 1);
  for (std::size_t k = 1; k < one.size(); ++k) CHECK(one[k] == 0);
  CHECK_THROWS_AS(t.coarsen(1), CrossCheckFailure);
  CHECK((t * t.shift_tau_by_one()).at(1, 2) == 0);
  CHECK(t.scale_tau(4).at(2) == 2);
  IntSeries two(1, 4);
  two[0] = 2;
  CHECK_THROWS_AS(two.invert(), InvalidArgument);
}

TEST_CASE("closed-form theta series match ambient enumeration") {
  const std::int64_t prec = 9;
  auto check = [&](const IntSeries& s, const std::vector<std::int64_t>& counts) {
    REQUIRE(s.grid() == 1);
    for (std::int64_t m = 0; m < prec; ++m) CHECK(s[static_cast<std::size_t>(m)] == counts[static_cast<std::size_t>(2 * m)]);
  };
  check(theta_A(1, prec), oracle::counts_A(1, 2 * prec));
  check(theta_A(2, prec), oracle::counts_A(2, 2 * prec));
  check(theta_A(5, prec), oracle::counts_A(5, 2 * prec));
  check(theta_D(4, prec), oracle::counts_D(4, 2 * prec));
  check(theta_D(6, prec), oracle::counts_D(6, 2 * prec));
  CHECK_THROWS_AS(theta_A(3, prec), InvalidArgument);
}

TEST_CASE("theta by enumeration") {
  const IntSeries d6 = theta_by_enumeration(lattice_D(6), 3);
  CHECK(d6.coefficients() == std::vector<std::int64_t>{1, 60, 252});
  const IntSeries z = theta_by_enumeration(standard_lattice("<1>"), 3);
  CHECK(z.grid() == 2);
  CHECK(z == theta3(3));
  CHECK(has_closed_form("D6"));
  CHECK_FALSE(has_closed_form("E7"));
  CHECK(theta_closed_form("A5", 20) == theta_by_enumeration(lattice_A(5), 20));
}

TEST_CASE("coefficient cache round trip and integrity") {
  const std::string path = "orthomod_test_cache.txt";
  std::remove(path.c_str());
  CHECK(SeriesCache::load(path).size() == 0);
  SeriesCache cache;
  cache.put("enum:D6", theta_D(6, 10));
  cache.put("enum:<1>", theta3(5));
  cache.save(path);
  const SeriesCache back = SeriesCache::load(path);
  REQUIRE(back.find("enum:D6", 1, 10) != nullptr);
  CHECK(*back.find("enum:D6", 1, 10) == theta_D(6, 10));
  CHECK(*back.find("enum:<1>", 2, 5) == theta3(5));
  CHECK(back.find("enum:D6", 1, 11) == nullptr);

  // Tamper with one coefficient.
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  const auto pos = text.find("\n60\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 4, "\n61\n");
  std::ofstream(path) << text;
  CHECK_THROWS_AS(SeriesCache::load(path), InvalidArgument);
  std::remove(path.c_str());
}
