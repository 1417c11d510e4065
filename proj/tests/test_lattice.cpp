#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "orthomod/lattice.hpp"

using namespace orthomod;

namespace {

IntMatrix mat2(std::int64_t a, std::int64_t b, std::int64_t c) {
  IntMatrix g(2, 2);
  g << a, b, b, c;
  return g;
}

}  // namespace

TEST_CASE("root lattice determinants") {
  for (int n = 1; n <= 8; ++n) CHECK(lattice_A(n).det() == n + 1);
  for (int n = 2; n <= 8; ++n) CHECK(lattice_D(n).det() == 4);
  CHECK(lattice_E7().det() == 2);
  CHECK(lattice_E8().det() == 1);
  CHECK(lattice_E8().is_even());
  CHECK(lattice_E7().is_positive_definite());
}

TEST_CASE("Gram matrix validation") {
  CHECK_THROWS_AS(GramLattice{IntMatrix::Zero(2, 2)}, InvalidArgument);
  IntMatrix asym(2, 2);
  asym << 2, 1, 0, 2;
  CHECK_THROWS_AS(GramLattice{asym}, InvalidArgument);
  CHECK_THROWS_AS(standard_lattice("F4"), InvalidArgument);
  CHECK_THROWS_AS(standard_lattice("A0"), InvalidArgument);
}

TEST_CASE("standard lattice names") {
  const GramLattice l = standard_lattice("2E8(-1)+3U+<-6>");
  CHECK(l.rank() == 23);
  CHECK(abs(l.det()) == 6);
  CHECK(l.signature() == Signature::Indefinite);
  CHECK(standard_lattice("A1D4").gram() == standard_lattice("A1+D4").gram());
  CHECK(lattice_L2t(3).rank() == 23);
}

TEST_CASE("norm counts agree with ambient-coordinate enumeration") {
  const std::int64_t max_norm = 12;
  auto check = [&](const GramLattice& l, const std::vector<std::int64_t>& expected) {
    const auto got = norm_counts(l, max_norm);
    for (std::int64_t k = 0; k <= max_norm; ++k) CHECK(got[static_cast<std::size_t>(k)] == expected[static_cast<std::size_t>(k)]);
  };
  check(lattice_A(5), oracle::counts_A(5, max_norm));
  check(lattice_A(2), oracle::counts_A(2, max_norm));
  check(lattice_D(6), oracle::counts_D(6, max_norm));
  check(lattice_D(4), oracle::counts_D(4, max_norm));
  check(standard_lattice("A1+D4"), oracle::counts_A1D4(max_norm));
  check(lattice_E7(), oracle::counts_E7(max_norm));
}

TEST_CASE("root counts") {
  CHECK(roots(lattice_E8()).size() == 240);
  CHECK(roots(lattice_E7()).size() == 126);
  CHECK(roots(lattice_D(6)).size() == 60);
  CHECK(roots(lattice_A(5)).size() == 30);
  CHECK(rep_count(lattice_E8(), 4) == 2160);
}

TEST_CASE("shells are closed under negation and sorted") {
  for (const auto& l : {lattice_E7(), lattice_A(5), standard_lattice("A1+D4")}) {
    const auto shell = enumerate_norm(l, 8);
    std::vector<std::vector<std::int64_t>> keys;
    for (const auto& v : shell) {
      CHECK(norm(v) == 8);
      keys.emplace_back(v.coords().data(), v.coords().data() + v.coords().size());
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
    for (const auto& v : shell) {
      const auto neg = -v;
      std::vector<std::int64_t> k(neg.coords().data(), neg.coords().data() + neg.coords().size());
      CHECK(std::binary_search(keys.begin(), keys.end(), k));
    }
  }
}

TEST_CASE("reflections preserve norm and divisor in L_2t") {
  const GramLattice l = lattice_L2t(3);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coord(-3, 3);
  // Reflection vectors: a root of the first E8(-1) block and e1 + e2 in the first U.
  IntVector r1 = IntVector::Zero(23), r2 = IntVector::Zero(23);
  r1(6) = 1;
  r2(0) = 1;
  r2(1) = 1;
  const LatticeVector s1(l, r1), s2(l, r2);
  CHECK(norm(s1) == -2);
  CHECK(norm(s2) == 2);
  for (int trial = 0; trial < 200; ++trial) {
    IntVector x(23);
    for (Index i = 0; i < 23; ++i) x(i) = coord(rng);
    if (x.isZero()) continue;
    const LatticeVector v(l, x);
    for (const auto& s : {s1, s2}) {
      const LatticeVector w = reflection(s, v);
      CHECK(norm(w) == norm(v));
      CHECK(divisor(w) == divisor(v));
      CHECK(reflection(s, w) == v);
    }
  }
}

TEST_CASE("divisor of the distinguished vector of L_2t") {
  const GramLattice l = lattice_L2t(5);
  IntVector x = IntVector::Zero(23);
  x(22) = 1;
  CHECK(divisor(LatticeVector(l, x)) == 10);
}

TEST_CASE("discriminant groups") {
  for (std::int64_t t : {1, 2, 3, 6, 10}) {
    const auto dg = discriminant_group(lattice_L2t(t));
    CHECK(dg.order() == 2 * t);
    if (t > 1) CHECK(dg.invariant_factors == std::vector<std::int64_t>{2 * t});
  }
  const auto a5 = discriminant_group(lattice_A(5));
  REQUIRE(a5.invariant_factors == std::vector<std::int64_t>{6});
  CHECK(a5.q[0] == Rational(5, 6));
  const auto d4 = discriminant_group(lattice_D(4));
  CHECK(d4.invariant_factors == std::vector<std::int64_t>{2, 2});
  CHECK(discriminant_group(lattice_E8()).order() == 1);
}

TEST_CASE("orthogonal complements of roots") {
  const GramLattice e7 = lattice_E7();
  const auto rs = roots(e7);
  const GramLattice c = orthogonal_complement(e7, {rs.front()});
  CHECK(c.rank() == 6);
  CHECK(is_isometric(c, lattice_D(6)));
  const GramLattice d6 = lattice_D(6);
  CHECK(is_isometric(orthogonal_complement(d6, {roots(d6).front()}), standard_lattice("A1+D4")));
  CHECK_THROWS_AS(orthogonal_complement(e7, {rs[0], rs[0]}), InvalidArgument);
}

TEST_CASE("isometry testing") {
  CHECK(is_isometric(GramLattice(mat2(2, 1, 8)), GramLattice(mat2(2, -1, 8))));
  CHECK(is_isometric(GramLattice(mat2(2, 1, 8)), GramLattice(mat2(8, 1, 2))));
  CHECK_FALSE(is_isometric(GramLattice(mat2(2, 1, 8)), GramLattice(mat2(4, 1, 4))));
  CHECK_FALSE(is_isometric(lattice_A(5), lattice_D(5)));
  CHECK(is_isometric(lattice_D(3), lattice_A(3)));
}

TEST_CASE("reflection orbits of small root sublattices") {
  const GramLattice e7 = lattice_E7();
  CHECK(reflection_orbits(e7, sublattices_kA1(e7, 1)).orbit_count == 1);
  const auto a2 = reflection_orbits(e7, sublattices_A2(e7));
  CHECK(a2.orbit_count == 1);
  CHECK(a2.distinct_objects == 336);
  // The three frames {e_i +- e_j, e_k +- e_l} of D4 are permuted by coordinate permutations.
  const GramLattice d4 = lattice_D(4);
  const auto frames = reflection_orbits(d4, sublattices_kA1(d4, 4));
  CHECK(frames.distinct_objects == 3);
  CHECK(frames.orbit_count == 1);
  // 3A1 in E7 splits into two classes.
  CHECK(reflection_orbits(e7, sublattices_kA1(e7, 3)).orbit_count == 2);
}
