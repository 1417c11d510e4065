#include <doctest.h>

#include "orthomod/kodaira.hpp"

using namespace orthomod;

namespace {

IntVector vec(std::initializer_list<std::int64_t> xs) {
  IntVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("orthogonal root counts") {
  for (const auto& r : roots(lattice_E7())) CHECK(orthogonal_root_count(r.coords()) == 60);
  CHECK(orthogonal_root_count(vec({2, 1, 2, -2, 0, 0, 1})) == 14);
  CHECK(orthogonal_root_count(vec({-1, 2, 3, 1, 2, 1, 3})) == 16);
  CHECK_THROWS_AS(orthogonal_root_count(IntVector::Zero(7)), InvalidArgument);
  CHECK_THROWS_AS(orthogonal_root_count(IntVector::Zero(6)), InvalidArgument);
}

TEST_CASE("root counts are invariant under reflections and even") {
  const GramLattice e7 = lattice_E7();
  const auto rs = roots(e7);
  for (const auto& v : enumerate_norm(e7, 10)) {
    const auto n = orthogonal_root_count(v.coords());
    CHECK(n % 2 == 0);
    CHECK(n < 126);
    for (std::size_t k = 0; k < rs.size(); k += 17) CHECK(orthogonal_root_count(reflection(rs[k], v).coords()) == n);
  }
}

TEST_CASE("weights") {
  CHECK(weight(14) == 19);
  CHECK(weight(16) == 20);
  CHECK(weight(2) == 13);
  CHECK_THROWS_AS(weight(15), InvalidArgument);
  CHECK_THROWS_AS(weight(0), InvalidArgument);
}

TEST_CASE("search") {
  const auto s12 = search(12);
  REQUIRE(s12.min_n_l);
  CHECK(*s12.min_n_l == 14);
  CHECK(s12.within_cap());
  CHECK(norm(LatticeVector(lattice_E7(), *s12.witness)) == 24);
  CHECK(orthogonal_root_count(*s12.witness) == 14);
  CHECK(s12.histogram.at(14) > 0);
  std::int64_t total = 0;
  for (const auto& [n, c] : s12.histogram) total += c;
  CHECK(total == s12.shell_size);
  CHECK(rep_count(lattice_E7(), 24) == s12.shell_size);

  CHECK(*search(9).min_n_l == 16);
  const auto s1 = search(1);
  CHECK(s1.histogram.size() == 1);
  CHECK(s1.histogram.at(60) == 126);
}

TEST_CASE("inequalities") {
  CHECK(inequality_check(17, 5).holds());
  CHECK_FALSE(inequality_check(19, 5).holds());
  CHECK(inequality_check(12, 6).holds());
  const auto rows = inequality_scan(5, 30);
  CHECK(rows.size() == 30);
  for (const auto& r : rows) CHECK(r.slack == 5 * r.n_d6 - 30 * r.n_a1d4 - 16 * r.n_a5);
  CHECK_THROWS_AS(inequality_scan(4, 10), InvalidArgument);
}

TEST_CASE("verdicts") {
  CHECK(verdict(1).classification == Classification::Inconclusive);
  const auto v9 = verdict(9);
  CHECK(v9.classification == Classification::NonNegativeKodaira);
  CHECK(v9.weight == 20);
  CHECK(orthogonal_root_count(*v9.witness) == 16);
  CHECK(verdict(11).classification == Classification::NonNegativeKodaira);
  const auto v12 = verdict(12);
  CHECK(v12.classification == Classification::GeneralType);
  CHECK(*v12.weight <= 19);
}

TEST_CASE("printed table rows") {
  const auto rows = table1();
  CHECK(rows.size() == 9);
  for (const auto& r : rows) {
    CHECK(r.norm == 2 * r.d);
    CHECK(r.n_l == 2 * r.pairs);
  }
}
