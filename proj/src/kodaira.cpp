#include "orthomod/kodaira.hpp"

#include <algorithm>

#include "orthomod/series.hpp"

namespace orthomod {

namespace {

// Positive roots of E7 in simple-root coordinates, and the E7 Gram matrix.
struct E7Data {
  GramLattice lattice = lattice_E7();
  std::vector<std::array<std::int64_t, 7>> positive_roots;

  E7Data() {
    for (const auto& r : roots(lattice)) {
      const auto& c = r.coords();
      // Roots are all-nonnegative or all-nonpositive in simple-root coordinates.
      if (c.minCoeff() < 0) continue;
      std::array<std::int64_t, 7> a{};
      for (int i = 0; i < 7; ++i) a[static_cast<std::size_t>(i)] = c(i);
      positive_roots.push_back(a);
    }
    if (positive_roots.size() != 63) throw CrossCheckFailure("E7 should have 63 positive roots");
  }
};

const E7Data& e7() {
  static const E7Data data;
  return data;
}

std::int64_t count_orthogonal(const E7Data& e, const std::array<std::int64_t, 7>& gl) {
  std::int64_t n = 0;
  for (const auto& r : e.positive_roots) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < 7; ++i) s += r[i] * gl[i];
    n += s == 0;
  }
  return 2 * n;
}

std::array<std::int64_t, 7> gram_times(const E7Data& e, const IntVector& l) {
  std::array<std::int64_t, 7> gl{};
  const auto& g = e.lattice.gram();
  for (int i = 0; i < 7; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < 7; ++j) s = checked_add(s, checked_mul(g(i, j), l(j)));
    gl[static_cast<std::size_t>(i)] = s;
  }
  return gl;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace

std::int64_t orthogonal_root_count(const IntVector& l) {
  if (l.size() != 7) throw InvalidArgument("orthogonal_root_count: expected 7 coordinates");
  if (l.isZero()) throw InvalidArgument("orthogonal_root_count: l must be nonzero");
  const auto& e = e7();
  return count_orthogonal(e, gram_times(e, l));
}

std::int64_t weight(std::int64_t n_l) {
  if (n_l < 2 || n_l % 2 != 0) throw InvalidArgument("weight: N_l must be even and >= 2");
  return 12 + n_l / 2;
}

E7SearchResult search(std::int64_t d, std::int64_t max_roots) {
  if (d < 1) throw InvalidArgument("search: d must be >= 1");
  const auto& e = e7();
  E7SearchResult res;
  res.d = d;
  res.max_roots = max_roots;
  for_each_vector(e.lattice, 2 * d, 2 * d, [&](const IntVector& v, std::int64_t) {
    ++res.shell_size;
    const std::int64_t n = count_orthogonal(e, gram_times(e, v));
    ++res.histogram[n];
    if (n < 2) return;
    if (!res.min_n_l || n < *res.min_n_l || (n == *res.min_n_l && lex_less(v, *res.witness))) {
      res.min_n_l = n;
      res.witness = v;
    }
  });
  return res;
}

InequalityRow inequality_check(std::int64_t m, std::int64_t coeff) {
  if (m < 1) throw InvalidArgument("inequality_check: m must be >= 1");
  return inequality_scan(coeff, m).back();
}

std::vector<InequalityRow> inequality_scan(std::int64_t coeff, std::int64_t m_max) {
  if (coeff != 5 && coeff != 6) throw InvalidArgument("inequality: coefficient must be 5 or 6");
  if (m_max < 1) throw InvalidArgument("inequality: m_max must be >= 1");
  const std::int64_t prec = m_max + 1;
  const IntSeries d6 = theta_D(6, prec);
  const IntSeries a5 = theta_A(5, prec);
  const IntSeries a1d4 = theta_by_enumeration(standard_lattice("A1+D4"), prec);
  std::vector<InequalityRow> rows;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const auto k = static_cast<std::size_t>(m);
    InequalityRow r{m, d6[k], a1d4[k], a5[k], 0};
    r.slack = checked_sub(checked_sub(checked_mul(coeff, r.n_d6), checked_mul(30, r.n_a1d4)), checked_mul(16, r.n_a5));
    rows.push_back(r);
  }
  return rows;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::GeneralType: return "GeneralType";
    case Classification::NonNegativeKodaira: return "NonNegativeKodaira";
    case Classification::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict verdict(std::int64_t d) {
  const E7SearchResult s = search(d, 14);
  Verdict v;
  v.d = d;
  v.shell_size = s.shell_size;
  if (s.within_cap()) {
    v.classification = Classification::GeneralType;
    v.certificate = "search";
    v.witness = s.witness;
    v.n_l = s.min_n_l;
    v.weight = weight(*s.min_n_l);
    return v;
  }
  // A positive coefficient-5 slack forces some l with 2 <= N_l <= 14.
  const InequalityRow row = inequality_check(d, 5);
  if (row.holds()) {
    v.classification = Classification::GeneralType;
    v.certificate = "inequality";
    v.slack = row.slack;
    return v;
  }
  if (s.histogram.count(16)) {
    v.classification = Classification::NonNegativeKodaira;
    v.certificate = "weight-20";
    // Smallest vector with N_l = 16: the minimiser if it is 16, otherwise rescan.
    if (s.min_n_l && *s.min_n_l == 16) {
      v.witness = s.witness;
    } else {
      const auto& e = e7();
      for_each_vector(e.lattice, 2 * d, 2 * d, [&](const IntVector& x, std::int64_t) {
        if (count_orthogonal(e, gram_times(e, x)) == 16 && (!v.witness || lex_less(x, *v.witness))) v.witness = x;
      });
    }
    v.n_l = 16;
    v.weight = weight(16);
    return v;
  }
  v.certificate = "exhausted";
  return v;
}

std::vector<Table1Row> table1() {
  static const std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, std::array<std::int64_t, 7>>> printed = {
      {{9, 8}, {-1, 2, 3, 1, 2, 1, 3}},    {{11, 8}, {3, 3, 0, -1, -2, -1, 0}},
      {{12, 7}, {2, 1, 2, -2, 0, 0, 1}},   {{13, 7}, {2, 3, -1, 1, 0, 0, -1}},
      {{14, 6}, {2, 0, 3, 0, 2, 1, 1}},    {{15, 7}, {1, -2, 0, 2, 4, 2, 0}},
      {{16, 6}, {1, 0, -1, 3, 0, 0, -2}},  {{18, 5}, {3, 2, 3, 2, 0, 0, -2}},
      {{19, 6}, {2, 3, 2, -3, -4, -2, 1}},
  };
  const auto& e = e7();
  std::vector<Table1Row> rows;
  for (const auto& [dp, lam] : printed) {
    IntVector l(7);
    for (int i = 0; i < 7; ++i) l(i) = lam[static_cast<std::size_t>(i)];
    rows.push_back({dp.first, dp.second, lam, norm(LatticeVector(e.lattice, l)), orthogonal_root_count(l)});
  }
  return rows;
}

}  // namespace orthomod
