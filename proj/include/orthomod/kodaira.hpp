#pragma once

// Vectors in E7 orthogonal to few roots, and the resulting classification of
// split-polarised moduli of deformation type K3^[2].

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthomod/lattice.hpp"

namespace orthomod {

/// #{r root of E7 : (r, l) = 0}; l in simple-root coordinates.
std::int64_t orthogonal_root_count(const IntVector& l);

/// 12 + N_l / 2; N_l must be even and >= 2.
std::int64_t weight(std::int64_t n_l);

struct E7SearchResult {
  std::int64_t d = 0;
  std::int64_t max_roots = 14;
  std::int64_t shell_size = 0;            // vectors of norm 2d
  std::optional<IntVector> witness;       // lexicographically smallest minimiser
  std::optional<std::int64_t> min_n_l;    // least N_l >= 2 on the shell
  std::map<std::int64_t, std::int64_t> histogram;  // N_l -> number of vectors
  bool within_cap() const { return min_n_l && *min_n_l <= max_roots; }
};

/// Exhaustive search of the norm-2d shell of E7.
E7SearchResult search(std::int64_t d, std::int64_t max_roots = 14);

struct InequalityRow {
  std::int64_t m;
  std::int64_t n_d6, n_a1d4, n_a5;  // numbers of vectors of norm 2m
  std::int64_t slack;               // coeff N_D6 - 30 N_A1D4 - 16 N_A5
  bool holds() const { return slack > 0; }
};

/// Rows for 1 <= m <= m_max; coeff is 5 or 6.
std::vector<InequalityRow> inequality_scan(std::int64_t coeff, std::int64_t m_max);
InequalityRow inequality_check(std::int64_t m, std::int64_t coeff);

enum class Classification { GeneralType, NonNegativeKodaira, Inconclusive };
std::string to_string(Classification c);

struct Verdict {
  std::int64_t d = 0;
  Classification classification = Classification::Inconclusive;
  // "search" (witness with N_l <= 14), "inequality" (coefficient-5 slack
  // positive), "weight-20" (witness with N_l = 16) or "exhausted".
  std::string certificate;
  std::optional<IntVector> witness;
  std::optional<std::int64_t> n_l;
  std::optional<std::int64_t> weight;
  std::optional<std::int64_t> slack;
  std::int64_t shell_size = 0;
};

Verdict verdict(std::int64_t d);

struct Table1Row {
  std::int64_t d;
  std::int64_t pairs;                  // as printed
  std::array<std::int64_t, 7> lambda;  // as printed
  std::int64_t norm;                   // recomputed
  std::int64_t n_l;                    // recomputed
  bool matches() const { return norm == 2 * d && n_l == 2 * pairs; }
};

std::vector<Table1Row> table1();

}  // namespace orthomod
