#pragma once

// Orbits of primitive vectors h_d of norm 2d and divisor f in
// L_{2t} = 3U + 2E8(-1) + <-2t> under the stable orthogonal group.

#include <cstdint>
#include <optional>
#include <string>

#include "orthomod/lattice.hpp"

namespace orthomod {

struct PolarisationQuery {
  std::int64_t t, d, f;
  bool admissible;  // f | gcd(2t, 2d)
  // Derived quantities (meaningful only when admissible).
  std::int64_t g, w, g1, f1, t1, d1;
};

PolarisationQuery make_query(std::int64_t t, std::int64_t d, std::int64_t f);

enum class OrbitCase { NotAdmissible, I, IIEvenF1, IIOddF1OddD1, III };
std::string to_string(OrbitCase c);

struct OrbitReport {
  PolarisationQuery query;
  bool exists = false;
  std::int64_t count = 0;
  OrbitCase orbit_case = OrbitCase::NotAdmissible;
  std::optional<std::int64_t> witness_c;  // smallest admissible c mod f
};

/// Closed-form count by case on the parities of g1, f1, d1.
OrbitReport orbit_count_formula(std::int64_t t, std::int64_t d, std::int64_t f);

/// #{c mod f : gcd(c, f) = 1, f^2 | d + c^2 t}.
std::int64_t orbit_count_oracle(std::int64_t t, std::int64_t d, std::int64_t f);

struct PerpGram {
  std::int64_t b;               // (d + c^2 t) / f^2
  IntMatrix B;                  // [[-2b, 2tc/f], [2tc/f, -2t]]
  IntMatrix basis;              // columns e1 - b e2 and c(2t/f) e2 + l_t in U + <-2t>
  std::int64_t det;             // det B
  std::int64_t entry_gcd;       // gcd of the entries of B
  std::int64_t predicted_gcd;   // g1 * gcd(2b/g1, w)
};

/// Orthogonal complement of h_d = f e1 + f b e2 + c l_t inside U + <-2t>;
/// the full complement in L_{2t} is 2U + 2E8(-1) + B. Cross-checks B
/// against a saturated kernel computation.
PerpGram perp_gram(std::int64_t t, std::int64_t d, std::int64_t f, std::int64_t c);

/// Index of the stable orthogonal group; requires w = 1.
std::int64_t stable_index_formula(std::int64_t t, std::int64_t d, std::int64_t f);
/// #{x mod 2t/f : x^2 = 1 mod 2^{e}(2t/f)}, e = 1 for odd f and 0 for even f.
std::int64_t stable_index_oracle(std::int64_t t, std::int64_t d, std::int64_t f);

/// |O(D(L_{2t}))| = #{x mod 2t : x^2 = 1 mod 4t}.
std::int64_t disc_auto_order(std::int64_t t);

}  // namespace orthomod
