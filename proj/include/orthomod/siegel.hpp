#pragma once

// Representation numbers of odd-rank quadratic forms via Siegel's formula,
// with exact Cohen numbers and closed-form local densities.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthomod/arithmetic.hpp"
#include "orthomod/lattice.hpp"
#include "orthomod/types.hpp"

namespace orthomod {

// Discriminants and L-functions.

struct ZagierDiscriminant {
  std::int64_t delta;  // = D * f^2, congruent to 0 or 1 mod 4
  std::int64_t D;      // fundamental discriminant (1 for square delta)
  std::int64_t f;      // conductor
};

ZagierDiscriminant zagier_discriminant(std::int64_t delta);

/// #{x mod 2n : x^2 = delta mod 4n}.
std::int64_t b_n(std::int64_t delta, std::int64_t n);

struct NumericValue {
  double value;
  double error_bound;  // |true - value| <= error_bound
};

/// zeta(2s)/zeta(s) * sum_{n <= terms} b_n n^{-s}, for s > 3/2.
NumericValue zagier_L_numeric(double s, std::int64_t delta, std::int64_t terms);

/// L(2, chi_D) * sum_{a | f} mu(a) chi_D(a) a^{-2} sigma_{-3}(f/a), using the
/// Dirichlet series of chi_D with a partial-summation tail bound.
NumericValue zagier_L2(std::int64_t delta, std::int64_t terms = 200000);

Rational bernoulli_number(int k);  // B_1 = -1/2
Rational bernoulli_polynomial(int k, const Rational& x);
/// B_{k, chi_D} for a fundamental discriminant D.
Rational generalized_bernoulli(int k, std::int64_t D);

/// H(m1, delta) = L(1 - m1, delta), exactly.
Rational cohen_H(int m1, std::int64_t delta);

// The three worked forms S(X) = A[X]/2 of rank 5.

enum class OddForm { S5, A1D4, A5 };

struct OddFormInfo {
  OddForm id;
  std::string name;
  int m;                            // rank
  std::int64_t detA;                // |A|
  std::vector<std::int64_t> primes; // primes dividing |A|
  IntMatrix A;                      // even Gram matrix with S = A/2
};

const OddFormInfo& form_info(OddForm form);
OddForm parse_form(const std::string& name);
/// The lattice whose norm-2t vectors are counted by r(t, S).
GramLattice form_lattice(OddForm form);

struct TDecomposition {
  std::int64_t tA;  // part of t supported on primes dividing |A|
  std::int64_t t1;  // squarefree, coprime to |A|
  std::int64_t t2;  // t = tA * t1 * t2^2
};

TDecomposition decompose_t(std::int64_t t, std::int64_t detA);
/// Delta = D t2^2 with D = disc Q(sqrt((-1)^{(m-1)/2} 2t|A|)).
ZagierDiscriminant discriminant_of(OddForm form, std::int64_t t);

/// alpha_inf = coefficient * pi^pi_power * sqrt(radicand).
struct ExactRadical {
  Rational coefficient;
  int pi_power = 0;
  Rational radicand;
  double value() const;
};

/// (2 pi)^{m/2} Gamma(m/2)^{-1} t^{m/2-1} |A|^{-1/2} for odd m >= 3.
ExactRadical alpha_infinity(std::int64_t t, int m, std::int64_t detA);

/// eps_{A,t}(p) = ((-1)^{(m-1)/2} |A| 2 t_pbar / p).
int regular_epsilon(std::int64_t p, std::int64_t t, int m, std::int64_t detA);
/// alpha_p(t, S) for odd p not dividing |A|.
Rational alpha_regular(std::int64_t p, std::int64_t t, int m, std::int64_t detA);

// Closed forms at the primes dividing |A|.
Rational alpha2_S5(std::int64_t t);
Rational alpha2_A1D4(std::int64_t t);
Rational alpha2_A5(std::int64_t t);
Rational alpha3_A5(std::int64_t t);
/// Closed-form alpha_p(t, S) for p | |A|.
Rational alpha_closed(OddForm form, std::int64_t p, std::int64_t t);

// Mod p^a counting oracle.

/// One orthogonal block of a p-adic splitting of S: c x^2, or
/// a x^2 + b xy + c y^2. Coefficients may have denominators prime to p.
struct LocalBlock {
  bool binary = false;
  Rational a, b, c;
  static LocalBlock unary(Rational c) { return {false, 0, 0, std::move(c)}; }
  static LocalBlock quadratic(Rational a, Rational b, Rational c) { return {true, std::move(a), std::move(b), std::move(c)}; }
};

struct LocalForm {
  std::vector<LocalBlock> blocks;
  int rank() const;
};

/// The splitting of S = A/2 over Z_p used by the oracle.
LocalForm local_form(OddForm form, std::int64_t p);

/// p^{-a(m-1)} #{X mod p^a : S(X) = t mod p^a}.
Rational local_density_oracle(std::int64_t p, int a, const LocalForm& form, std::int64_t t);

struct StabilizedDensity {
  Rational value;
  int a = 0;             // smallest level where a and a+1 agreed
  bool stabilized = false;
};

/// Starts at a = ord_p(t) + 5 (p = 2) or ord_p(t) + 3 (odd p) and raises a
/// until two consecutive levels agree, at most max_steps times.
StabilizedDensity stabilized_density(std::int64_t p, const LocalForm& form, std::int64_t t, int max_steps = 3);

// Assembly.

struct DensityReport {
  OddForm form;
  std::int64_t t;
  TDecomposition decomposition;
  ZagierDiscriminant discriminant;
  std::map<std::int64_t, Rational> alpha;  // p | |A|
  ExactRadical alpha_inf;
  Rational cohen_H;                        // H(2, Delta)
  NumericValue L2;                         // L(2, Delta)
  NumericValue r_numeric;                  // L-value route
  Rational r_exact;                        // Cohen-number route
  BigInt r;
};

/// r(t, gen S) by both routes; throws CrossCheckFailure if they disagree or
/// the exact value is not an integer.
DensityReport siegel_r(OddForm form, std::int64_t t);

// Bounds used in the root-counting argument.

/// sigma_k(m, chi_4) = sum_{d | m} chi_4(d) d^k; the tilde variant twists m/d.
BigInt sigma_chi4(std::int64_t m, int k);
BigInt sigma_tilde_chi4(std::int64_t m, int k);
/// N_{D6}(2m) = 64 sigma~_2(m, chi_4) - 4 sigma_2(m, chi_4).
BigInt nd6(std::int64_t m);

/// (1 - chi_D(p) p^{-2}) / (1 - p^{-4}) alpha_p(m, S) for the given form.
Rational local_factor(OddForm form, std::int64_t p, std::int64_t m);

}  // namespace orthomod
