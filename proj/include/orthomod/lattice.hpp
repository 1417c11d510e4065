#pragma once

// Integral lattices given by Gram matrices, and vectors in them.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "orthomod/types.hpp"

namespace orthomod {

enum class Signature { PositiveDefinite, NegativeDefinite, Indefinite };

class GramLattice {
 public:
  /// Validates symmetry and non-degeneracy.
  explicit GramLattice(IntMatrix gram, std::string name = {});

  const IntMatrix& gram() const { return data_->gram; }
  Index rank() const { return data_->gram.rows(); }
  const BigInt& det() const { return data_->det; }
  Signature signature() const { return data_->signature; }
  bool is_positive_definite() const { return data_->signature == Signature::PositiveDefinite; }
  bool is_even() const { return data_->even; }
  const std::string& name() const { return data_->name; }

  bool operator==(const GramLattice& other) const {
    return data_ == other.data_ || data_->gram == other.data_->gram;
  }

 private:
  struct Data {
    IntMatrix gram;
    BigInt det;
    Signature signature;
    bool even;
    std::string name;
  };
  std::shared_ptr<const Data> data_;
};

class LatticeVector {
 public:
  LatticeVector(GramLattice lattice, IntVector coords);

  const GramLattice& lattice() const { return lattice_; }
  const IntVector& coords() const { return coords_; }
  std::int64_t operator[](Index i) const { return coords_(i); }
  bool is_zero() const { return coords_.isZero(); }

  LatticeVector operator-() const { return {lattice_, -coords_}; }
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(std::int64_t k, const LatticeVector& v);
  bool operator==(const LatticeVector& o) const { return lattice_ == o.lattice_ && coords_ == o.coords_; }

 private:
  GramLattice lattice_;
  IntVector coords_;
};

// Standard lattices. Root lattices use the simple-root basis (diagonal 2).
GramLattice lattice_A(int n);                // e_{i+1} - e_i inside {sum x = 0} of Z^{n+1}
GramLattice lattice_D(int n);                // e_1 + e_2, e_i - e_{i-1} inside {sum x even}, n >= 2
GramLattice lattice_E7();                    // see lattice.cpp for the basis in Q^8
GramLattice lattice_E8();
GramLattice lattice_U();
GramLattice lattice_diag(std::int64_t k);    // <k>
GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice rescale(const GramLattice& l, std::int64_t k);
/// L_{2t} = 3U + 2E8(-1) + <-2t>.
GramLattice lattice_L2t(std::int64_t t);

/// Parses names such as "E7", "A1+D4", "A1D4", "2E8(-1)+3U+<-6>".
GramLattice standard_lattice(const std::string& name);

std::int64_t inner(const LatticeVector& v, const LatticeVector& w);
std::int64_t norm(const LatticeVector& v);

/// Positive generator of (v, L).
std::int64_t divisor(const LatticeVector& v);

/// Primitive sublattice orthogonal to the given vectors. The basis of the
/// result is returned alongside, as columns in the coordinates of L.
struct Complement {
  GramLattice lattice;
  IntMatrix basis;
};
Complement orthogonal_complement_with_basis(const GramLattice& l, const std::vector<LatticeVector>& s);
GramLattice orthogonal_complement(const GramLattice& l, const std::vector<LatticeVector>& s);

inline constexpr Index kIsometryRankCap = 8;

/// Backtracking isometry test for positive-definite lattices.
bool is_isometric(const GramLattice& a, const GramLattice& b, Index rank_cap = kIsometryRankCap);

/// sigma_r(x) = x - 2(x,r)/(r,r) r.
LatticeVector reflection(const LatticeVector& r, const LatticeVector& x);

// Short vectors.

/// Calls visit(coords, norm) for every v with lo <= norm(v) <= hi, in no
/// particular order. Throws unless L is positive definite.
void for_each_vector(const GramLattice& l, std::int64_t lo, std::int64_t hi,
                     const std::function<void(const IntVector&, std::int64_t)>& visit);

/// All vectors of norm n, sorted lexicographically by coordinates.
std::vector<LatticeVector> enumerate_norm(const GramLattice& l, std::int64_t n);
std::int64_t rep_count(const GramLattice& l, std::int64_t n);
/// counts[k] = #{v : norm(v) = k} for 0 <= k <= max_norm.
std::vector<std::int64_t> norm_counts(const GramLattice& l, std::int64_t max_norm);
std::vector<LatticeVector> roots(const GramLattice& l);

// Discriminant group.

struct DiscriminantGroup {
  std::vector<std::int64_t> invariant_factors;  // d_1 | d_2 | ..., each > 1
  std::vector<Vector<Rational>> generators;     // in the basis of L (so in L tensor Q)
  std::vector<IntVector> dual_coords;           // (g, e_i) for the basis e_i of L
  std::vector<Rational> q;                      // q(g_i) mod 2, in [0, 2)
  Matrix<Rational> b;                           // b(g_i, g_j) mod 1, in [0, 1)
  BigInt order() const;
};

DiscriminantGroup discriminant_group(const GramLattice& l);

// Reflection orbits of root sublattices.

/// A sublattice given by a set of generating roots (coordinates in L).
using RootSet = std::vector<IntVector>;

struct OrbitPartition {
  std::size_t orbit_count = 0;
  std::vector<std::size_t> orbit_of;         // orbit id per object
  std::vector<std::size_t> representatives;  // one object index per orbit
  std::vector<std::size_t> sizes;            // sublattices per orbit
  std::size_t distinct_objects = 0;          // after canonicalization
};

/// Partitions the objects into orbits of the group generated by reflections
/// in the roots of L. Objects that generate the same sublattice are
/// identified. Throws if a reflection maps an object outside the set.
OrbitPartition reflection_orbits(const GramLattice& l, const std::vector<RootSet>& objects);

/// Sublattices of type kA1 (k mutually orthogonal roots), one RootSet each.
std::vector<RootSet> sublattices_kA1(const GramLattice& l, int k);
/// Sublattices of type A2, one RootSet each.
std::vector<RootSet> sublattices_A2(const GramLattice& l);

}  // namespace orthomod
