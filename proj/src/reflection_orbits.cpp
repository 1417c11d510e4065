#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "orthomod/integer_matrix.hpp"
#include "orthomod/lattice.hpp"

namespace orthomod {

namespace {

using Key = std::vector<int>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

struct CoordLess {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

bool first_nonzero_positive(const IntVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return v(i) > 0;
  return false;
}

// Roots of L with sign-normalized representatives. Signed root index:
// 2*p for +root_p, 2*p+1 for -root_p.
class RootSystem {
 public:
  explicit RootSystem(const GramLattice& l) : l_(l) {
    for (const auto& r : roots(l))
      if (first_nonzero_positive(r.coords())) pos_.push_back(r.coords());
    for (std::size_t p = 0; p < pos_.size(); ++p) {
      index_[pos_[p]] = static_cast<int>(2 * p);
      index_[IntVector(-pos_[p])] = static_cast<int>(2 * p + 1);
      gpos_.push_back(l.gram() * pos_[p]);
    }
  }

  std::size_t positive_count() const { return pos_.size(); }
  const IntVector& positive(std::size_t p) const { return pos_[p]; }
  const IntVector& gram_times(std::size_t p) const { return gpos_[p]; }

  int signed_index(const IntVector& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw InvalidArgument("reflection_orbits: vector is not a root of the lattice");
    return it->second;
  }

  // perm[p] = signed index of sigma_r(root_p) for positive root r.
  std::vector<int> reflection_permutation(std::size_t r) const {
    std::vector<int> perm(pos_.size());
    for (std::size_t p = 0; p < pos_.size(); ++p) {
      const std::int64_t ip = gpos_[r].dot(pos_[p]);
      perm[p] = signed_index(pos_[p] - ip * pos_[r]);
    }
    return perm;
  }

  // Positive indices of all roots in the Z-span of the given roots.
  Key canonical_key(const RootSet& gens) const {
    const Index k = static_cast<Index>(gens.size());
    if (k == 0) throw InvalidArgument("reflection_orbits: empty root set");
    IntMatrix gg(k, k);
    std::vector<IntVector> ggen;
    for (const auto& s : gens) {
      if (s.size() != l_.rank()) throw InvalidArgument("reflection_orbits: root has wrong dimension");
      ggen.push_back(l_.gram() * s);
    }
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) gg(i, j) = ggen[i].dot(gens[j]);
    const BigInt det_big = determinant(gg);
    if (det_big == 0) throw InvalidArgument("reflection_orbits: generating roots are dependent");
    const std::int64_t det = to_int64(det_big);
    // adj = det * gg^{-1}
    const Matrix<Rational> inv = rational_inverse(gg);
    IntMatrix adj(k, k);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) adj(i, j) = to_int64(boost::multiprecision::numerator(inv(i, j) * det));

    Key key;
    IntVector w(k);
    for (std::size_t p = 0; p < pos_.size(); ++p) {
      for (Index i = 0; i < k; ++i) w(i) = ggen[i].dot(pos_[p]);
      if (w.isZero()) continue;
      // Projection onto the span has norm w^T gg^{-1} w; the root lies in
      // the rational span iff this equals 2.
      const IntVector aw = adj * w;
      if (w.dot(aw) != 2 * det) continue;
      bool integral = true;
      for (Index i = 0; i < k && integral; ++i) integral = aw(i) % det == 0;
      if (!integral) continue;
      key.push_back(static_cast<int>(p));
    }
    return key;
  }

 private:
  GramLattice l_;
  std::vector<IntVector> pos_;
  std::vector<IntVector> gpos_;
  std::map<IntVector, int, CoordLess> index_;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

OrbitPartition reflection_orbits(const GramLattice& l, const std::vector<RootSet>& objects) {
  const RootSystem rs(l);
  std::vector<Key> keys;
  std::unordered_map<Key, std::size_t, KeyHash> id_of;
  std::vector<std::size_t> object_id(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    Key key = rs.canonical_key(objects[i]);
    auto [it, inserted] = id_of.emplace(key, keys.size());
    if (inserted) keys.push_back(std::move(key));
    object_id[i] = it->second;
  }

  UnionFind uf(keys.size());
  Key image;
  for (std::size_t r = 0; r < rs.positive_count(); ++r) {
    const auto perm = rs.reflection_permutation(r);
    for (std::size_t id = 0; id < keys.size(); ++id) {
      image.clear();
      for (int p : keys[id]) image.push_back(perm[static_cast<std::size_t>(p)] / 2);
      std::sort(image.begin(), image.end());
      auto it = id_of.find(image);
      if (it == id_of.end()) throw InvalidArgument("reflection_orbits: object set is not closed under reflections");
      uf.unite(id, it->second);
    }
  }

  OrbitPartition out;
  out.distinct_objects = keys.size();
  std::map<std::size_t, std::size_t> orbit_index;
  std::vector<std::size_t> orbit_of_key(keys.size());
  for (std::size_t id = 0; id < keys.size(); ++id) {
    const std::size_t root = uf.find(id);
    auto [it, inserted] = orbit_index.emplace(root, out.orbit_count);
    if (inserted) {
      ++out.orbit_count;
      out.sizes.push_back(0);
    }
    orbit_of_key[id] = it->second;
    ++out.sizes[it->second];
  }
  out.representatives.assign(out.orbit_count, objects.size());
  out.orbit_of.resize(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::size_t o = orbit_of_key[object_id[i]];
    out.orbit_of[i] = o;
    if (out.representatives[o] == objects.size()) out.representatives[o] = i;
  }
  return out;
}

std::vector<RootSet> sublattices_kA1(const GramLattice& l, int k) {
  if (k < 1) throw InvalidArgument("sublattices_kA1: k must be >= 1");
  std::vector<IntVector> pos;
  for (const auto& r : roots(l))
    if (first_nonzero_positive(r.coords())) pos.push_back(r.coords());
  const std::size_t n = pos.size();
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector gi = l.gram() * pos[i];
    for (std::size_t j = 0; j < n; ++j) orth[i][j] = gi.dot(pos[j]) == 0;
  }
  std::vector<RootSet> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == k) {
      RootSet s;
      for (auto c : chosen) s.push_back(pos[c]);
      out.push_back(std::move(s));
      return;
    }
    for (std::size_t j = start; j < n; ++j) {
      bool ok = true;
      for (auto c : chosen) ok = ok && orth[c][j];
      if (!ok) continue;
      chosen.push_back(j);
      rec(j + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<RootSet> sublattices_A2(const GramLattice& l) {
  std::vector<IntVector> pos;
  for (const auto& r : roots(l))
    if (first_nonzero_positive(r.coords())) pos.push_back(r.coords());
  // An A2 contains three positive roots a, b, c with a + b = c, (a, b) = -1.
  std::vector<RootSet> out;
  std::map<IntVector, std::size_t, CoordLess> idx;
  for (std::size_t i = 0; i < pos.size(); ++i) idx[pos[i]] = i;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const IntVector gi = l.gram() * pos[i];
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      if (gi.dot(pos[j]) != -1) continue;
      // Exactly one such pair per A2 has a positive sum.
      if (idx.find(IntVector(pos[i] + pos[j])) == idx.end()) continue;
      out.push_back({pos[i], pos[j]});
    }
  }
  return out;
}

}  // namespace orthomod
