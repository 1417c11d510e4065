#include "orthomod/lattice.hpp"

#include <cctype>
#include <numeric>

#include "orthomod/integer_matrix.hpp"

namespace orthomod {

namespace {

Signature classify(const IntMatrix& g) {
  const auto minors = leading_minors(g);
  bool pos = true, neg = true;
  for (std::size_t k = 1; k < minors.size(); ++k) {
    if (minors[k] <= 0) pos = false;
    if ((k % 2 == 0 ? minors[k] : BigInt(-minors[k])) <= 0) neg = false;
  }
  if (pos) return Signature::PositiveDefinite;
  if (neg) return Signature::NegativeDefinite;
  return Signature::Indefinite;
}

void require_same(const GramLattice& a, const GramLattice& b, const char* what) {
  if (!(a == b)) throw InvalidArgument(std::string(what) + ": vectors belong to different lattices");
}

Rational reduce_mod(const Rational& r, std::int64_t m) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r) * m;
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return r - Rational(q * m);
}

}  // namespace

GramLattice::GramLattice(IntMatrix gram, std::string name) {
  if (gram.rows() == 0 || gram.rows() != gram.cols())
    throw InvalidArgument("GramLattice: Gram matrix must be square of positive size");
  if (gram != gram.transpose()) throw InvalidArgument("GramLattice: Gram matrix is not symmetric");
  auto d = std::make_shared<Data>();
  d->det = determinant(gram);
  if (d->det == 0) throw InvalidArgument("GramLattice: degenerate Gram matrix");
  d->signature = classify(gram);
  d->even = true;
  for (Index i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) d->even = false;
  d->gram = std::move(gram);
  d->name = std::move(name);
  data_ = std::move(d);
}

LatticeVector::LatticeVector(GramLattice lattice, IntVector coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (coords_.size() != lattice_.rank()) throw InvalidArgument("LatticeVector: coordinate count differs from rank");
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same(a.lattice_, b.lattice_, "operator+");
  return {a.lattice_, a.coords_ + b.coords_};
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same(a.lattice_, b.lattice_, "operator-");
  return {a.lattice_, a.coords_ - b.coords_};
}

LatticeVector operator*(std::int64_t k, const LatticeVector& v) { return {v.lattice_, k * v.coords_}; }

GramLattice lattice_A(int n) {
  if (n < 1) throw InvalidArgument("lattice_A: n must be >= 1");
  IntMatrix g = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return GramLattice(g, "A" + std::to_string(n));
}

GramLattice lattice_D(int n) {
  if (n < 2) throw InvalidArgument("lattice_D: n must be >= 2");
  // Basis b_0 = e_1 + e_2, b_i = e_{i+1} - e_i.
  IntMatrix basis = IntMatrix::Zero(n, n);
  basis(0, 0) = basis(0, 1) = 1;
  for (int i = 1; i < n; ++i) {
    basis(i, i) = 1;
    basis(i, i - 1) = -1;
  }
  return GramLattice(basis * basis.transpose(), "D" + std::to_string(n));
}

// Basis in Q^8: v_i = e_{i+2} - e_{i+1} (i = 1..6),
// v_7 = (e_1 + e_2 + e_3 + e_4 - e_5 - e_6 - e_7 - e_8) / 2.
GramLattice lattice_E7() {
  IntMatrix twice = IntMatrix::Zero(7, 8);
  for (int i = 0; i < 6; ++i) {
    twice(i, i + 2) = 2;
    twice(i, i + 1) = -2;
  }
  for (int j = 0; j < 8; ++j) twice(6, j) = j < 4 ? 1 : -1;
  IntMatrix g = twice * twice.transpose();
  return GramLattice(g / 4, "E7");
}

GramLattice lattice_E8() {
  IntMatrix g = 2 * IntMatrix::Identity(8, 8);
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [i, j] : edges) g(i, j) = g(j, i) = -1;
  return GramLattice(g, "E8");
}

GramLattice lattice_U() {
  IntMatrix g(2, 2);
  g << 0, 1, 1, 0;
  return GramLattice(g, "U");
}

GramLattice lattice_diag(std::int64_t k) {
  if (k == 0) throw InvalidArgument("lattice_diag: k must be nonzero");
  IntMatrix g(1, 1);
  g(0, 0) = k;
  return GramLattice(g, "<" + std::to_string(k) + ">");
}

GramLattice direct_sum(const GramLattice& a, const GramLattice& b) {
  const Index n = a.rank(), m = b.rank();
  IntMatrix g = IntMatrix::Zero(n + m, n + m);
  g.topLeftCorner(n, n) = a.gram();
  g.bottomRightCorner(m, m) = b.gram();
  return GramLattice(g, a.name() + "+" + b.name());
}

GramLattice rescale(const GramLattice& l, std::int64_t k) {
  if (k == 0) throw InvalidArgument("rescale: factor must be nonzero");
  IntMatrix g = l.gram();
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j) g(i, j) = checked_mul(g(i, j), k);
  return GramLattice(g, l.name() + "(" + std::to_string(k) + ")");
}

GramLattice lattice_L2t(std::int64_t t) {
  if (t < 1) throw InvalidArgument("lattice_L2t: t must be >= 1");
  GramLattice l = lattice_U();
  l = direct_sum(l, lattice_U());
  l = direct_sum(l, lattice_U());
  l = direct_sum(l, rescale(lattice_E8(), -1));
  l = direct_sum(l, rescale(lattice_E8(), -1));
  l = direct_sum(l, lattice_diag(-2 * t));
  return GramLattice(l.gram(), "L_" + std::to_string(2 * t));
}

GramLattice standard_lattice(const std::string& name) {
  auto fail = [&](const std::string& why) -> GramLattice {
    throw InvalidArgument("standard_lattice: cannot parse \"" + name + "\": " + why);
  };
  auto read_int = [&](std::size_t& i, bool allow_sign) -> std::int64_t {
    const std::size_t start = i;
    if (allow_sign && i < name.size() && (name[i] == '-' || name[i] == '+')) ++i;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(name[start])))) {
      fail("expected an integer");
    }
    try {
      return std::stoll(name.substr(start, i - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
    return 0;
  };

  std::vector<GramLattice> parts;
  std::size_t i = 0;
  while (i < name.size()) {
    if (name[i] == '+' || name[i] == ' ') {
      ++i;
      continue;
    }
    std::int64_t mult = 1;
    if (std::isdigit(static_cast<unsigned char>(name[i]))) mult = read_int(i, false);
    if (i >= name.size()) fail("missing lattice symbol");
    if (mult < 1 || mult > 64) fail("bad multiplicity");
    const char c = name[i++];
    GramLattice piece = lattice_U();
    switch (c) {
      case 'A': piece = lattice_A(static_cast<int>(read_int(i, false))); break;
      case 'D': piece = lattice_D(static_cast<int>(read_int(i, false))); break;
      case 'E': {
        const auto k = read_int(i, false);
        if (k == 7) piece = lattice_E7();
        else if (k == 8) piece = lattice_E8();
        else fail("only E7 and E8 are available");
        break;
      }
      case 'U': break;
      case '<': {
        const auto k = read_int(i, true);
        if (i >= name.size() || name[i] != '>') fail("missing '>'");
        ++i;
        piece = lattice_diag(k);
        break;
      }
      default: fail(std::string("unknown symbol '") + c + "'");
    }
    if (i < name.size() && name[i] == '(') {
      ++i;
      const auto k = read_int(i, true);
      if (i >= name.size() || name[i] != ')') fail("missing ')'");
      ++i;
      piece = rescale(piece, k);
    }
    for (std::int64_t r = 0; r < mult; ++r) parts.push_back(piece);
  }
  if (parts.empty()) fail("empty name");
  GramLattice out = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) out = direct_sum(out, parts[k]);
  return GramLattice(out.gram(), name);
}

std::int64_t inner(const LatticeVector& v, const LatticeVector& w) {
  require_same(v.lattice(), w.lattice(), "inner");
  const IntMatrix& g = v.lattice().gram();
  std::int64_t s = 0;
  for (Index i = 0; i < g.rows(); ++i) {
    if (v[i] == 0) continue;
    std::int64_t row = 0;
    for (Index j = 0; j < g.cols(); ++j) row = checked_add(row, checked_mul(g(i, j), w[j]));
    s = checked_add(s, checked_mul(v[i], row));
  }
  return s;
}

std::int64_t norm(const LatticeVector& v) { return inner(v, v); }

std::int64_t divisor(const LatticeVector& v) {
  if (v.is_zero()) throw InvalidArgument("divisor: zero vector");
  const IntVector gv = v.lattice().gram() * v.coords();
  std::int64_t g = 0;
  for (Index i = 0; i < gv.size(); ++i) g = std::gcd(g, gv(i));
  return g;
}

Complement orthogonal_complement_with_basis(const GramLattice& l, const std::vector<LatticeVector>& s) {
  const Index n = l.rank();
  const Index k = static_cast<Index>(s.size());
  IntMatrix m(k, n);
  for (Index i = 0; i < k; ++i) {
    require_same(l, s[i].lattice(), "orthogonal_complement");
    m.row(i) = (l.gram() * s[i].coords()).transpose();
  }
  if (k > 0 && rank(m) != k) throw InvalidArgument("orthogonal_complement: vectors are linearly dependent");
  if (k == n) throw InvalidArgument("orthogonal_complement: complement is zero");
  const IntMatrix basis = k == 0 ? IntMatrix(IntMatrix::Identity(n, n)) : integer_kernel(m);
  IntMatrix g = basis.transpose() * l.gram() * basis;
  return {GramLattice(g), basis};
}

GramLattice orthogonal_complement(const GramLattice& l, const std::vector<LatticeVector>& s) {
  return orthogonal_complement_with_basis(l, s).lattice;
}

bool is_isometric(const GramLattice& a, const GramLattice& b, Index rank_cap) {
  if (!a.is_positive_definite() || !b.is_positive_definite())
    throw InvalidArgument("is_isometric: lattices must be positive definite");
  if (a.rank() > rank_cap || b.rank() > rank_cap)
    throw InvalidArgument("is_isometric: rank exceeds cap " + std::to_string(rank_cap));
  if (a.rank() != b.rank() || a.det() != b.det()) return false;

  // Map the basis of src into dst; prefer the side with the shorter basis.
  const bool swap_sides = a.gram().diagonal().maxCoeff() > b.gram().diagonal().maxCoeff();
  const GramLattice& src = swap_sides ? b : a;
  const GramLattice& dst = swap_sides ? a : b;
  const Index n = src.rank();

  std::vector<std::vector<IntVector>> cand(n);
  for (Index i = 0; i < n; ++i) {
    for (const auto& v : enumerate_norm(dst, src.gram()(i, i))) cand[i].push_back(v.coords());
  }
  std::vector<IntVector> image(n);
  std::vector<IntVector> g_image(n);  // dst.gram() * image[i]

  std::function<bool(Index)> extend = [&](Index i) -> bool {
    if (i == n) return true;
    for (const auto& c : cand[i]) {
      bool ok = true;
      for (Index j = 0; j < i && ok; ++j) ok = g_image[j].dot(c) == src.gram()(i, j);
      if (!ok) continue;
      image[i] = c;
      g_image[i] = dst.gram() * c;
      if (extend(i + 1)) return true;
    }
    return false;
  };
  return extend(0);
}

LatticeVector reflection(const LatticeVector& r, const LatticeVector& x) {
  const std::int64_t rr = norm(r);
  if (rr == 0) throw InvalidArgument("reflection: isotropic vector");
  const std::int64_t num = checked_mul(2, inner(x, r));
  if (num % rr != 0) throw InvalidArgument("reflection: image is not a lattice vector");
  return x - (num / rr) * r;
}

BigInt DiscriminantGroup::order() const {
  BigInt o = 1;
  for (auto d : invariant_factors) o *= d;
  return o;
}

DiscriminantGroup discriminant_group(const GramLattice& l) {
  const SmithForm snf = smith_normal_form(l.gram());
  const Index n = l.rank();
  DiscriminantGroup out;
  for (Index i = 0; i < n; ++i) {
    const std::int64_t d = snf.diagonal(i, i);
    if (d == 1) continue;
    // g = V e_i / d; (g, e_j) = (G V e_i / d)_j is integral.
    Vector<Rational> g(n);
    for (Index j = 0; j < n; ++j) g(j) = Rational(snf.right(j, i), d);
    IntVector dual = (l.gram() * snf.right.col(i)) / d;
    out.invariant_factors.push_back(d);
    out.generators.push_back(g);
    out.dual_coords.push_back(dual);
  }
  const std::size_t k = out.generators.size();
  out.b.resize(static_cast<Index>(k), static_cast<Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // (g_i, g_j) = sum_m dual_i[m] * (g_j)_m
      Rational v = 0;
      for (Index m = 0; m < n; ++m) v += Rational(out.dual_coords[i](m)) * out.generators[j](m);
      out.b(static_cast<Index>(i), static_cast<Index>(j)) = reduce_mod(v, 1);
      if (i == j) out.q.push_back(reduce_mod(v, 2));
    }
  }
  return out;
}

}  // namespace orthomod
