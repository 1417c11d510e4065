#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "orthomod/siegel.hpp"

namespace orthomod {

namespace {

Rational pow2(int e) { return rational_pow(Rational(2), e); }
Rational pow3(int e) { return rational_pow(Rational(3), e); }

// +1 for even D, -1 for odd D.
int parity_sign(std::int64_t D) { return D % 2 == 0 ? 1 : -1; }

}  // namespace

Rational alpha2_S5(std::int64_t t) {
  const int b = ord_p(t, 2) / 2;
  const std::int64_t D = discriminant_of(OddForm::S5, t).D;
  Rational v = 1;
  for (int k = 1; k <= b; ++k) v -= pow2(-3 * k + 1);
  v += parity_sign(D) * pow2(-3 * b - 2);
  v -= kronecker(D, 2) * pow2(-3 * b - 3);
  return v;
}

Rational alpha2_A1D4(std::int64_t t) {
  const int b = ord_p(t, 2) / 2;
  const std::int64_t D = discriminant_of(OddForm::A1D4, t).D;
  Rational v = 1;
  for (int k = 1; k <= b; ++k) v -= pow2(-3 * k);
  v += parity_sign(D) * pow2(-3 * (b + 1));
  v -= kronecker(D, 2) * pow2(-3 * b - 4);
  return v;
}

Rational alpha2_A5(std::int64_t t) {
  const int b = ord_p(t, 2) / 2;
  const std::int64_t D = discriminant_of(OddForm::A5, t).D;
  Rational v = 1;
  for (int k = 1; k <= b; ++k) v += pow2(-3 * k - 1);
  v -= parity_sign(D) * pow2(-3 * b - 4);
  v += kronecker(D, 2) * pow2(-3 * b - 5);
  return v;
}

Rational alpha3_A5(std::int64_t t) {
  const int c = ord_p(t, 3);
  std::int64_t tp = t;
  while (tp % 3 == 0) tp /= 3;
  Rational v = 1;
  if (c % 2 == 0) {
    const int n = 3 * c / 2;
    for (int k = 1; k <= n; ++k) v -= kronecker(k, 3) * pow3(-k);
    v += pow3(-(n + 2));
  } else {
    for (int k = 1; k <= 3 * (c / 2) + 2; ++k) v -= kronecker(k, 3) * pow3(-k);
    v -= kronecker(tp, 3) * pow3(-(3 * c + 3) / 2);
  }
  return v;
}

Rational alpha_closed(OddForm form, std::int64_t p, std::int64_t t) {
  if (t < 1) throw InvalidArgument("alpha_closed: t must be >= 1");
  if (p == 2) {
    switch (form) {
      case OddForm::S5: return alpha2_S5(t);
      case OddForm::A1D4: return alpha2_A1D4(t);
      case OddForm::A5: return alpha2_A5(t);
    }
  }
  if (p == 3 && form == OddForm::A5) return alpha3_A5(t);
  throw InvalidArgument("alpha_closed: p does not divide |A|");
}

Rational local_factor(OddForm form, std::int64_t p, std::int64_t m) {
  const std::int64_t D = discriminant_of(form, m).D;
  const Rational p2 = rational_pow(Rational(p), -2);
  return (1 - Rational(kronecker(D, p)) * p2) / (1 - p2 * p2) * alpha_closed(form, p, m);
}

int LocalForm::rank() const {
  int r = 0;
  for (const auto& b : blocks) r += b.binary ? 2 : 1;
  return r;
}

LocalForm local_form(OddForm form, std::int64_t p) {
  if (!is_prime(p)) throw InvalidArgument("local_form: p must be prime");
  const auto& info = form_info(form);
  LocalForm lf;
  auto diag = [&](std::initializer_list<Rational> cs) {
    for (const auto& c : cs) lf.blocks.push_back(LocalBlock::unary(c));
  };
  if (info.detA % p != 0) {
    // Unimodular over Z_p: <1, 1, 1, 1, det S>, det S = |A| / 2^5 up to squares.
    const Rational det = Rational(info.detA, 32);
    diag({1, 1, 1, 1, det});
    return lf;
  }
  switch (form) {
    case OddForm::S5:
      diag({1, 1, 1, 1, 1});
      break;
    case OddForm::A1D4:
      // <2>/2 + D4/2 over Z_2.
      diag({1});
      lf.blocks.push_back(LocalBlock::quadratic(1, 1, 1));
      lf.blocks.push_back(LocalBlock::quadratic(2, 2, 2));
      break;
    case OddForm::A5:
      if (p == 2) {
        // 2U + <6>.
        lf.blocks.push_back(LocalBlock::quadratic(0, 1, 0));
        lf.blocks.push_back(LocalBlock::quadratic(0, 1, 0));
        diag({3});
      } else {
        diag({Rational(1, 2), Rational(1, 2), Rational(1, 2), 1, Rational(3, 2)});
      }
      break;
  }
  return lf;
}

namespace {

using u128 = unsigned __int128;

std::int64_t reduce(const Rational& q, std::int64_t modulus) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const std::int64_t n = to_int64(((num % modulus) + modulus) % modulus);
  const std::int64_t d = to_int64(den % modulus);
  return static_cast<std::int64_t>(static_cast<__int128>(n) * inverse_mod(d, modulus) % modulus);
}

std::vector<u128> block_distribution(const LocalBlock& b, std::int64_t M) {
  std::vector<u128> dist(static_cast<std::size_t>(M), 0);
  if (!b.binary) {
    const std::int64_t c = reduce(b.c, M);
    for (std::int64_t x = 0; x < M; ++x) ++dist[static_cast<std::size_t>(static_cast<__int128>(c) * x % M * x % M)];
    return dist;
  }
  const std::int64_t a = reduce(b.a, M), bb = reduce(b.b, M), c = reduce(b.c, M);
  for (std::int64_t x = 0; x < M; ++x) {
    const __int128 ax2 = static_cast<__int128>(a) * x % M * x % M;
    const __int128 bx = static_cast<__int128>(bb) * x % M;
    for (std::int64_t y = 0; y < M; ++y) {
      const __int128 v = (ax2 + bx * y + static_cast<__int128>(c) * y % M * y) % M;
      ++dist[static_cast<std::size_t>(v)];
    }
  }
  return dist;
}

std::vector<u128> cyclic_convolve(const std::vector<u128>& u, const std::vector<u128>& v) {
  const std::size_t M = u.size();
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < M; ++j)
    if (v[j] != 0) nz.push_back(j);
  std::vector<u128> w(M, 0);
  for (std::size_t i = 0; i < M; ++i) {
    if (u[i] == 0) continue;
    for (auto j : nz) {
      std::size_t k = i + j;
      if (k >= M) k -= M;
      w[k] += u[i] * v[j];
    }
  }
  return w;
}

std::string form_key(const LocalForm& f, std::int64_t p, int a) {
  std::ostringstream os;
  os << p << "^" << a;
  for (const auto& b : f.blocks) {
    os << "|" << b.binary << ":" << to_string(b.a) << "," << to_string(b.b) << "," << to_string(b.c);
  }
  return os.str();
}

BigInt to_big(u128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  return (hi << 64) + BigInt(static_cast<std::uint64_t>(v));
}

}  // namespace

Rational local_density_oracle(std::int64_t p, int a, const LocalForm& form, std::int64_t t) {
  if (!is_prime(p)) throw InvalidArgument("local_density_oracle: p must be prime");
  if (a < 1) throw InvalidArgument("local_density_oracle: a must be >= 1");
  const int m = form.rank();
  std::int64_t M = 1;
  for (int k = 0; k < a; ++k) M = checked_mul(M, p);
  if (M > (1 << 14)) throw InvalidArgument("local_density_oracle: modulus p^a too large");
  // Counts reach p^{a m}; keep them inside 128 bits.
  if (static_cast<double>(a) * m * std::log2(static_cast<double>(p)) > 120)
    throw InvalidArgument("local_density_oracle: count would overflow");

  static std::mutex mu;
  static std::map<std::string, std::vector<u128>> cache;
  const std::string key = form_key(form, p, a);
  std::vector<u128> total;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) total = it->second;
  }
  if (total.empty()) {
    total.assign(static_cast<std::size_t>(M), 0);
    total[0] = 1;
    for (const auto& b : form.blocks) total = cyclic_convolve(total, block_distribution(b, M));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, total);
  }
  const BigInt count = to_big(total[static_cast<std::size_t>(mod(t, M))]);
  BigInt denom = 1;
  for (int k = 0; k < a * (m - 1); ++k) denom *= p;
  return Rational(count, denom);
}

StabilizedDensity stabilized_density(std::int64_t p, const LocalForm& form, std::int64_t t, int max_steps) {
  int a = ord_p(t, p) + (p == 2 ? 5 : 3);
  Rational prev = local_density_oracle(p, a, form, t);
  for (int step = 0; step < max_steps; ++step) {
    const Rational next = local_density_oracle(p, a + 1, form, t);
    if (next == prev) return {prev, a, true};
    prev = next;
    ++a;
  }
  return {prev, a, false};
}

}  // namespace orthomod
