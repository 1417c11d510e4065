#include "orthomod/series.hpp"

#include <cctype>

namespace orthomod {

IntSeries theta3(std::int64_t prec) {
  IntSeries s(2, prec);
  for (std::int64_t n = 0; static_cast<std::size_t>(n * n) < s.size(); ++n) s[static_cast<std::size_t>(n * n)] += n == 0 ? 1 : 2;
  return s;
}

EisensteinSeries theta3_shifted(int k, std::int64_t prec) {
  if (k < 0 || k > 5) throw InvalidArgument("theta3_shifted: k must be in 0..5");
  EisensteinSeries s(2, prec);
  for (std::int64_t n = 0; static_cast<std::size_t>(n * n) < s.size(); ++n) {
    auto& c = s[static_cast<std::size_t>(n * n)];
    c += Eisenstein::zeta_power(n * k);
    if (n != 0) c += Eisenstein::zeta_power(-n * k);
  }
  return s;
}

IntSeries theta_A(int n, std::int64_t prec) {
  if (n != 1 && n != 2 && n != 5) throw InvalidArgument("theta_A: only n in {1, 2, 5} is supported");
  const int h = n + 1;
  const int step = 6 / h;  // exp(2 pi i k / h) = zeta^{k * step}
  EisensteinSeries sum(2, prec);
  for (int k = 0; k < h; ++k) sum = sum + theta3_shifted(k * step, prec).pow(h);
  // sum = h * theta_{A_n}(tau) * theta3(h tau)
  EisensteinSeries denom(2, prec);
  const IntSeries t = theta3(prec).scale_tau(h);
  for (std::size_t i = 0; i < t.size(); ++i) denom[i] = Eisenstein(t[i]);
  const EisensteinSeries quot = sum / denom;
  IntSeries out(2, prec);
  for (std::size_t i = 0; i < quot.size(); ++i) {
    const Eisenstein& c = quot[i];
    if (!c.is_rational() || c.a % h != 0) throw CrossCheckFailure("theta_A: non-integral coefficient");
    out[i] = c.a / h;
  }
  return out.coarsen(1);
}

IntSeries theta_D(int n, std::int64_t prec) {
  if (n < 2) throw InvalidArgument("theta_D: n must be >= 2");
  const IntSeries t = theta3(prec);
  const IntSeries s = t.pow(n) + t.shift_tau_by_one().pow(n);
  IntSeries out(2, prec);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] % 2 != 0) throw CrossCheckFailure("theta_D: odd coefficient before halving");
    out[i] = s[i] / 2;
  }
  return out.coarsen(1);
}

IntSeries theta_by_enumeration(const GramLattice& l, std::int64_t prec) {
  const auto counts = norm_counts(l, checked_mul(2, prec) - 1);
  IntSeries s(2, prec);
  for (std::size_t k = 0; k < counts.size(); ++k) s[k] = counts[k];
  return l.is_even() ? s.coarsen(1) : s;
}

namespace {

bool parse_root_name(const std::string& name, char& type, int& n) {
  if (name.size() < 2 || (name[0] != 'A' && name[0] != 'D')) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  type = name[0];
  n = std::stoi(name.substr(1));
  return true;
}

}  // namespace

bool has_closed_form(const std::string& lattice) {
  char type;
  int n;
  if (!parse_root_name(lattice, type, n)) return false;
  return type == 'A' ? (n == 1 || n == 2 || n == 5) : n >= 2;
}

IntSeries theta_closed_form(const std::string& lattice, std::int64_t prec) {
  char type;
  int n;
  if (!has_closed_form(lattice) || !parse_root_name(lattice, type, n))
    throw InvalidArgument("theta_closed_form: no closed form for " + lattice);
  return type == 'A' ? theta_A(n, prec) : theta_D(n, prec);
}

}  // namespace orthomod
