#include <array>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthomod/kodaira.hpp"
#include "orthomod/lattice.hpp"
#include "orthomod/orbits.hpp"
#include "orthomod/series.hpp"
#include "orthomod/siegel.hpp"

using json = nlohmann::ordered_json;
using namespace orthomod;

namespace {

constexpr const char* kVersion = "1";

enum ExitCode { kOk = 0, kUsage = 1, kRefused = 2, kCrossCheck = 3 };

// A command's output: a JSON payload and, for tabular commands, the rows
// used by the csv and text formats.
struct Output {
  json params = json::object();
  json result = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  int exit_code = kOk;
};

json vec_json(const IntVector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else {
    out.emplace_back(prefix, cell(j));
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const std::string& command, const Output& out, const std::string& format) {
  if (format == "json") {
    json env;
    env["version"] = kVersion;
    env["command"] = command;
    env["params"] = out.params;
    env["result"] = out.result;
    std::cout << env.dump(2) << "\n";
    return;
  }
  const char* sep = format == "csv" ? "," : " ";
  auto fmt = [&](const std::string& s) { return format == "csv" ? csv_escape(s) : s; };
  if (!out.columns.empty()) {
    for (std::size_t i = 0; i < out.columns.size(); ++i) std::cout << (i ? sep : "") << fmt(out.columns[i]);
    std::cout << "\n";
    for (const auto& r : out.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? sep : "") << fmt(cell(r[i]));
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(out.result, "", kv);
  if (format == "csv") std::cout << "key,value\n";
  for (const auto& [k, v] : kv) std::cout << fmt(k) << (format == "csv" ? "," : ": ") << fmt(v) << "\n";
}

// theta

IntSeries enumerated_theta(const std::string& name, std::int64_t prec, SeriesCache* cache, bool& cache_dirty) {
  const GramLattice l = standard_lattice(name);
  const std::int64_t grid = l.is_even() ? 1 : 2;
  const std::string key = "enum:" + name;
  if (cache)
    if (const IntSeries* s = cache->find(key, grid, prec)) return *s;
  IntSeries s = theta_by_enumeration(l, prec);
  if (cache) {
    cache->put(key, s);
    cache_dirty = true;
  }
  return s;
}

Output cmd_theta(const std::string& lattice, std::int64_t prec, const std::string& method, SeriesCache* cache,
                 bool& cache_dirty) {
  Output out;
  out.params = {{"lattice", lattice}, {"prec", prec}, {"method", method}};
  std::optional<IntSeries> closed, enumerated;
  if (method == "closed" || method == "both") {
    if (!has_closed_form(lattice)) throw InvalidArgument("no closed form for " + lattice);
    closed = theta_closed_form(lattice, prec);
  }
  if (method == "enum" || method == "both") enumerated = enumerated_theta(lattice, prec, cache, cache_dirty);
  const IntSeries& primary = closed ? *closed : *enumerated;
  std::int64_t grid = primary.grid();
  if (closed && enumerated) grid = std::lcm(closed->grid(), enumerated->grid());
  const IntSeries a = primary.regrid(grid);
  std::optional<IntSeries> b;
  if (closed && enumerated) b = enumerated->regrid(grid);

  out.result["grid"] = grid;
  json coeffs = json::array();
  std::int64_t mismatches = 0;
  out.columns = {"exponent", "coefficient"};
  if (b) out.columns = {"exponent", "closed", "enum", "match"};
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::string e = grid == 1 ? std::to_string(k) : to_string(Rational(static_cast<std::int64_t>(k), grid));
    coeffs.push_back(a[k]);
    if (b) {
      const bool ok = a[k] == (*b)[k];
      mismatches += !ok;
      out.rows.push_back({e, a[k], (*b)[k], ok});
    } else {
      out.rows.push_back({e, a[k]});
    }
  }
  out.result["coefficients"] = coeffs;
  if (b) {
    out.result["methods_agree"] = mismatches == 0;
    out.result["mismatches"] = mismatches;
    if (mismatches) out.exit_code = kCrossCheck;
  }
  return out;
}

Output cmd_repcount(const std::string& lattice, std::int64_t n) {
  Output out;
  out.params = {{"lattice", lattice}, {"norm", n}};
  out.result["count"] = rep_count(standard_lattice(lattice), n);
  return out;
}

Output cmd_siegel(const std::string& form_name, std::int64_t t, bool report) {
  Output out;
  out.params = {{"form", form_name}, {"t", t}, {"report", report}};
  const DensityReport r = siegel_r(parse_form(form_name), t);
  out.result["t"] = t;
  out.result["r"] = big_json(r.r);
  if (!report) return out;
  out.result["decomposition"] = {{"tA", r.decomposition.tA}, {"t1", r.decomposition.t1}, {"t2", r.decomposition.t2}};
  out.result["Delta"] = r.discriminant.delta;
  out.result["D"] = r.discriminant.D;
  json alpha = json::object();
  for (const auto& [p, a] : r.alpha) alpha[std::to_string(p)] = to_string(a);
  out.result["alpha"] = alpha;
  out.result["alpha_inf"] = {{"coefficient", to_string(r.alpha_inf.coefficient)},
                             {"pi_power", r.alpha_inf.pi_power},
                             {"radicand", to_string(r.alpha_inf.radicand)},
                             {"value", r.alpha_inf.value()}};
  out.result["H"] = to_string(r.cohen_H);
  out.result["L2"] = {{"value", r.L2.value}, {"error_bound", r.L2.error_bound}};
  out.result["r_numeric"] = {{"value", r.r_numeric.value}, {"error_bound", r.r_numeric.error_bound}};
  out.result["r_exact"] = to_string(r.r_exact);
  return out;
}

json orbit_row(std::int64_t t, std::int64_t d, std::int64_t f, bool& mismatch) {
  const OrbitReport rep = orbit_count_formula(t, d, f);
  const std::int64_t oracle = orbit_count_oracle(t, d, f);
  mismatch = rep.count != oracle;
  json j;
  j["t"] = t;
  j["d"] = d;
  j["f"] = f;
  j["case"] = to_string(rep.orbit_case);
  j["exists"] = rep.exists;
  j["count_formula"] = rep.count;
  j["count_oracle"] = oracle;
  j["match"] = !mismatch;
  if (rep.query.admissible) {
    const auto& q = rep.query;
    j["g"] = q.g;
    j["w"] = q.w;
    j["g1"] = q.g1;
    j["f1"] = q.f1;
    j["t1"] = q.t1;
    j["d1"] = q.d1;
  }
  j["witness_c"] = rep.witness_c ? json(*rep.witness_c) : json(nullptr);
  if (rep.witness_c) {
    const PerpGram pg = perp_gram(t, d, f, *rep.witness_c);
    j["B"] = {{pg.B(0, 0), pg.B(0, 1)}, {pg.B(1, 0), pg.B(1, 1)}};
    j["det_B"] = pg.det;
  }
  return j;
}

Output cmd_orbits(std::int64_t t, std::int64_t d, std::optional<std::int64_t> f, bool sweep) {
  Output out;
  out.params = {{"t", t}, {"d", d}, {"f", f ? json(*f) : json(nullptr)}, {"sweep", sweep}};
  if (t < 1 || d < 1) throw InvalidArgument("t and d must be positive");
  std::vector<std::array<std::int64_t, 3>> queries;
  if (f) {
    queries.push_back({t, d, *f});
  } else if (sweep) {
    for (std::int64_t tt = 1; tt <= t; ++tt)
      for (std::int64_t dd = 1; dd <= d; ++dd)
        for (auto ff : divisors(std::gcd(2 * tt, 2 * dd))) queries.push_back({tt, dd, ff});
  } else {
    for (auto ff : divisors(std::gcd(2 * t, 2 * d))) queries.push_back({t, d, ff});
  }
  out.columns = {"t", "d", "f", "case", "exists", "count_formula", "count_oracle", "match"};
  json reports = json::array();
  std::int64_t mismatches = 0;
  for (auto [tt, dd, ff] : queries) {
    bool mismatch = false;
    json j = orbit_row(tt, dd, ff, mismatch);
    mismatches += mismatch;
    std::vector<json> row;
    for (const auto& c : out.columns) row.push_back(j[c]);
    out.rows.push_back(std::move(row));
    reports.push_back(std::move(j));
  }
  if (queries.size() == 1) out.result = reports[0];
  else out.result = {{"reports", reports}, {"mismatches", mismatches}};
  if (mismatches) out.exit_code = kCrossCheck;
  return out;
}

Output cmd_index(std::int64_t t, std::int64_t d, std::int64_t f) {
  Output out;
  out.params = {{"t", t}, {"d", d}, {"f", f}};
  const std::int64_t formula = stable_index_formula(t, d, f);
  const std::int64_t oracle = stable_index_oracle(t, d, f);
  out.result = {{"index_formula", formula}, {"index_oracle", oracle}, {"match", formula == oracle},
                {"disc_auto_order", disc_auto_order(t)}};
  if (formula != oracle) out.exit_code = kCrossCheck;
  return out;
}

Output cmd_e7_search(std::int64_t d, std::int64_t max_roots, bool all) {
  Output out;
  out.params = {{"d", d}, {"max_roots", max_roots}, {"all", all}};
  const E7SearchResult s = search(d, max_roots);
  out.result["d"] = d;
  out.result["shell_size"] = s.shell_size;
  out.result["min_n_l"] = s.min_n_l ? json(*s.min_n_l) : json(nullptr);
  out.result["witness"] = s.witness ? vec_json(*s.witness) : json(nullptr);
  out.result["within_cap"] = s.within_cap();
  out.result["weight"] = s.min_n_l ? json(weight(*s.min_n_l)) : json(nullptr);
  json achievable = json::array();
  for (const auto& [n, c] : s.histogram)
    if (n >= 2) achievable.push_back(n);
  out.result["achievable_n_l"] = achievable;
  if (all) {
    json hist = json::object();
    out.columns = {"n_l", "vectors"};
    for (const auto& [n, c] : s.histogram) {
      hist[std::to_string(n)] = c;
      out.rows.push_back({n, c});
    }
    out.result["histogram"] = hist;
  }
  return out;
}

Output cmd_inequality(std::int64_t coeff, std::int64_t m_max) {
  Output out;
  out.params = {{"coeff", coeff}, {"m_max", m_max}};
  out.columns = {"m", "n_d6", "n_a1d4", "n_a5", "slack", "holds"};
  json rows = json::array();
  for (const auto& r : inequality_scan(coeff, m_max)) {
    out.rows.push_back({r.m, r.n_d6, r.n_a1d4, r.n_a5, r.slack, r.holds()});
    rows.push_back({{"m", r.m}, {"n_d6", r.n_d6}, {"n_a1d4", r.n_a1d4}, {"n_a5", r.n_a5}, {"slack", r.slack},
                    {"holds", r.holds()}});
  }
  out.result["rows"] = rows;
  return out;
}

Output cmd_verdict(std::int64_t d) {
  Output out;
  out.params = {{"d", d}};
  const Verdict v = verdict(d);
  out.result["d"] = d;
  out.result["classification"] = to_string(v.classification);
  out.result["certificate"] = v.certificate;
  out.result["witness"] = v.witness ? vec_json(*v.witness) : json(nullptr);
  out.result["n_l"] = v.n_l ? json(*v.n_l) : json(nullptr);
  out.result["weight"] = v.weight ? json(*v.weight) : json(nullptr);
  out.result["slack"] = v.slack ? json(*v.slack) : json(nullptr);
  out.result["shell_size"] = v.shell_size;
  return out;
}

Output cmd_table1() {
  Output out;
  out.columns = {"d", "p_d", "lambda", "norm", "n_l", "match"};
  json rows = json::array();
  bool all_ok = true;
  for (const auto& r : table1()) {
    std::ostringstream lam;
    lam << "(";
    for (std::size_t i = 0; i < 7; ++i) lam << (i ? "," : "") << r.lambda[i];
    lam << ")";
    out.rows.push_back({r.d, r.pairs, lam.str(), r.norm, r.n_l, r.matches()});
    rows.push_back({{"d", r.d}, {"p_d", r.pairs}, {"lambda", r.lambda}, {"norm", r.norm}, {"n_l", r.n_l},
                    {"match", r.matches()}});
    all_ok = all_ok && r.matches();
  }
  out.result["rows"] = rows;
  if (!all_ok) out.exit_code = kCrossCheck;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices, theta series, Siegel densities and orbit counts for orthogonal modular varieties"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string cache_path;
  if (const char* env = std::getenv("ORTHOMOD_CACHE")) cache_path = env;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache", cache_path, "Theta coefficient cache file");

  std::string lattice, method = "closed", form;
  std::int64_t prec = 16, n = 0, t = 0, d = 0, f = 0, max_roots = 14, coeff = 5, m_max = 102;
  bool report = false, sweep = false, all = false;

  auto* theta = app.add_subcommand("theta", "Theta series coefficients");
  theta->add_option("--lattice", lattice)->required();
  theta->add_option("--prec", prec)->check(CLI::PositiveNumber);
  theta->add_option("--method", method)->check(CLI::IsMember({"closed", "enum", "both"}));

  auto* repcount = app.add_subcommand("repcount", "Number of vectors of a given norm");
  repcount->add_option("--lattice", lattice)->required();
  repcount->add_option("--norm", n)->required()->check(CLI::NonNegativeNumber);

  auto* siegel = app.add_subcommand("siegel", "Representation numbers via Siegel's formula");
  siegel->add_option("--form", form)->required()->check(CLI::IsMember({"S5", "A1D4", "A5"}));
  siegel->add_option("--t", t)->required();
  siegel->add_flag("--report", report, "Include local densities and L-values");

  auto* orbits = app.add_subcommand("orbits", "Orbits of primitive polarisation vectors");
  orbits->add_option("--t", t)->required();
  orbits->add_option("--d", d)->required();
  auto* f_opt = orbits->add_option("--f", f);
  auto* sweep_opt = orbits->add_flag("--sweep", sweep, "All t' <= t, d' <= d and admissible f");
  f_opt->excludes(sweep_opt);

  auto* index = app.add_subcommand("index", "Index of the stable orthogonal group");
  index->add_option("--t", t)->required();
  index->add_option("--d", d)->required();
  index->add_option("--f", f)->required();

  auto* e7s = app.add_subcommand("e7-search", "Norm-2d vectors of E7 orthogonal to few roots");
  e7s->add_option("--d", d)->required();
  e7s->add_option("--max-roots", max_roots);
  e7s->add_flag("--all", all, "Include the N_l histogram");

  auto* ineq = app.add_subcommand("inequality", "Root-counting inequality scan");
  ineq->add_option("--coeff", coeff)->check(CLI::IsMember({5, 6}));
  ineq->add_option("--m-max", m_max)->check(CLI::PositiveNumber);

  auto* verd = app.add_subcommand("verdict", "Kodaira dimension verdict");
  verd->add_option("--d", d)->required();

  auto* tab = app.add_subcommand("table1", "Recompute the printed table of E7 vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  std::optional<SeriesCache> cache;
  bool cache_dirty = false;
  try {
    if (!cache_path.empty()) cache = SeriesCache::load(cache_path);
    Output out;
    std::string name;
    if (*theta) {
      name = "theta";
      out = cmd_theta(lattice, prec, method, cache ? &*cache : nullptr, cache_dirty);
    } else if (*repcount) {
      name = "repcount";
      out = cmd_repcount(lattice, n);
    } else if (*siegel) {
      name = "siegel";
      out = cmd_siegel(form, t, report);
    } else if (*orbits) {
      name = "orbits";
      out = cmd_orbits(t, d, *f_opt ? std::optional<std::int64_t>(f) : std::nullopt, sweep);
    } else if (*index) {
      name = "index";
      out = cmd_index(t, d, f);
    } else if (*e7s) {
      name = "e7-search";
      out = cmd_e7_search(d, max_roots, all);
    } else if (*ineq) {
      name = "inequality";
      out = cmd_inequality(coeff, m_max);
    } else if (*verd) {
      name = "verdict";
      out = cmd_verdict(d);
    } else if (*tab) {
      name = "table1";
      out = cmd_table1();
    }
    if (cache && cache_dirty) cache->save(cache_path);
    emit(name, out, format);
    return out.exit_code;
  } catch (const HypothesisViolated& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const CrossCheckFailure& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return kCrossCheck;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
