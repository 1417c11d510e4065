// Cache format (version 1):
//
//   orthomod-series-cache 1
//   series <name> <grid> <precision> <count> <fnv1a-64 hex>
//   <coefficient>            (count lines)
//   ...
//
// The checksum covers the coefficient lines, each followed by '\n'.

#include <cstdio>
#include <fstream>
#include <sstream>

#include "orthomod/series.hpp"

namespace orthomod {

namespace {

constexpr const char* kMagic = "orthomod-series-cache";
constexpr int kVersion = 1;

std::uint64_t fnv1a(const std::vector<std::int64_t>& c) {
  std::uint64_t h = 14695981039346656037ull;
  for (auto v : c) {
    for (char ch : std::to_string(v) + "\n") {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

[[noreturn]] void corrupt(const std::string& path, const std::string& why) {
  throw InvalidArgument("series cache " + path + ": " + why);
}

}  // namespace

SeriesCache SeriesCache::load(const std::string& path) {
  SeriesCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic) corrupt(path, "bad header");
  if (version != kVersion) corrupt(path, "unsupported version " + std::to_string(version));
  std::string tag;
  while (in >> tag) {
    if (tag != "series") corrupt(path, "expected 'series'");
    std::string name, checksum;
    std::int64_t grid, precision;
    std::size_t count;
    if (!(in >> name >> grid >> precision >> count >> checksum)) corrupt(path, "bad record header");
    IntSeries s(grid, precision);
    if (count != s.size()) corrupt(path, "coefficient count mismatch for " + name);
    std::vector<std::int64_t> coeffs(count);
    for (auto& c : coeffs)
      if (!(in >> c)) corrupt(path, "truncated record " + name);
    if (hex(fnv1a(coeffs)) != checksum) corrupt(path, "checksum mismatch for " + name);
    for (std::size_t k = 0; k < count; ++k) s[k] = coeffs[k];
    cache.put(name, s);
  }
  return cache;
}

void SeriesCache::save(const std::string& path) const {
  std::ostringstream out;
  out << kMagic << " " << kVersion << "\n";
  for (const auto& e : entries_) {
    const auto& c = e.series.coefficients();
    out << "series " << e.name << " " << e.series.grid() << " " << e.series.precision() << " " << c.size() << " "
        << hex(fnv1a(c)) << "\n";
    for (auto v : c) out << v << "\n";
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw InvalidArgument("series cache: cannot write " + tmp);
    f << out.str();
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InvalidArgument("series cache: cannot replace " + path);
}

const IntSeries* SeriesCache::find(const std::string& name, std::int64_t grid, std::int64_t precision) const {
  for (const auto& e : entries_)
    if (e.name == name && e.series.grid() == grid && e.series.precision() == precision) return &e.series;
  return nullptr;
}

void SeriesCache::put(const std::string& name, const IntSeries& s) {
  if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
    throw InvalidArgument("series cache: names must be non-empty without whitespace");
  for (auto& e : entries_)
    if (e.name == name && e.series.grid() == s.grid() && e.series.precision() == s.precision()) {
      e.series = s;
      return;
    }
  entries_.push_back({name, s});
}

}  // namespace orthomod
