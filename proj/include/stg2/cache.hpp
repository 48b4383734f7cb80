#pragma once

// Persistent L-polynomial cache. One CSV per curve, keyed by a content hash
// of the coefficient list so renames never invalidate results. Files hold
// `p,a1,a2` rows for every good prime, ascending, and are append-only: a
// larger sweep extends the file, re-reads validate every row.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "stg2/counting.hpp"
#include "stg2/curve.hpp"
#include "stg2/errors.hpp"

namespace stg2 {

// FNV-1a 64-bit over the decimal coefficient list "c0,c1,...,c6".
inline std::string cache_key(const CurveSpec& curve) {
  std::string text;
  for (int k = 0; k < 7; ++k) {
    if (k) text += ',';
    text += std::to_string(curve.c[k]);
  }
  u64 h = 0xcbf29ce484222325ull;
  for (unsigned char byte : text) {
    h ^= byte;
    h *= 0x100000001b3ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

inline std::filesystem::path resolve_cache_dir(
    const std::optional<std::string>& override_dir) {
  if (override_dir && !override_dir->empty()) return *override_dir;
  if (const char* env = std::getenv("ST_CACHE_DIR"); env && *env) return env;
  return "st-cache";
}

struct CacheEntry {
  u32 p = 0;
  i64 a1 = 0;
  i64 a2 = 0;
};

inline std::filesystem::path cache_file(const std::filesystem::path& dir,
                                        const CurveSpec& curve) {
  return dir / (cache_key(curve) + ".csv");
}

// Parse + validate a cache file: header, ascending good primes with no
// gaps, integral rows satisfying the Weil bounds. Returns rows in order.
inline std::vector<CacheEntry> read_cache(const std::filesystem::path& file,
                                          const CurveSpec& curve) {
  std::vector<CacheEntry> rows;
  std::ifstream in(file);
  if (!in) return rows;
  std::string line;
  if (!std::getline(in, line) || (line != "p,a1,a2" && line != "p,a1,a2\r")) {
    throw InvariantError("cache " + file.string() + ": missing p,a1,a2 header");
  }
  u32 prev = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    CacheEntry e;
    char comma1 = 0, comma2 = 0;
    std::istringstream row(line);
    if (!(row >> e.p >> comma1 >> e.a1 >> comma2 >> e.a2) || comma1 != ',' ||
        comma2 != ',') {
      throw InvariantError("cache " + file.string() + ": malformed row " + line);
    }
    if (e.p <= prev) {
      throw InvariantError("cache " + file.string() + ": rows not ascending");
    }
    if (!is_good_prime(curve, e.p)) {
      throw InvariantError("cache " + file.string() + ": row for bad prime " +
                           std::to_string(e.p));
    }
    check_weil({e.p, e.a1, e.a2}, "cache row p=" + std::to_string(e.p));
    prev = e.p;
    rows.push_back(e);
  }
  // Append-only contract: the cached set is exactly the good primes up to
  // the high-water mark.
  if (!rows.empty()) {
    const auto expected = good_primes(curve, 3, rows.back().p);
    if (expected.size() != rows.size()) {
      throw InvariantError("cache " + file.string() + ": prime gaps detected");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].p != expected[i]) {
        throw InvariantError("cache " + file.string() + ": prime gaps detected");
      }
    }
  }
  return rows;
}

// Compute L-polynomials for the given primes. Work is distributed
// round-robin over threads into index-addressed slots, so the output order
// (and therefore every downstream artifact) is independent of scheduling.
inline std::vector<CacheEntry> compute_lpolys(const CurveSpec& curve,
                                              const std::vector<u32>& primes,
                                              unsigned threads) {
  std::vector<CacheEntry> out(primes.size());
  if (primes.empty()) return out;
  threads = std::max(1u, std::min<unsigned>(threads, primes.size()));
  auto worker = [&](unsigned tid) {
    for (std::size_t i = tid; i < primes.size(); i += threads) {
      const LPolyCoeffs lp = lpoly(curve, primes[i]);
      out[i] = {primes[i], lp.a1, lp.a2};
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return out;
}

// Ensure the cache covers all good primes up to pmax; compute and append
// whatever is missing. Returns entries for good primes in [3, pmax].
inline std::vector<CacheEntry> ensure_cache(
    const CurveSpec& curve, u32 pmax, unsigned threads,
    const std::optional<std::string>& dir_override = std::nullopt) {
  const auto dir = resolve_cache_dir(dir_override);
  std::filesystem::create_directories(dir);
  const auto file = cache_file(dir, curve);
  std::vector<CacheEntry> rows = read_cache(file, curve);

  const u32 high_water = rows.empty() ? 2 : rows.back().p;
  if (high_water < pmax) {
    const auto missing =
        good_primes(curve, std::max(3u, high_water + 1), pmax);
    if (!missing.empty()) {
      const auto fresh = compute_lpolys(curve, missing, threads);
      std::ofstream out(file, std::ios::app);
      if (!out) throw ConfigError("cannot open cache file " + file.string());
      if (rows.empty()) out << "p,a1,a2\n";
      for (const auto& e : fresh) {
        out << e.p << ',' << e.a1 << ',' << e.a2 << '\n';
      }
      rows.insert(rows.end(), fresh.begin(), fresh.end());
    }
  }
  while (!rows.empty() && rows.back().p > pmax) rows.pop_back();
  return rows;
}

// Cache-backed lookup for collect_samples: primes come from one sweep.
inline std::function<LPolyCoeffs(u32)> cached_lpoly_source(
    const std::vector<CacheEntry>& rows) {
  return [&rows](u32 p) -> LPolyCoeffs {
    auto it = std::lower_bound(
        rows.begin(), rows.end(), p,
        [](const CacheEntry& e, u32 key) { return e.p < key; });
    if (it == rows.end() || it->p != p) {
      throw InvariantError("prime " + std::to_string(p) + " missing from cache");
    }
    return {it->p, it->a1, it->a2};
  };
}

}  // namespace stg2
