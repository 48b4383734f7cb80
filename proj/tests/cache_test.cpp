#include "stg2/cache.hpp"

#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "stg2/counting.hpp"
#include "stg2/curve.hpp"
#include "stg2/errors.hpp"

namespace fs = std::filesystem;
using namespace stg2;

namespace {

CurveSpec quintic() { return make_curve("quintic", {1, 0, 0, 0, 0, 1, 0}); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("stg2-cache-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

std::string slurp(const fs::path& file) {
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

TEST(Cache, KeyDependsOnCoefficientsOnly) {
  const CurveSpec a = make_curve("first", {1, 0, 0, 0, 0, 1, 0});
  const CurveSpec b = make_curve("second", {1, 0, 0, 0, 0, 1, 0});
  const CurveSpec c = make_curve("first", {1, 1, 0, 0, 0, 1, 0});
  EXPECT_EQ(cache_key(a), cache_key(b));
  EXPECT_NE(cache_key(a), cache_key(c));
  EXPECT_EQ(cache_key(a).size(), 16u);
  EXPECT_EQ(cache_key(a).find_first_not_of("0123456789abcdef"),
            std::string::npos);
}

TEST(Cache, DirPrecedenceFlagOverEnvOverDefault) {
  ::setenv("ST_CACHE_DIR", "/tmp/env-cache", 1);
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/flag-cache")),
            fs::path("/tmp/flag-cache"));
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/env-cache"));
  ::unsetenv("ST_CACHE_DIR");
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("st-cache"));
}

TEST(Cache, SweepWritesHeaderAndAscendingRows) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  const auto rows = ensure_cache(curve, 50, 1, tmp.path.string());
  const auto good = good_primes(curve, 3, 50);
  ASSERT_EQ(rows.size(), good.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].p, good[i]);
    const LPolyCoeffs lp = lpoly(curve, good[i]);
    EXPECT_EQ(rows[i].a1, lp.a1);
    EXPECT_EQ(rows[i].a2, lp.a2);
  }
  const std::string text = slurp(cache_file(tmp.path, curve));
  EXPECT_EQ(text.rfind("p,a1,a2\n", 0), 0u);
  EXPECT_NE(text.find("\n3,0,0\n"), std::string::npos);
}

TEST(Cache, RereadIsByteIdenticalAndAppendExtends) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  ensure_cache(curve, 60, 2, tmp.path.string());
  const std::string first = slurp(cache_file(tmp.path, curve));
  ensure_cache(curve, 60, 2, tmp.path.string());
  EXPECT_EQ(slurp(cache_file(tmp.path, curve)), first);

  const auto extended = ensure_cache(curve, 120, 2, tmp.path.string());
  const std::string second = slurp(cache_file(tmp.path, curve));
  EXPECT_EQ(second.rfind(first, 0), 0u) << "append must not rewrite old rows";
  EXPECT_GT(second.size(), first.size());
  EXPECT_EQ(extended.size(), good_primes(curve, 3, 120).size());

  // Asking below the high-water mark slices without touching the file.
  const auto sliced = ensure_cache(curve, 60, 2, tmp.path.string());
  EXPECT_EQ(sliced.size(), good_primes(curve, 3, 60).size());
  EXPECT_EQ(slurp(cache_file(tmp.path, curve)), second);
}

TEST(Cache, ThreadCountDoesNotChangeBytes) {
  TempDir tmp1, tmp2;
  const CurveSpec curve = quintic();
  ensure_cache(curve, 300, 1, tmp1.path.string());
  ensure_cache(curve, 300, 8, tmp2.path.string());
  EXPECT_EQ(slurp(cache_file(tmp1.path, curve)),
            slurp(cache_file(tmp2.path, curve)));
}

TEST(Cache, RejectsMissingHeader) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  std::ofstream(cache_file(tmp.path, curve)) << "3,0,0\n";
  EXPECT_THROW(read_cache(cache_file(tmp.path, curve), curve), InvariantError);
}

TEST(Cache, RejectsDescendingRows) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  std::ofstream(cache_file(tmp.path, curve))
      << "p,a1,a2\n7,0,0\n3,0,0\n";
  EXPECT_THROW(read_cache(cache_file(tmp.path, curve), curve), InvariantError);
}

TEST(Cache, RejectsWeilViolation) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  std::ofstream(cache_file(tmp.path, curve)) << "p,a1,a2\n3,9,0\n";
  EXPECT_THROW(read_cache(cache_file(tmp.path, curve), curve), InvariantError);
}

TEST(Cache, RejectsBadPrimeRow) {
  TempDir tmp;
  // disc(x^5 + 1) = 5^5, so p = 5 must never appear in its cache.
  const CurveSpec curve = quintic();
  std::ofstream(cache_file(tmp.path, curve)) << "p,a1,a2\n5,0,0\n";
  EXPECT_THROW(read_cache(cache_file(tmp.path, curve), curve), InvariantError);
}

TEST(Cache, RejectsGapInPrimes) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  // Omits p = 7, which is good for x^5 + 1.
  std::ofstream(cache_file(tmp.path, curve))
      << "p,a1,a2\n3,0,0\n11,4,6\n";
  EXPECT_THROW(read_cache(cache_file(tmp.path, curve), curve), InvariantError);
}

TEST(Cache, RejectsMalformedRow) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  std::ofstream(cache_file(tmp.path, curve)) << "p,a1,a2\n3;0;0\n";
  EXPECT_THROW(read_cache(cache_file(tmp.path, curve), curve), InvariantError);
}

TEST(Cache, CachedSourceFeedsCollectSamples) {
  TempDir tmp;
  const CurveSpec curve = quintic();
  const auto rows = ensure_cache(curve, 100, 2, tmp.path.string());
  const auto from_cache =
      collect_samples(curve, {}, 3, 100, cached_lpoly_source(rows));
  const auto direct = collect_samples(curve, {}, 3, 100);
  ASSERT_EQ(from_cache.samples.size(), direct.samples.size());
  for (std::size_t i = 0; i < direct.samples.size(); ++i) {
    EXPECT_EQ(from_cache.samples[i].p, direct.samples[i].p);
    EXPECT_EQ(from_cache.samples[i].a1, direct.samples[i].a1);
    EXPECT_EQ(from_cache.samples[i].a2, direct.samples[i].a2);
  }
  EXPECT_THROW(cached_lpoly_source(rows)(4093), InvariantError);
}

}  // namespace
