#include "stg2/corpus.hpp"

#include <gtest/gtest.h>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace stg2 {
namespace {

TEST(Corpus, FiveEntriesWithFrozenCoefficients) {
  const std::map<std::string, std::array<i64, 7>> expected = {
      {"b_c2_product", {0, 1, 5, -6, -2, 1, 1}},
      {"b_c2_simple", {1, 5, 0, -5, 0, 1, 0}},
      {"e_d4", {120, 192, -12, 0, -6, -48, 15}},
      {"e_d6", {-38880, 329184, 7992, -2124, 12, 1, 0}},
      {"e_d3", {-38880, 329184, 7992, -2124, 12, 1, 0}}};
  ASSERT_EQ(bundled_corpus().size(), 5u);
  for (const CorpusEntry& entry : bundled_corpus()) {
    ASSERT_TRUE(expected.count(entry.curve.name)) << entry.curve.name;
    const auto& want = expected.at(entry.curve.name);
    for (int i = 0; i < 7; ++i) EXPECT_EQ(entry.curve.c[size_t(i)], want[size_t(i)]);
  }
}

TEST(Corpus, ExpectedGroupsAndBaseFields) {
  const std::map<std::string, std::string> groups = {{"b_c2_product", "N(SU(2)xSU(2))"},
                                                     {"b_c2_simple", "N(SU(2)xSU(2))"},
                                                     {"e_d4", "J(E_4)"},
                                                     {"e_d6", "J(E_6)"},
                                                     {"e_d3", "J(E_3)"}};
  for (const CorpusEntry& entry : bundled_corpus()) {
    EXPECT_EQ(entry.expected_group, groups.at(entry.curve.name));
    if (entry.curve.name == "e_d3")
      EXPECT_EQ(entry.curve.base_d, std::vector<long long>{2});
    else
      EXPECT_TRUE(entry.curve.base_d.empty()) << entry.curve.name;
  }
}

TEST(Corpus, Degrees) {
  EXPECT_EQ(find_corpus_entry("b_c2_product")->curve.degree, 6);
  EXPECT_EQ(find_corpus_entry("b_c2_simple")->curve.degree, 5);
  EXPECT_EQ(find_corpus_entry("e_d4")->curve.degree, 6);
  EXPECT_EQ(find_corpus_entry("e_d6")->curve.degree, 5);
  EXPECT_EQ(find_corpus_entry("e_d3")->curve.degree, 5);
}

// The product entry's sextic is x(x-1) times an irreducible quartic; its
// Jacobian splits as a product of elliptic curves swapped by sqrt(-3).
TEST(Corpus, ProductSexticFactors) {
  const std::array<i64, 3> quad = {0, -1, 1};                 // x^2 - x
  const std::array<i64, 5> quartic = {-1, -6, 0, 2, 1};       // x^4 + 2x^3 - 6x - 1
  std::array<i64, 7> conv{};
  for (size_t i = 0; i < quad.size(); ++i)
    for (size_t j = 0; j < quartic.size(); ++j) conv[i + j] += quad[i] * quartic[j];
  const CurveSpec& curve = find_corpus_entry("b_c2_product")->curve;
  for (size_t i = 0; i < 7; ++i) EXPECT_EQ(curve.c[i], conv[i]);
}

TEST(Corpus, AllEntriesHaveAmpleGoodPrimes) {
  for (const CorpusEntry& entry : bundled_corpus()) {
    const std::vector<u32> good = good_primes(entry.curve, 3, 4096);
    EXPECT_GT(good.size(), 500u) << entry.curve.name;
    for (u32 p : good) EXPECT_TRUE(is_good_prime(entry.curve, p));
  }
}

TEST(Corpus, LookupByName) {
  EXPECT_NE(find_corpus_entry("e_d6"), nullptr);
  EXPECT_EQ(find_corpus_entry("e_d6")->curve.name, "e_d6");
  EXPECT_EQ(find_corpus_entry("nonexistent"), nullptr);
  EXPECT_EQ(find_corpus_entry(""), nullptr);
}

}  // namespace
}  // namespace stg2
