#include "stg2/fp.hpp"

#include <gtest/gtest.h>

#include "stg2/rng.hpp"

namespace stg2 {
namespace {

TEST(Primes, SmallValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(3));
  EXPECT_FALSE(is_prime(4));
  EXPECT_TRUE(is_prime(4093));
  EXPECT_FALSE(is_prime(4095));
  EXPECT_TRUE(is_prime(1000003));
}

TEST(Primes, RangeSieve) {
  const std::vector<u32> expected = {3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47};
  EXPECT_EQ(primes_in_range(3, 50), expected);
  EXPECT_EQ(primes_in_range(3, 4096).size(), 563u);
  EXPECT_TRUE(primes_in_range(24, 28).empty());
}

TEST(Legendre, MatchesSquareMarkingTable) {
  for (u32 p : {3u, 5u, 7u, 11u, 13u, 17u, 4093u}) {
    const auto chi = chi_table(p);
    long long sum = 0;
    for (u32 x = 0; x < p; ++x) {
      EXPECT_EQ(legendre(x, p), int(chi[x])) << "p=" << p << " x=" << x;
      sum += chi[x];
    }
    EXPECT_EQ(sum, 0) << "p=" << p;  // equally many residues and nonresidues
  }
}

TEST(Legendre, NegativeArguments) {
  // (-1/p) = 1 iff p = 1 mod 4.
  EXPECT_EQ(legendre(-1, 5), 1);
  EXPECT_EQ(legendre(-1, 13), 1);
  EXPECT_EQ(legendre(-1, 7), -1);
  EXPECT_EQ(legendre(-1, 11), -1);
  EXPECT_EQ(legendre(-4, 7), -1);
  EXPECT_EQ(legendre(-9, 11), -1);
}

TEST(Legendre, LeastNonresidues) {
  EXPECT_EQ(least_nonresidue(3), 2u);
  EXPECT_EQ(least_nonresidue(5), 2u);
  EXPECT_EQ(least_nonresidue(7), 3u);
  EXPECT_EQ(least_nonresidue(11), 2u);
  EXPECT_EQ(least_nonresidue(17), 3u);
  EXPECT_EQ(least_nonresidue(73), 5u);
  EXPECT_EQ(least_nonresidue(4093), 2u);  // 4093 = 5 mod 8
}

TEST(BarrettReduction, MatchesBuiltinModulo) {
  Rng rng(1);
  for (u64 m : {3ull, 17ull, 4093ull, 1048573ull}) {
    const Barrett bar(m);
    for (int i = 0; i < 20000; ++i) {
      const u64 x = rng.next_below(m * m * m);
      ASSERT_EQ(bar.reduce(x), x % m);
    }
  }
}

TEST(Fp2Field, GeneratorRelationAndUnitGroup) {
  for (u32 p : {3u, 5u, 7u, 11u, 13u}) {
    const Fp2 k(p);
    // w^2 = r by construction.
    EXPECT_EQ(k.mul(k.make(0, 1), k.make(0, 1)), k.make(k.nonresidue()));
    // x^(p^2 - 1) = 1 for every nonzero x.
    for (u64 idx = 1; idx < k.order(); ++idx) {
      ASSERT_EQ(k.pow(k.from_index(idx), k.order() - 1), k.make(1));
    }
  }
}

TEST(Fp2Field, NormMultiplicative) {
  for (u32 p : {3u, 5u, 7u}) {
    const Fp2 k(p);
    for (u64 i = 0; i < k.order(); ++i) {
      for (u64 j = 0; j < k.order(); ++j) {
        const auto x = k.from_index(i), y = k.from_index(j);
        ASSERT_EQ(k.norm(k.mul(x, y)), u64(k.norm(x)) * k.norm(y) % p);
      }
    }
  }
}

// chi on F_{p^2} computed via norms agrees with exhaustive squaring.
TEST(Fp2Field, ChiMatchesExhaustiveSquares) {
  for (u32 p : {3u, 5u, 7u, 11u}) {
    const Fp2 k(p);
    std::vector<int> is_square(k.order(), 0);
    for (u64 idx = 0; idx < k.order(); ++idx) {
      const auto sq = k.mul(k.from_index(idx), k.from_index(idx));
      is_square[u64(sq.b) * p + sq.a] = 1;
    }
    u64 squares = 0;
    for (u64 idx = 0; idx < k.order(); ++idx) {
      const auto x = k.from_index(idx);
      const int expected = idx == 0 ? 0 : (is_square[idx] ? 1 : -1);
      ASSERT_EQ(k.chi(x), expected) << "p=" << p << " idx=" << idx;
      if (idx > 0 && is_square[idx]) ++squares;
    }
    EXPECT_EQ(squares, (k.order() - 1) / 2);
  }
}

// Every nonzero element of the base field is a square in F_{p^2}.
TEST(Fp2Field, BaseFieldElementsAreSquares) {
  const Fp2 k(13);
  for (u32 a = 1; a < 13; ++a) EXPECT_EQ(k.chi(k.make(a)), 1);
}

}  // namespace
}  // namespace stg2
