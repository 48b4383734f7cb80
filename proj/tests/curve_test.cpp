#include "stg2/curve.hpp"

#include <gtest/gtest.h>

namespace stg2 {
namespace {

bigint big(const char* s) { return bigint(s); }

TEST(Resultant, SmallHandComputedCases) {
  // Res(x^2 - 1, 2x) = -4, so disc(x^2 - 1) = 4.
  EXPECT_EQ(resultant({-1, 0, 1}, {0, 2}), bigint(-4));
  // Res(x - a, x - b) = b - a evaluated with a=2, b=5.
  EXPECT_EQ(resultant({-2, 1}, {-5, 1}), bigint(-3));
  // Shared root makes the resultant vanish.
  EXPECT_EQ(resultant({-1, 1}, {-1, 0, 1}), bigint(0));
}

TEST(Discriminant, PowerFormulaFamilies) {
  // disc(x^5 + a) = 5^5 a^4.
  EXPECT_EQ(poly_discriminant({1, 0, 0, 0, 0, 1}), bigint(3125));
  EXPECT_EQ(poly_discriminant({2, 0, 0, 0, 0, 1}), bigint(50000));
  // disc(x^6 + a) = -6^6 a^5.
  EXPECT_EQ(poly_discriminant({1, 0, 0, 0, 0, 0, 1}), bigint(-46656));
  EXPECT_EQ(poly_discriminant({-2, 0, 0, 0, 0, 0, 1}), bigint(46656 * 32));
}

TEST(ParseCurve, AcceptsWellFormedRecord) {
  const CurveSpec quintic = parse_curve("demo: 1 0 0 0 0 1 0");
  EXPECT_EQ(quintic.name, "demo");
  EXPECT_EQ(quintic.degree, 5);
  EXPECT_EQ(quintic.disc, bigint(3125));
  EXPECT_EQ(quintic.leading(), 1);

  const CurveSpec padded = parse_curve("  spaced name  :  1 0 0 0 0 0 1 ");
  EXPECT_EQ(padded.name, "spaced name");
  EXPECT_EQ(padded.degree, 6);
}

TEST(ParseCurve, RejectsMalformedRecords) {
  EXPECT_THROW(parse_curve("no colon 1 2 3"), ConfigError);
  EXPECT_THROW(parse_curve("short: 1 2 3"), ConfigError);
  EXPECT_THROW(parse_curve("long: 1 2 3 4 5 6 7 8"), ConfigError);
  EXPECT_THROW(parse_curve("bad: 1 2 x 4 5 6 7"), ConfigError);
  EXPECT_THROW(parse_curve(": 1 0 0 0 0 1 0"), ConfigError);
}

TEST(ParseCurve, RejectsNonGenus2Models) {
  // All zero coefficients.
  EXPECT_THROW(parse_curve("zero: 0 0 0 0 0 0 0"), ConfigError);
  // Degree 4.
  EXPECT_THROW(parse_curve("quartic: 1 0 0 0 1 0 0"), ConfigError);
  // Singular: x^5 and a repeated-root sextic.
  EXPECT_THROW(parse_curve("cusp: 0 0 0 0 0 1 0"), ConfigError);
  EXPECT_THROW(parse_curve("node: 0 0 1 2 1 0 0"), ConfigError);
}

// Discriminants of the four distinct bundled models, frozen from an
// independent computer-algebra computation.
TEST(Discriminant, BundledCurveValues) {
  const CurveSpec product = parse_curve("a: 0 1 5 -6 -2 1 1");
  EXPECT_EQ(product.disc, bigint(-409600));  // -2^14 * 5^2

  const CurveSpec simple = parse_curve("b: 1 5 0 -5 0 1 0");
  EXPECT_EQ(simple.disc, bigint(28125));  // 3^2 * 5^5

  const CurveSpec d4 = parse_curve("c: 120 192 -12 0 -6 -48 15");
  EXPECT_EQ(d4.disc, big("-8077716527296737705984"));  // -2^49 * 3^15

  const CurveSpec d6 = parse_curve("d: -38880 329184 7992 -2124 12 1 0");
  EXPECT_EQ(d6.disc, big("3629187401902040881781469609984"));  // 2^22 3^36 7^8
}

TEST(GoodPrimes, ExcludesTwoLeadingAndDiscriminantDivisors) {
  const CurveSpec quintic = parse_curve("q: 1 0 0 0 0 1 0");
  EXPECT_FALSE(is_good_prime(quintic, 2));
  EXPECT_TRUE(is_good_prime(quintic, 3));
  EXPECT_FALSE(is_good_prime(quintic, 5));  // 5 divides 3125
  EXPECT_TRUE(is_good_prime(quintic, 7));
  EXPECT_FALSE(is_good_prime(quintic, 9));  // not prime

  const CurveSpec d4 = parse_curve("c: 120 192 -12 0 -6 -48 15");
  EXPECT_FALSE(is_good_prime(d4, 3));  // divides disc and leading coeff
  EXPECT_FALSE(is_good_prime(d4, 5));  // divides leading coeff 15
  EXPECT_TRUE(is_good_prime(d4, 7));
}

TEST(GoodPrimes, CountsBelow4096ForBundledModels) {
  // 563 odd primes below 4096; each model loses only its bad primes.
  EXPECT_EQ(good_primes(parse_curve("a: 0 1 5 -6 -2 1 1"), 3, 4096).size(),
            562u);  // loses 5
  EXPECT_EQ(good_primes(parse_curve("b: 1 5 0 -5 0 1 0"), 3, 4096).size(),
            561u);  // loses 3, 5
  EXPECT_EQ(good_primes(parse_curve("c: 120 192 -12 0 -6 -48 15"), 3, 4096).size(),
            561u);  // loses 3, 5 (leading coefficient 15)
  EXPECT_EQ(
      good_primes(parse_curve("d: -38880 329184 7992 -2124 12 1 0"), 3, 4096).size(),
      561u);  // loses 3, 7
}

TEST(BaseField, ValidationRules) {
  EXPECT_NO_THROW(validate_base_field({}));
  EXPECT_NO_THROW(validate_base_field({2}));
  EXPECT_NO_THROW(validate_base_field({21}));
  EXPECT_NO_THROW(validate_base_field({2, 21}));
  EXPECT_NO_THROW(validate_base_field({-1, 2}));
  EXPECT_THROW(validate_base_field({0}), ConfigError);
  EXPECT_THROW(validate_base_field({1}), ConfigError);
  EXPECT_THROW(validate_base_field({12}), ConfigError);   // not squarefree
  EXPECT_THROW(validate_base_field({2, 8}), ConfigError); // 16 is square
  EXPECT_THROW(validate_base_field({2, 3, 5}), ConfigError);
}

TEST(ParseCurveFile, MultiRecordWithCommentsAndBlanks) {
  const std::string text =
      "# corpus\n"
      "first: 1 0 0 0 0 1 0\n"
      "\n"
      "second: 0 1 5 -6 -2 1 1\n";
  const auto curves = parse_curve_file(text);
  ASSERT_EQ(curves.size(), 2u);
  EXPECT_EQ(curves[0].name, "first");
  EXPECT_EQ(curves[1].degree, 6);
  EXPECT_THROW(parse_curve_file("# only comments\n"), ConfigError);
}

}  // namespace
}  // namespace stg2
