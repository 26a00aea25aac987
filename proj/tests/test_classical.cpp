#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>

#include "qkp/classical.hpp"

using namespace qkp;

TEST(Grothendieck, SmallPolynomials) {
  EXPECT_EQ(grothendieck_poly(Permutation(), 3), XPolynomial(1));
  EXPECT_EQ(grothendieck_poly(parse_permutation("21"), 3), XPolynomial::variable(1));
  // G_{s_2} = x1 + x2 - x1 x2
  const XPolynomial x1 = XPolynomial::variable(1), x2 = XPolynomial::variable(2);
  EXPECT_EQ(grothendieck_poly(parse_permutation("132"), 3), x1 + x2 - x1 * x2);
  EXPECT_EQ(grothendieck_poly(parse_permutation("321"), 3), x1 * x1 * x2);
}

TEST(Grothendieck, DividedDifferences) {
  const XPolynomial x1 = XPolynomial::variable(1);
  EXPECT_EQ(divided_difference(1, x1), XPolynomial(1));
  EXPECT_TRUE(divided_difference(1, XPolynomial(5)).is_zero());
  // isobaric operators descend the Grothendieck family
  EXPECT_EQ(isobaric(1, grothendieck_poly(parse_permutation("321"), 3)), grothendieck_poly(parse_permutation("231"), 3));
}

TEST(Classical, PieriAtQZero) {
  for (int n = 1; n <= 3; ++n)
    for (const Permutation& w : all_permutations(n))
      for (int k = 1; k <= n; ++k)
        for (int p = 0; p <= k; ++p) ASSERT_TRUE(verify_pieri_at_q0(w, k, p)) << to_string(w) << " " << k << " " << p;
  EXPECT_TRUE(verify_pieri_at_q0(parse_permutation("32514"), 3, 2));
}

TEST(Classical, MonkAtQZero) {
  for (const Permutation& x : all_permutations(4))
    for (int k = 1; k < 4; ++k) ASSERT_TRUE(verify_monk_at_q0(x, k)) << to_string(x) << " " << k;
}

TEST(Classical, CyclicRecurrence) {
  for (int k = 2; k <= 4; ++k)
    for (int p = 1; p <= k; ++p) EXPECT_TRUE(verify_recurrence_at_q0(k, p, k + 1)) << k << " " << p;
}

TEST(Classical, OverflowChecks) {
  EXPECT_THROW(checked_add(INT64_MAX, 1), std::overflow_error);
  EXPECT_THROW(checked_mul(INT64_MAX, 2), std::overflow_error);
  EXPECT_EQ(checked_mul(-3, 4), -12);
}
