#include <gtest/gtest.h>

#include "qkp/expansion.hpp"

using namespace qkp;

TEST(Expansion, DegreeZeroIsIdentityFactor) {
  for (const Permutation& w : all_permutations(4))
    for (int k = 1; k <= 4; ++k) ASSERT_EQ(pieri_expand(w, k, 0), Expansion::basis(w)) << to_string(w);
}

TEST(Expansion, PairFormMatchesCountForm) {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n))
      for (int k = 1; k <= 3; ++k)
        for (int p = 0; p <= k; ++p) ASSERT_EQ(pieri_expand(w, k, p), pieri_expand_by_pairs(w, k, p)) << to_string(w) << " " << k << " " << p;
}

TEST(Expansion, SmallProduct) {
  // G_e G^1_1 = G_{s_1}
  EXPECT_EQ(render_text(pieri_expand(Permutation(), 1, 1)), "G[21]");
  EXPECT_EQ(render_text(Expansion()), "0");
}

TEST(Expansion, TextRoundTrip) {
  for (const Permutation& w : all_permutations(3))
    for (int k = 1; k <= 3; ++k)
      for (int p = 0; p <= k; ++p) {
        const Expansion e = pieri_expand(w, k, p);
        ASSERT_EQ(parse_text(render_text(e)), e) << render_text(e);
        ASSERT_EQ(parse_json(render_json(e)), e) << render_json(e);
        ASSERT_EQ(parse_text(render_text(e, chain_order(w, k))), e);
      }
}

TEST(Expansion, ParseText) {
  const Expansion e = parse_text("G[4312] - 2*Q1*Q2*G[1342] + Q2*G[e]");
  EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(parse_text("0"), Expansion());
  EXPECT_THROW(parse_text("G[44]"), std::invalid_argument);
  EXPECT_THROW(parse_text("G[21] +"), std::invalid_argument);
}

TEST(Expansion, Arithmetic) {
  const Expansion a = parse_text("G[21] + Q1*G[e]");
  const Expansion b = parse_text("G[21] - Q1*G[e]");
  EXPECT_EQ(a + b, parse_text("2*G[21]"));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * QPolynomial(QMonomial::variable(1)), parse_text("Q1*G[21] + Q1^2*G[e]"));
}

TEST(Expansion, ChainOrderStartsAtW) {
  const auto order = chain_order(parse_permutation("321"), 2);
  ASSERT_FALSE(order.empty());
  EXPECT_EQ(to_string(order.front()), "321");
}
