#include <gtest/gtest.h>

#include "qkp/qbg.hpp"

using namespace qkp;

namespace {

int interval_length(Label t) { return 2 * (t.b() - t.a()) - 1; }

}  // namespace

// Bruhat edges raise length by one; quantum edges lower it by 2(b-a)-1.
TEST(QuantumBruhatGraph, EdgesAgreeWithLengths) {
  for (int n = 2; n <= 6; ++n)
    for (const Permutation& x : all_permutations(n))
      for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          const Label t(a, b);
          const int dl = length(apply_transposition(x, t)) - length(x);
          const auto kind = edge_kind(x, t);
          const bool bruhat = dl == 1;
          const bool quantum = dl == -interval_length(t);
          if (bruhat) ASSERT_EQ(kind, EdgeKind::Bruhat) << to_string(x) << " " << to_string(t);
          else if (quantum) ASSERT_EQ(kind, EdgeKind::Quantum) << to_string(x) << " " << to_string(t);
          else ASSERT_FALSE(kind.has_value()) << to_string(x) << " " << to_string(t);
        }
}

TEST(QuantumBruhatGraph, EdgeWeight) {
  EXPECT_TRUE(edge_weight(Label(1, 3), EdgeKind::Bruhat).is_one());
  EXPECT_EQ(edge_weight(Label(1, 3), EdgeKind::Quantum), QMonomial::interval(1, 3));
  EXPECT_EQ(to_string(QMonomial::interval(2, 4)), "Q2*Q3");
}

TEST(QuantumBruhatGraph, PathValidation) {
  const Permutation w = parse_permutation("321");
  const std::vector<Label> twice{{1, 3}, {1, 3}};
  std::size_t bad = 99;
  EXPECT_FALSE(validate_path(w, twice, &bad).has_value());
  EXPECT_EQ(bad, 1u);

  const std::vector<Label> ls{{1, 4}, {2, 4}};
  const auto p = validate_path(w, ls);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(to_string(p->end()), "4312");
  EXPECT_EQ(p->kinds(), (std::vector<EdgeKind>{EdgeKind::Bruhat, EdgeKind::Bruhat}));
  EXPECT_TRUE(q_weight(*p).is_one());
  EXPECT_THROW(require_path(w, twice, "test"), std::logic_error);
}

TEST(QuantumBruhatGraph, QuantumStepWeight) {
  const Permutation w = parse_permutation("321");
  const std::vector<Label> ls{{1, 3}};
  const auto p = validate_path(w, ls);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->kinds().front(), EdgeKind::Quantum);
  EXPECT_EQ(to_string(q_weight(*p)), "Q1*Q2");
  EXPECT_TRUE(p->end().is_identity());
}

TEST(QuantumBruhatGraph, TryAppendLeavesPathOnFailure) {
  DirectedPath p(parse_permutation("21"));
  EXPECT_TRUE(p.try_append(Label(1, 2)));
  EXPECT_TRUE(p.end().is_identity());
  EXPECT_FALSE(p.try_append(Label(1, 3)));
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.end().is_identity());
}
