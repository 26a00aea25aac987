#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "qkp/chains.hpp"

using namespace qkp;

namespace {

// Every label sequence over a <= k < b <= bmax of length <= max_len that is a
// path from w and satisfies is_pieri_chain.
std::size_t brute_chain_count(const Permutation& w, int k) {
  const int bmax = std::max(w.support(), k) + 1;
  std::vector<Label> pool;
  for (int a = 1; a <= k; ++a)
    for (int b = k + 1; b <= bmax; ++b) pool.emplace_back(a, b);
  const std::size_t max_len = pool.size();
  std::size_t count = 0;
  std::function<void(DirectedPath&)> rec = [&](DirectedPath& p) {
    if (is_pieri_chain(p, k)) ++count;
    if (p.size() == max_len) return;
    for (Label t : pool) {
      DirectedPath q = p;
      if (q.try_append(t)) rec(q);
    }
  };
  DirectedPath start(w);
  rec(start);
  return count;
}

std::size_t brute_marking_count(const DirectedPath& p, int size) {
  std::vector<Label> distinct(p.labels().begin(), p.labels().end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::size_t count = 0;
  const std::size_t n = distinct.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<int>(__builtin_popcountll(mask)) != size) continue;
    Marking m;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) m.insert(distinct[i]);
    if (is_marking(p, m)) ++count;
  }
  return count;
}

DirectedPath path_of(const char* w, std::vector<Label> ls) { return require_path(parse_permutation(w), ls, "test"); }

}  // namespace

TEST(PieriChains, KnownCounts) {
  EXPECT_EQ(enumerate_pieri_chains(parse_permutation("321"), 2).size(), 14u);
  EXPECT_EQ(enumerate_pieri_chains(parse_permutation("32514"), 3).size(), 26u);
  EXPECT_EQ(enumerate_pieri_chains(Permutation(), 1).size(), 2u);
  EXPECT_EQ(enumerate_pieri_chains(parse_permutation("321"), 0).size(), 1u);
}

TEST(PieriChains, EnumerationMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (const Permutation& w : all_permutations(n))
      for (int k = 1; k <= 3; ++k) ASSERT_EQ(enumerate_pieri_chains(w, k).size(), brute_chain_count(w, k)) << to_string(w) << " k=" << k;
}

TEST(PieriChains, EnumeratedChainsAreValidAndDistinct) {
  for (const Permutation& w : all_permutations(4))
    for (int k = 1; k <= 3; ++k) {
      const auto cs = enumerate_pieri_chains(w, k);
      std::vector<DirectedPath> ps;
      for (const auto& c : cs) {
        ASSERT_TRUE(is_pieri_chain(c.path(), k));
        for (Label t : c.path().labels()) ASSERT_TRUE(t.a() <= k && k < t.b());
        ps.push_back(c.path());
      }
      std::sort(ps.begin(), ps.end());
      ASSERT_EQ(std::adjacent_find(ps.begin(), ps.end()), ps.end());
    }
}

TEST(PieriChains, ConstructorRejectsNonChains) {
  // second indices must not increase
  EXPECT_THROW(PieriChain(path_of("321", {{2, 3}, {1, 4}}), 2), std::invalid_argument);
  EXPECT_NO_THROW(PieriChain(path_of("321", {{1, 4}, {2, 4}}), 2));
}

TEST(PieriChains, Segments) {
  const DirectedPath p = path_of("321", {{1, 4}, {2, 4}, {2, 3}});
  EXPECT_EQ(segment_of_b(p, 4), (Segment{0, 2}));
  EXPECT_EQ(segment_of_b(p, 3), (Segment{2, 3}));
  EXPECT_TRUE(segment_of_b(p, 5).empty());
}

TEST(MonkChains, KnownCountAndShape) {
  const auto ms = enumerate_monk_chains(parse_permutation("321"), 1);
  EXPECT_EQ(ms.size(), 8u);
  for (const auto& m : ms) {
    ASSERT_TRUE(is_monk_chain(m.path(), 1));
    ASSERT_EQ(m.star_k_length() + m.k_star_length(), m.path().size());
    for (std::size_t i = 0; i < m.path().size(); ++i) {
      const Label t = m.path().label(i);
      ASSERT_TRUE(i < m.star_k_length() ? t.b() == 1 : t.a() == 1);
    }
  }
}

TEST(Markings, ForcedAndFreeLabels) {
  // (1,4) opens the path and is always marked
  const DirectedPath p = path_of("321", {{1, 4}, {2, 4}});
  EXPECT_TRUE(is_marking(p, {Label(1, 4), Label(2, 4)}));
  EXPECT_TRUE(is_marking(p, {Label(1, 4)}));
  EXPECT_FALSE(is_marking(p, {Label(2, 4)}));
  EXPECT_EQ(marking_count(p, 2), 1u);
  EXPECT_EQ(marking_count(p, 1), 1u);

  // two labels in one row cannot both be marked
  const DirectedPath q = path_of("321", {{1, 4}, {1, 3}});
  EXPECT_EQ(to_string(q), "(321 ; (1,4)_B, (1,3)_Q)");
  EXPECT_EQ(marking_count(q, 2), 0u);
  const auto ms = enumerate_markings(q, 1);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(*ms.front().begin(), Label(1, 4));

  const DirectedPath empty(parse_permutation("321"));
  EXPECT_EQ(marking_count(empty, 0), 1u);
  EXPECT_EQ(marking_count(empty, 1), 0u);
}

TEST(Markings, ClosedFormMatchesSubsetSearch) {
  for (int n = 1; n <= 4; ++n)
    for (const Permutation& w : all_permutations(n))
      for (int k = 1; k < std::max(n, 2); ++k)
        for (const auto& c : enumerate_pieri_chains(w, k))
          for (int p = 0; p <= k; ++p) {
            const std::size_t brute = brute_marking_count(c.path(), p);
            ASSERT_EQ(marking_count(c, p), brute) << to_string(c.path());
            ASSERT_EQ(enumerate_markings(c, p).size(), brute);
          }
}

TEST(Markings, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 0), 1u);
  EXPECT_EQ(binomial(2, 3), 0u);
  EXPECT_EQ(binomial(3, -1), 0u);
}
