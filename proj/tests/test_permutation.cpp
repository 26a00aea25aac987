#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "qkp/permutation.hpp"

using namespace qkp;

namespace {

// Bubble sort swap count.
int swaps_to_sort(std::vector<int> v) {
  int n = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        ++n;
      }
  return n;
}

}  // namespace

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_permutation("4213")), "4213");
  EXPECT_TRUE(parse_permutation("e").is_identity());
  EXPECT_TRUE(parse_permutation("1234").is_identity());
  EXPECT_EQ(parse_permutation("1243"), parse_permutation("1,2,4,3"));
  EXPECT_EQ(to_string(parse_permutation("21345")), "21");
  EXPECT_EQ(to_string(parse_permutation("10,2,3,4,5,6,7,8,9,1")), "10,2,3,4,5,6,7,8,9,1");
}

TEST(Permutation, RejectsBadInput) {
  EXPECT_THROW(parse_permutation("3214x"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("113"), std::invalid_argument);
  EXPECT_THROW(parse_permutation("24"), std::invalid_argument);
  EXPECT_THROW(parse_label("(2,1)"), std::invalid_argument);
  EXPECT_THROW(parse_label("(1,2"), std::invalid_argument);
  EXPECT_EQ(parse_label("(1,4)"), Label(1, 4));
}

TEST(Permutation, LengthMatchesSwapCount) {
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& w : all_permutations(n)) ASSERT_EQ(length(w), swaps_to_sort(w.window(n))) << to_string(w);
}

TEST(Permutation, AllPermutationsCount) {
  EXPECT_EQ(all_permutations(1).size(), 1u);
  EXPECT_EQ(all_permutations(4).size(), 24u);
  EXPECT_EQ(all_permutations(5).size(), 120u);
}

TEST(Permutation, TranspositionSwapsValues) {
  const Permutation w = parse_permutation("4213");
  const Permutation x = apply_transposition(w, Label(1, 3));
  EXPECT_EQ(to_string(x), "1243");
  EXPECT_EQ(apply_transposition(x, Label(1, 3)), w);
  // extends past the window
  EXPECT_EQ(to_string(apply_transposition(w, Label(2, 5))), "45132");
}

TEST(Permutation, CyclicPermutation) {
  EXPECT_TRUE(cyclic_permutation(3, 0).is_identity());
  EXPECT_EQ(to_string(cyclic_permutation(2, 2)), "231");
  EXPECT_EQ(to_string(cyclic_permutation(3, 1)), "1243");
  EXPECT_EQ(to_string(cyclic_permutation(3, 2)), "1342");
  for (int k = 1; k <= 5; ++k)
    for (int p = 0; p <= k; ++p) EXPECT_EQ(length(cyclic_permutation(k, p)), p);
  EXPECT_THROW(cyclic_permutation(2, 3), std::invalid_argument);
}

TEST(Permutation, LabelOrder) {
  EXPECT_TRUE(label_precedes(Label(1, 4), Label(1, 3)));
  EXPECT_TRUE(label_precedes(Label(1, 4), Label(2, 4)));
  EXPECT_FALSE(label_precedes(Label(2, 4), Label(1, 4)));
  EXPECT_FALSE(label_precedes(Label(1, 3), Label(3, 4)));
}
