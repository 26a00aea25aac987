#include <gtest/gtest.h>

#include <set>

#include "qkp/proof/bijections.hpp"
#include "qkp/proof/classify.hpp"
#include "qkp/proof/element.hpp"
#include "qkp/proof/insertion.hpp"
#include "qkp/proof/ledger.hpp"
#include "qkp/proof/scanners.hpp"
#include "qkp/verify.hpp"

using namespace qkp;
using namespace qkp::proof;

namespace {

DirectedPath path_of(const char* w, std::vector<Label> ls) { return require_path(parse_permutation(w), ls, "test"); }

const IdentityCheck& find(const std::vector<IdentityCheck>& ids, const std::string& name) {
  for (const auto& c : ids)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

}  // namespace

TEST(Element, Rendering) {
  const Element e{1, 1, path_of("321", {{1, 4}}), {Label(1, 4)}, path_of("4321", {{2, 3}})};
  EXPECT_EQ(to_string(e), "((321 ; (1,4)_B) ; {(1,4)} | (4321 ; (2,3)_Q))");
}

TEST(Element, WeightSignAndMonomial) {
  // one chain label, one mark, one quantum (k,*) Monk label: sign (-1)^(1 - 1 + 1)
  const Element e{1, 1, path_of("321", {{1, 4}}), {Label(1, 4)}, path_of("4321", {{2, 3}})};
  const WeightTerm t = weight(e, 2);
  EXPECT_EQ(t.sign, -1);
  EXPECT_EQ(t.q, QMonomial::variable(2));
  EXPECT_EQ(to_string(t.basis), "4231");

  const Element top = embed(2, 0, DirectedPath(parse_permutation("321")), {});
  const WeightTerm u = weight(top, 2);
  EXPECT_EQ(u.sign, 1);
  EXPECT_EQ(to_string(u.basis), "321");
}

TEST(Element, TopLevelSumIsPieriProduct) {
  for (int n = 2; n <= 3; ++n)
    for (const Permutation& w : all_permutations(n))
      for (int k = 2; k <= 3; ++k) {
        Universe u(w, k);
        for (int p = 0; p <= k; ++p) ASSERT_EQ(sum_weights(u.elements(k, p), k), pieri_expand(w, k, p)) << to_string(w);
      }
}

TEST(Element, EmptyMarkingSliceIsTrivial) {
  Universe u(parse_permutation("321"), 2);
  // the only size-0 marking at level 0 is on the empty chain
  ASSERT_EQ(u.elements(0, 0).size(), enumerate_monk_chains(parse_permutation("321"), 2).size());
  for (const Element& e : u.elements(0, 0)) {
    EXPECT_TRUE(e.chain.empty());
    EXPECT_TRUE(e.marking.empty());
  }
}

TEST(Classes, PartitionsAndRemarks) {
  for (int n = 2; n <= 3; ++n)
    for (const Permutation& w : all_permutations(n))
      for (int k = 2; k <= 3; ++k) {
        Universe u(w, k);
        EXPECT_EQ(check_partitions(u), std::vector<std::string>{}) << to_string(w) << " k=" << k;
        EXPECT_EQ(check_class_remarks(u), std::vector<std::string>{}) << to_string(w) << " k=" << k;
      }
}

TEST(Classes, ClassifyIsConsistentWithMembership) {
  Universe u(parse_permutation("321"), 2);
  for (int g = 0; g <= 2; ++g)
    for (const Element& e : u.elements(1, g)) {
      const SetId s = classify(e, 2, Decomposition::First);
      EXPECT_TRUE(in_set(s, e, 2)) << to_string(e);
      EXPECT_EQ(set_level(s, 2), 1);
    }
}

TEST(Classes, ColumnWalk) {
  const DirectedPath p = path_of("321", {{1, 4}, {2, 4}, {2, 3}});
  const ColumnWalk cw = column_walk(p, 3);
  EXPECT_EQ(cw.columns, (std::vector<int>{3, 4}));
  EXPECT_EQ(cw.last, Label(2, 4));
  EXPECT_EQ(row_count(p, 2), 2);
  EXPECT_EQ(column_count(p, 4), 2);
  EXPECT_EQ(final_label(p), Label(2, 3));
  EXPECT_EQ(initial_label(p), Label(1, 4));
}

TEST(Ledger, IdentitiesHoldAtLevelTwo) {
  for (int n = 2; n <= 3; ++n)
    for (const Permutation& w : all_permutations(n)) {
      Universe u(w, 2);
      for (const auto& c : ledger_identities(u, 2)) EXPECT_TRUE(c.holds()) << to_string(w) << " " << c.name << ": " << render_text(c.residual());
    }
}

TEST(Ledger, DegreeOneBreaksTheAssembly) {
  // top and the class-by-class matching always hold; the assembled identity
  // does not at p = 1
  std::size_t broken = 0;
  for (const Permutation& w : all_permutations(3)) {
    Universe u(w, 2);
    const auto ids = ledger_identities(u, 1);
    EXPECT_TRUE(find(ids, "top").holds());
    EXPECT_TRUE(find(ids, "matched").holds());
    if (!find(ids, "grand").holds()) ++broken;
  }
  EXPECT_GT(broken, 0u);
}

TEST(Ledger, RejectsBadDegree) {
  Universe u(parse_permutation("21"), 2);
  EXPECT_THROW(ledger_identities(u, 0), std::invalid_argument);
  EXPECT_THROW(ledger_identities(u, 3), std::invalid_argument);
  EXPECT_TRUE(class_sum(u, SetId::AY, -1, 0).is_zero());
}

TEST(Maps, FailuresAreObstructed) {
  std::size_t clean = 0, total = 0;
  for (const Permutation& w : all_permutations(3))
    for (int k = 2; k <= 3; ++k) {
      Universe u(w, k);
      for (int p = 1; p <= k; ++p)
        for (const MapInstance& m : map_instances(k, p)) {
          const MapReport r = check_map(u, m);
          ++total;
          if (r.failures.empty()) ++clean;
          else EXPECT_TRUE(r.obstruction.has_value()) << to_string(w) << " k=" << k << " p=" << p << " " << r.name << ": " << r.failures.front();
        }
    }
  EXPECT_GT(clean, total / 2);
}

TEST(Maps, InvolutionsAtLevelTwo) {
  Universe u(parse_permutation("321"), 2);
  for (const MapInstance& m : map_instances(2, 2))
    if (m.involution) EXPECT_TRUE(check_map(u, m).failures.empty()) << m.name;
}

TEST(Insertion, RoundTrips) {
  const auto r = verify::insertion(4, 3, 5);
  EXPECT_TRUE(r.passed()) << verify::to_text(r);
  EXPECT_GT(r.checked, 0u);
}

TEST(Insertion, SingleStep) {
  // (k,d) with nothing in column k lands at the front
  const DirectedPath p(parse_permutation("321"));
  const Insertion ins = insert(p, 2, 4);
  ASSERT_EQ(ins.path.size(), 1u);
  EXPECT_EQ(ins.path.label(0), Label(2, 4));
  const Deletion del = remove(ins.path, 2);
  EXPECT_EQ(del.d, 4);
  EXPECT_EQ(del.path, p);
  EXPECT_EQ(top_row_count(ins.path, 2), 1);
}

TEST(Scanners, ForbiddenPatternsAbsent) {
  for (const std::string& name : scanner_names()) {
    if (name == "row-revisit") continue;
    const ScanReport r = scan(name, 5);
    EXPECT_EQ(r.found, 0u) << name << ": " << (r.counterexamples.empty() ? "" : r.counterexamples.front());
    EXPECT_GT(r.checked, 0u) << name;
  }
}

TEST(Scanners, WeakenedPatternsOccur) {
  for (const std::string& name : scanner_names()) EXPECT_GT(scan(name, 5, true).found, 0u) << name << " weakened: " << weakening(name);
}

TEST(Scanners, UnseparatedPatternOccurs) {
  const ScanReport r = scan("row-revisit", 5);
  EXPECT_GT(r.found, 0u);
  // (e ; (1,2),(1,3),(2,3)) at k = 3, checked directly
  const std::vector<Label> ls{{1, 2}, {1, 3}, {2, 3}};
  EXPECT_TRUE(validate_path(Permutation(), ls).has_value());
  EXPECT_THROW(scan("nope", 3), std::invalid_argument);
}

TEST(EdgeCriterion, MatchesLengths) {
  const auto r = verify::edge_criterion(5, 6);
  EXPECT_TRUE(r.passed()) << verify::to_text(r);
}
