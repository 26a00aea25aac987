#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "qkp/qbg.hpp"

namespace qkp {

// Half-open index range [begin, end) into a path's label list.
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;
  bool empty() const { return begin == end; }
  std::size_t size() const { return end - begin; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// Maximal contiguous run of labels with second index m. For paths with weakly
// decreasing second indices this is the (*,m)-segment; when empty, begin == end
// is the position where such labels would go.
Segment segment_of_b(const DirectedPath& p, int m);

// (P0)-(P2) for level k. Level 0 admits only the empty path.
bool is_pieri_chain(const DirectedPath& p, int k);

class PieriChain {
 public:
  // Throws std::invalid_argument if `path` violates (P0)-(P2).
  PieriChain(DirectedPath path, int k);
  const DirectedPath& path() const { return path_; }
  int k() const { return k_; }

 private:
  DirectedPath path_;
  int k_;
};

// Every k-Pieri chain from w, in lexicographic order of label sequences under
// label_precedes (prefixes first). Labels are searched up to
// b <= max(support(w), k) + 1; throws std::logic_error if an edge beyond that
// bound is found where the chain conditions would admit it. k == 0 yields
// only the empty chain.
std::vector<PieriChain> enumerate_pieri_chains(const Permutation& w, int k);

bool is_monk_chain(const DirectedPath& m, int k);

class MonkChain {
 public:
  MonkChain(DirectedPath path, int k);
  const DirectedPath& path() const { return path_; }
  int k() const { return k_; }
  // Lengths of the (*,k) part and of the (k,*) part.
  std::size_t star_k_length() const { return s_; }
  std::size_t k_star_length() const { return path_.size() - s_; }

 private:
  DirectedPath path_;
  int k_;
  std::size_t s_;
};

// Number of leading (a,k) labels of a Monk chain at level k.
std::size_t monk_star_k_length(const DirectedPath& m, int k);

// All k-Monk chains from x; the (k,b) labels are searched up to
// b <= max(support(x), k) + 1 with the same runtime audit as above.
std::vector<MonkChain> enumerate_monk_chains(const Permutation& x, int k);

using Marking = std::set<Label>;

// Conditions (1)-(3) of a marking, without a size requirement.
bool is_marking(const DirectedPath& p, const Marking& m);

// All markings of size `size`, ordered lexicographically by the positions of
// their labels along the path.
std::vector<Marking> enumerate_markings(const DirectedPath& p, int size);
inline std::vector<Marking> enumerate_markings(const PieriChain& c, int size) {
  return enumerate_markings(c.path(), size);
}

// Closed form binomial(m0 - m, size - m), where m0 counts the distinct rows
// and m the forced labels; 0 when a forced label repeats an earlier row.
std::uint64_t marking_count(const DirectedPath& p, int size);
inline std::uint64_t marking_count(const PieriChain& c, int size) { return marking_count(c.path(), size); }

std::uint64_t binomial(std::int64_t n, std::int64_t r);

// Labels of `m` listed in path order.
std::vector<Label> in_path_order(const DirectedPath& p, const Marking& m);

}  // namespace qkp
