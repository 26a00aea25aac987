#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qkp/chains.hpp"
#include "qkp/expansion.hpp"

namespace qkp::proof {

// A marked chain at level h with a level-k Monk chain attached at its end.
// Top-level pairs (h == k) carry an empty Monk chain.
struct Element {
  int h = 0;
  int g = 0;
  DirectedPath chain;
  Marking marking;
  DirectedPath monk;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Marked chain embedded with an empty Monk chain.
Element embed(int h, int g, DirectedPath chain, Marking marking);

struct WeightTerm {
  int sign = 1;
  QMonomial q;
  Permutation basis;
  friend bool operator==(const WeightTerm&, const WeightTerm&) = default;
};

// sign (-1)^(len(chain) - g + len of the (k,*) part of the Monk chain),
// monomial Q(chain) Q(monk), basis end of the Monk chain.
WeightTerm weight(const Element& e, int k);
Expansion as_expansion(const WeightTerm& t);

template <class Range>
Expansion sum_weights(const Range& elements, int k) {
  Expansion out;
  for (const Element& e : elements) out += as_expansion(weight(e, k));
  return out;
}

// Every ((chain, marking) | monk) with chain a level-h Pieri chain from w,
// marking of size g and monk a level-k Monk chain from its end. When h == k
// the Monk chain is empty. Results are cached per (h, g).
class Universe {
 public:
  Universe(Permutation w, int k);
  const Permutation& w() const { return w_; }
  int k() const { return k_; }
  const std::vector<Element>& elements(int h, int g);

 private:
  Permutation w_;
  int k_;
  std::map<std::pair<int, int>, std::vector<Element>> cache_;
};

// "((321 ; (1,4)_B) ; {(1,4)} | (4321 ; (2,3)_B))"
std::string to_string(const Element& e);

}  // namespace qkp::proof
