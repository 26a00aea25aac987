#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qkp/permutation.hpp"
#include "qkp/qpoly.hpp"

namespace qkp {

// Finite Z[Q]-combination of the formal basis symbols G[u].
class Expansion {
 public:
  Expansion() = default;
  static Expansion basis(const Permutation& u, const QPolynomial& c = QPolynomial(1));

  const std::map<Permutation, QPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QPolynomial coefficient(const Permutation& u) const;

  void add(const Permutation& u, const QPolynomial& c);
  Expansion& operator+=(const Expansion& o);
  Expansion& operator-=(const Expansion& o);
  Expansion& operator*=(const QPolynomial& c);
  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
  friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
  friend Expansion operator*(Expansion a, const QPolynomial& c) { return a *= c; }

  Expansion at_q_zero() const;
  // Keep only basis elements lying in S_n.
  Expansion restricted_to_sn(int n) const;

  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  std::map<Permutation, QPolynomial> terms_;
};

// Count form: sum over chains of (-1)^(len-p) * #markings * Q(chain) * G[end].
Expansion pieri_expand(const Permutation& w, int k, int p);
// Pair form: one term per (chain, marking).
Expansion pieri_expand_by_pairs(const Permutation& w, int k, int p);
// (1 - Q_k)(1 - x_k) G[x] in the basis, from the Monk chains at level k.
Expansion monk_lhs_expand(const Permutation& x, int k);
// Left fold of pieri_expand over `factors` = [(k, p), ...] starting from G[w].
Expansion expand_product_chain(const Permutation& w, const std::vector<std::pair<int, int>>& factors);

// Basis terms ordered by (length, window).
std::vector<std::pair<Permutation, QPolynomial>> ordered_terms(const Expansion& e);

// "G[4312] - Q1*Q2*G[1342] + ..."; the zero expansion renders as "0".
std::string render_text(const Expansion& e);
// Same, with the basis elements listed in `order` first, in that order.
std::string render_text(const Expansion& e, const std::vector<Permutation>& order);
// Ends of the k-Pieri chains of w in enumeration order, without repeats; the
// order in which the terms of pieri_expand(w, k, p) are usually written.
std::vector<Permutation> chain_order(const Permutation& w, int k);
// [{"perm": "4312", "terms": [{"q": [[1,1],[2,1]], "c": -1}]}, ...]
std::string render_json(const Expansion& e, int indent = -1);
// Inverses of the two renderings. Throw std::invalid_argument.
Expansion parse_text(std::string_view text);
Expansion parse_json(std::string_view text);

}  // namespace qkp
