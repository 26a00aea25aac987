#pragma once

#include <string>
#include <vector>

#include "qkp/proof/classify.hpp"

namespace qkp::proof {

// One assembled identity lhs == rhs for a fixed (w, k, p).
struct IdentityCheck {
  std::string name;
  Expansion lhs;
  Expansion rhs;
  bool holds() const { return lhs == rhs; }
  Expansion residual() const { return lhs - rhs; }
};

// sum_weights of the elements of `s` at (h, g); zero when h or g is negative.
Expansion class_sum(Universe& u, SetId s, int h, int g);

// The identities for G_w G^k_p, with k >= 2 and 1 <= p <= k:
//  "top":      pieri_expand = sum over the level-k pairs
//  "ind1":     (pieri_expand - slice(k-1,p-1)) (1 - Q_{k-1}) in terms of the
//              level-(k-1) and level-(k-2) universes
//  "ind2":     pieri_expand after the X-classes are matched away
//  "ind4":     pieri_expand after the B and D classes are matched away
//  "matched":  the F-side and S-side classes cancel class by class
//  "grand":    the ind4 side minus the level-k pairs is zero
std::vector<IdentityCheck> ledger_identities(Universe& u, int p);

// Every element of every universe (h, g) with h in {k-2, k-1, k} and
// 0 <= g <= k lies in exactly one part of each partition it belongs to,
// and the union of the parts equals the whole. Returns failure messages.
std::vector<std::string> check_partitions(Universe& u);

// Consequences stated alongside the classes:
//  B1 => kappa(p) = (k-1,k); B2 or B3 => n_(k-1,*) = 1;
//  BnsY3 with meeting (*,k)-segments: the rows of p_(*,k) that meet the Monk
//  rows are already among the rows before (k-1,k).
std::vector<std::string> check_class_remarks(Universe& u);

}  // namespace qkp::proof
