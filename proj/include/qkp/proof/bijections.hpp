#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qkp/proof/classify.hpp"

namespace qkp::proof {

// One piece of a map's codomain: elements of `set` at (h, g), related to
// their preimage by F(image) = sign * Q_{k-1}^q_power * F(preimage).
struct CodomainPart {
  SetId set;
  int h;
  int g;
  int sign;
  int q_power;
};

struct MapInstance {
  std::string name;  // e.g. "pi5[g=p-1]"
  SetId domain;
  int h;
  int g;
  std::vector<CodomainPart> codomain;
  std::function<Element(const Element&)> forward;
  std::function<Element(const Element&)> inverse;
  bool involution = false;
};

// All map instances for fixed (k, p): pi1..pi8 and theta1..theta4 for
// g in {p-1, p}, chi1..chi6 once. Requires k >= 2 and 1 <= p <= k.
std::vector<MapInstance> map_instances(int k, int p);

// Individual maps; each throws std::logic_error when a construction that
// should always succeed does not (e.g. a rewrite that fails to validate).
Element pi_forward(int i, const Element& q, int k);
Element pi_inverse(int i, const Element& q, int k);
Element theta(int i, const Element& q, int k);  // i = 1, 2, 3: involutions
Element theta4(const Element& q, int k);
Element theta4_inverse(const Element& q, int k);
Element chi_forward(int i, const Element& q, int k);
Element chi_inverse(int i, const Element& q, int k);

struct MapReport {
  std::string name;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  // Set when no bijection with the stated weight rule can exist: the
  // cardinalities or the weight sums of domain and codomain disagree.
  std::optional<std::string> obstruction;
};

// Image in codomain, weight rule, injectivity, equal sizes, and both round
// trips (or theta(theta(q)) = q for involutions).
MapReport check_map(Universe& u, const MapInstance& m);

// Diagnostics gathered while the maps run over a universe.
struct MapStats {
  std::size_t theta4_marked_low_rows = 0;    // marked (j,k-1) with index below t(p)
  std::size_t chi_f_side_kappa_row = 0;      // F-side inverses needing the row of kappa(p)
  std::size_t chi_transport_at_u = 0;        // marked rows first moved by the Case 2 insertion
  std::size_t chi_kappa_row_multiple = 0;    // several columns for the kappa(xi) row
  std::size_t chi_row_multiple = 0;          // several columns for another row
};
MapStats& map_stats();

}  // namespace qkp::proof
