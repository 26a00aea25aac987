#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qkp/proof/element.hpp"

namespace qkp::proof {

// Path helpers shared by the classifier and the maps.
std::vector<Label> labels_of_b(const DirectedPath& p, int m);
std::vector<int> rows_of(const std::vector<Label>& ls);
bool contains(const DirectedPath& p, Label t);
// n_(a,*): number of labels with first index a.
int row_count(const DirectedPath& p, int a);
int column_count(const DirectedPath& p, int b);
std::optional<Label> final_label(const DirectedPath& p);
std::optional<Label> initial_label(const DirectedPath& p);

// Starting from column d0, repeatedly take the final label (a, d) of the
// (*,d)-segment and move to the smallest d' > d with (a, d') in p.
struct ColumnWalk {
  std::vector<int> columns;  // d0 < d1 < ... < d_last
  Label last{1, 2};          // final label of the (*, d_last)-segment
};
ColumnWalk column_walk(const DirectedPath& p, int d0);

// Walk from column k; requires a nonempty (*,k)-segment whose final row a
// has n_(a,*) >= 2.
ColumnWalk kappa_prime(const DirectedPath& p, int k);
// Walk from b(p) = max{b : (k,b) in p}; requires (k,b(p)) not final in its
// segment.
ColumnWalk kappa_double_prime(const DirectedPath& p, int k);

// Outcome of commuting (k-1,k) through the (*,k-1)-segment of a level-(k-2)
// chain. Empty segment means class C.
struct LowerShape {
  bool has_segment = false;  // n_(*,k-1) >= 1
  bool complete = false;     // D1 when true, D2 otherwise
  int t = 0;                 // stopping index t(p) for D2
  bool disjoint = false;     // rows of (*,k) and (*,k-1) segments disjoint
};
LowerShape lower_shape(const DirectedPath& p, int k);

enum class SetId {
  Upper, Lower, Top, BnsY,
  // level k-1, decomposition (1)
  AX, AY, B1X, B1Y, B2X, B2Y, B3X, B3Y,
  // level k-2, decomposition (1)
  CX, CY, D11X, D11Y, D12X, D12Y, D2X, D2Y,
  // level k-1, decomposition (2)
  A1Y3, A2Y, A3Y3, A1Empty, A2Empty, A3Empty, A1Y2, A3Y2,
  B1Empty, BnsY3Circ1, BnsY3Circ2, Bns2Y1, BnsY3Sep, Bns1Empty, Bns2Empty, Bns3Empty, Bns1Y2, Bns3Y2,
  EmptySlice, ThetaOneDomain, ThetaThreeDomain,
  // aggregates
  E, F, G,
  // decomposition (3)
  F1, F21, F22, R, S11, S12a, S12b, S2,
};

std::string_view set_name(SetId s);
// Level implied by the set: k-1, k-2 or k.
int set_level(SetId s, int k);

bool in_set(SetId s, const Element& e, int k);

enum class Decomposition { First = 1, Second = 2, Third = 3 };

// The unique class of `e` in the given decomposition:
//  First:  the eight classes A/B1/B2/B3 x X/Y (level k-1) or C/D11/D12/D2 x X/Y (level k-2);
//  Second: the fine classes of AY and B2Y u B3Y, or X/B1 classes unchanged;
//  Third:  F1/F21/F22 for F, or R/S11/S12a/S12b/S2 at level k.
// Throws std::invalid_argument if e lies outside the decomposition.
SetId classify(const Element& e, int k, Decomposition level);

struct Partition {
  SetId whole;
  std::vector<SetId> parts;
};

// Disjoint-union decompositions; E, F and G are defined by their direct
// characterization, so their rows also check that it matches the union.
const std::vector<Partition>& partitions();

// Elements of `elems` in set s.
std::vector<Element> select(const std::vector<Element>& elems, SetId s, int k);

}  // namespace qkp::proof
