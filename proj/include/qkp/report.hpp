#pragma once

#include <string>
#include <vector>

#include "qkp/chains.hpp"

namespace qkp {

// One row of a chain table: a k-Pieri chain and its p-markings.
struct ChainRow {
  DirectedPath chain;
  std::vector<Marking> markings;
};

std::vector<ChainRow> chain_table(const Permutation& w, int k, int p);

// "{(1,4),(2,4)}"; labels in path order.
std::string render_marking(const DirectedPath& chain, const Marking& m);
// "(w ; (1,4)_B, (2,4)_B) | {(1,4),(2,4)} | 4312". Several markings are
// comma separated; none prints as "∅".
std::string render_row(const ChainRow& row);
// Header "chain | Mark_p | end", then one line per row.
std::string render_chain_table(const std::vector<ChainRow>& rows, int p);
// [{"chain": [[a,b,"B"],...], "markings": [[[a,b],...],...], "end": "4312"}, ...]
std::string chain_table_json(const std::vector<ChainRow>& rows, int indent = -1);

// "chain | closed form | enumerated | Mark_p", one line per chain.
std::string render_marking_counts(const Permutation& w, int k, int p);

}  // namespace qkp
