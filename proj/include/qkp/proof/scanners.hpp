#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qkp::proof {

// Exhaustive searches for path configurations that should not occur in the
// quantum Bruhat graph. Direct patterns range over v in S_n with every label
// (a,b) having b <= n; chain patterns range over the k-Pieri chains of every
// w in S_n, 1 <= k < n. Each pattern has a weakened variant with one side
// condition dropped, used to show the search can find something.
struct ScanReport {
  std::string name;
  std::string universe;
  std::size_t checked = 0;                  // candidate configurations tested
  std::vector<std::string> counterexamples;  // capped at `limit`
  std::size_t found = 0;                    // total number found
};

// Names spell the label shape:
//  "jm-im-il", "il-im-jm", "im-jm-jl-ik": direct paths with those labels;
//  "chain-jm-im-il", "chain-im-jm-jl-ik": the same shapes inside Pieri chains;
//  "column-repeat": (a,k), up to two (b,k) with b <= k-2, then (a,k) again;
//  "row-revisit": (a,k-1), (b_i,k-1)..., (a_i,k)..., (a,k), (b,k) with
//  b <= k-1 not among the a_i. This one has solutions. "row-revisit-separate"
//  also requires b <= k-2 and b not among the b_i.
const std::vector<std::string>& scanner_names();
// What the weakened variant drops, for reports.
std::string_view weakening(std::string_view name);

// Throws std::invalid_argument for an unknown name.
ScanReport scan(std::string_view name, int n, bool weakened = false, std::size_t limit = 5);

}  // namespace qkp::proof
