#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkp/qbg.hpp"

namespace qkp::proof {

// Shape conditions on a path with labels in L_{k-1} u L_k. Each returns the
// name of the first failed condition, or nothing.
std::optional<std::string> check_shape(const DirectedPath& p, int k);            // (P0)'-(P2)'
std::optional<std::string> check_deletable(const DirectedPath& p, int k);        // (P0)'-(P3)'
std::optional<std::string> check_insertable(const DirectedPath& p, int k, int d);  // (P0)'-(P2)', (C1)-(C3)

int top_row_count(const DirectedPath& p, int k);  // n_(k,*)

struct Insertion {
  DirectedPath path;
  int which_case = 0;     // 1, 2 or 3
  int t = 0;              // stopping index in Case 3
  std::vector<int> moved;  // rows whose (i,k) label was copied to column d
};

// p <- (k,d). Throws std::invalid_argument naming the failed condition.
Insertion insert(const DirectedPath& p, int k, int d);

struct Deletion {
  DirectedPath path;
  int d = 0;
  int which_case = 0;  // 1 or 2
};

// p -> (k,d(p)). Throws std::invalid_argument naming the failed condition.
Deletion remove(const DirectedPath& p, int k);

}  // namespace qkp::proof
