#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qkp/permutation.hpp"
#include "qkp/qpoly.hpp"

namespace qkp {

enum class EdgeKind { Bruhat, Quantum };

// Window criterion: Bruhat iff x(a) < x(b) and no x(c), a < c < b, lies in
// [x(a), x(b)]; quantum iff x(a) > x(b) and every such x(c) lies in [x(b), x(a)].
std::optional<EdgeKind> edge_kind(const Permutation& x, Label t);

// Weight of a single edge: Q_a ... Q_{b-1} for quantum edges, 1 otherwise.
QMonomial edge_weight(Label t, EdgeKind kind);

class DirectedPath {
 public:
  explicit DirectedPath(Permutation start = {});

  const Permutation& start() const { return vertices_.front(); }
  const Permutation& end() const { return vertices_.back(); }
  // vertex(i) is the permutation reached after i steps.
  const Permutation& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<EdgeKind>& kinds() const { return kinds_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  // Returns false (and leaves the path unchanged) if t is not an edge at end().
  bool try_append(Label t);

  friend bool operator==(const DirectedPath& x, const DirectedPath& y) {
    return x.start() == y.start() && x.labels_ == y.labels_;
  }
  friend auto operator<=>(const DirectedPath& x, const DirectedPath& y) {
    if (auto c = x.start() <=> y.start(); c != 0) return c;
    return x.labels_ <=> y.labels_;
  }

 private:
  std::vector<Permutation> vertices_;
  std::vector<Label> labels_;
  std::vector<EdgeKind> kinds_;
};

// Absent at the first non-edge; index of that step in `failing_index` if given.
std::optional<DirectedPath> validate_path(const Permutation& start, std::span<const Label> labels,
                                          std::size_t* failing_index = nullptr);
// Like validate_path but throws std::logic_error naming `what` on failure.
DirectedPath require_path(const Permutation& start, std::span<const Label> labels, const std::string& what);

QMonomial q_weight(const DirectedPath& p);

// Local rewrites of a two-step path (v; s, t). Returns the replacement pairs
// that validate; empty when none does. Throws std::invalid_argument if (s, t)
// does not have the shape required by `which_case` or (v; s, t) is not a path.
std::vector<std::pair<Label, Label>> local_transform(const Permutation& v, int which_case, Label s, Label t);

struct AlgorithmOutcome {
  bool complete = false;  // true: u reached 0; false: stopped in the swap-row form at step u
  int u = 0;
  DirectedPath path;
  // Some step had both rewrites valid; the commuting one was taken.
  bool both_valid_seen = false;
};

// Commutes (k,d) leftwards through the trailing run (j_1,k),...,(j_t,k) of
// `path` that begins at `segment_start`. Throws std::invalid_argument on shape
// violations and std::logic_error if neither rewrite validates at some step.
AlgorithmOutcome algorithm_skd(const DirectedPath& path, std::size_t segment_start, int k, int d);

std::string to_string(EdgeKind kind);
// "(w ; (1,4)_B, (2,4)_Q)" with the start printed in place of w when
// `start_name` is empty.
std::string to_string(const DirectedPath& p, const std::string& start_name = "");

}  // namespace qkp
