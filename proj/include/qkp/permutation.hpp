#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qkp {

// Element of S_infinity: a one-line window with an implicit identity tail.
// The window is kept canonical (no trailing fixed points), so equality is
// structural.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `window` is a permutation of 1..n.
  explicit Permutation(std::vector<int> window);

  static Permutation identity() { return {}; }

  int operator()(int i) const {
    return i >= 1 && i <= static_cast<int>(window_.size()) ? window_[i - 1] : i;
  }

  // Minimal n >= 1 with this element in S_n.
  int support() const { return window_.empty() ? 1 : static_cast<int>(window_.size()); }
  bool in_sn(int n) const { return static_cast<int>(window_.size()) <= n; }
  bool is_identity() const { return window_.empty(); }

  std::span<const int> window() const { return window_; }
  // Window padded with fixed points up to length n (n >= window().size()).
  std::vector<int> window(int n) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> window_;
};

class Label {
 public:
  // Throws std::invalid_argument unless 1 <= a < b.
  Label(int a, int b);

  int a() const { return a_; }
  int b() const { return b_; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  int a_;
  int b_;
};

int length(const Permutation& w);
Permutation apply_transposition(const Permutation& x, Label t);
// The cycle k-p+1 -> k-p+2 -> ... -> k+1 -> k-p+1; identity for p = 0.
Permutation cyclic_permutation(int k, int p);
// (a,b) precedes (c,d) iff b > d, or b == d and a < c.
bool label_precedes(Label s, Label t);

// All permutations of S_n in lexicographic order of their windows.
std::vector<Permutation> all_permutations(int n);

std::string to_string(const Permutation& w);
std::string to_string(Label t);
// Accepts "e", "4213", and "10,2,3,...". Throws std::invalid_argument.
Permutation parse_permutation(std::string_view text);
// Accepts "(a,b)". Throws std::invalid_argument.
Label parse_label(std::string_view text);

}  // namespace qkp
