#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qkp/expansion.hpp"
#include "qkp/permutation.hpp"

namespace qkp {

// Sparse polynomial in x_1, x_2, ... with int64 coefficients. Exponent
// vectors are stored without trailing zeros.
class XPolynomial {
 public:
  using Exponents = std::vector<int>;

  XPolynomial() = default;
  XPolynomial(std::int64_t c);  // NOLINT: constants convert implicitly
  static XPolynomial monomial(Exponents e, std::int64_t c = 1);
  static XPolynomial variable(int i);  // x_i

  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  XPolynomial& operator+=(const XPolynomial& o);
  XPolynomial& operator-=(const XPolynomial& o);
  XPolynomial& operator*=(const XPolynomial& o);
  friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
  friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
  friend XPolynomial operator*(XPolynomial a, const XPolynomial& b) { return a *= b; }

  // Exchange x_i and x_{i+1}.
  XPolynomial swapped(int i) const;

  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

 private:
  void add_term(Exponents e, std::int64_t c);
  std::map<Exponents, std::int64_t> terms_;
};

// (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial.
XPolynomial divided_difference(int i, const XPolynomial& f);
// d_i((1 - x_{i+1}) f)
XPolynomial isobaric(int i, const XPolynomial& f);

// Classical Grothendieck polynomial of w in S_n, obtained from
// x_1^{n-1} x_2^{n-2} ... x_{n-1} by isobaric operators. Memoized;
// throws std::invalid_argument if w is not in S_n.
XPolynomial grothendieck_poly(const Permutation& w, int n);

// Replace every G[u] of the Q-free part of `e` by its polynomial in S_n.
XPolynomial realize_at_q_zero(const Expansion& e, int n);

bool verify_pieri_at_q0(const Permutation& w, int k, int p);
bool verify_monk_at_q0(const Permutation& x, int k);
// Throws std::invalid_argument unless k >= 2 and 1 <= p <= k.
bool verify_recurrence_at_q0(int k, int p, int n);

// "x1^2*x2 - x1^3*x2"; terms by degree, then by exponent vector.
std::string to_string(const XPolynomial& f);

}  // namespace qkp
