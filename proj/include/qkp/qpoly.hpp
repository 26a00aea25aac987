#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qkp {

// Overflow-checked int64 helpers; throw std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Monomial in Q_1, Q_2, ...; zero exponents are never stored.
class QMonomial {
 public:
  QMonomial() = default;
  static QMonomial variable(int index, int exponent = 1);
  // Q_a Q_{a+1} ... Q_{b-1}
  static QMonomial interval(int a, int b);

  int exponent(int index) const;
  const std::map<int, int>& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }
  int degree() const;

  QMonomial& operator*=(const QMonomial& o);
  friend QMonomial operator*(QMonomial a, const QMonomial& b) { return a *= b; }
  // True iff `d` divides this; then quotient() is well defined.
  bool divisible_by(const QMonomial& d) const;
  QMonomial quotient(const QMonomial& d) const;

  friend bool operator==(const QMonomial&, const QMonomial&) = default;
  friend auto operator<=>(const QMonomial&, const QMonomial&) = default;

 private:
  std::map<int, int> exps_;
};

class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(std::int64_t c);  // NOLINT: constants convert implicitly
  QPolynomial(const QMonomial& m, std::int64_t c = 1);

  const std::map<QMonomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const QMonomial& m) const;
  // Drop every term with a nonzero Q exponent.
  QPolynomial at_q_zero() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  QPolynomial operator-() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void add_term(const QMonomial& m, std::int64_t c);
  std::map<QMonomial, std::int64_t> terms_;
};

// "Q1*Q2^2"; the unit monomial prints as "1".
std::string to_string(const QMonomial& m);
// "Q1 - 2*Q2*Q3"; zero prints as "0". Terms ordered by degree, then variables.
std::string to_string(const QPolynomial& f);

}  // namespace qkp
