#include "qkp/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkp {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

QMonomial QMonomial::variable(int index, int exponent) {
  if (index < 1 || exponent < 0) throw std::invalid_argument("bad Q variable");
  QMonomial m;
  if (exponent > 0) m.exps_[index] = exponent;
  return m;
}

QMonomial QMonomial::interval(int a, int b) {
  QMonomial m;
  for (int i = a; i < b; ++i) m.exps_[i] = 1;
  return m;
}

int QMonomial::exponent(int index) const {
  auto it = exps_.find(index);
  return it == exps_.end() ? 0 : it->second;
}

int QMonomial::degree() const {
  int d = 0;
  for (auto [i, e] : exps_) d += e;
  return d;
}

QMonomial& QMonomial::operator*=(const QMonomial& o) {
  for (auto [i, e] : o.exps_) exps_[i] += e;
  return *this;
}

bool QMonomial::divisible_by(const QMonomial& d) const {
  return std::all_of(d.exps_.begin(), d.exps_.end(), [&](auto kv) { return exponent(kv.first) >= kv.second; });
}

QMonomial QMonomial::quotient(const QMonomial& d) const {
  if (!divisible_by(d)) throw std::invalid_argument("monomial not divisible");
  QMonomial q = *this;
  for (auto [i, e] : d.exps_) {
    auto it = q.exps_.find(i);
    it->second -= e;
    if (it->second == 0) q.exps_.erase(it);
  }
  return q;
}

QPolynomial::QPolynomial(std::int64_t c) {
  if (c != 0) terms_[QMonomial{}] = c;
}

QPolynomial::QPolynomial(const QMonomial& m, std::int64_t c) {
  if (c != 0) terms_[m] = c;
}

std::int64_t QPolynomial::coefficient(const QMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

QPolynomial QPolynomial::at_q_zero() const { return QPolynomial(coefficient(QMonomial{})); }

void QPolynomial::add_term(const QMonomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  QPolynomial out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, checked_mul(c1, c2));
  *this = std::move(out);
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial out;
  for (const auto& [m, c] : terms_) out.terms_[m] = checked_mul(c, -1);
  return out;
}

std::string to_string(const QMonomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (auto [i, e] : m.exponents()) {
    if (!out.empty()) out += '*';
    out += "Q" + std::to_string(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const QPolynomial& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<QMonomial, std::int64_t>> terms(f.terms().begin(), f.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace qkp
