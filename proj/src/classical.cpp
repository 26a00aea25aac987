#include "qkp/classical.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qkp/chains.hpp"

namespace qkp {

XPolynomial::XPolynomial(std::int64_t c) {
  if (c != 0) terms_[{}] = c;
}

XPolynomial XPolynomial::monomial(Exponents e, std::int64_t c) {
  XPolynomial f;
  f.add_term(std::move(e), c);
  return f;
}

XPolynomial XPolynomial::variable(int i) {
  if (i < 1) throw std::invalid_argument("variable index must be positive");
  Exponents e(static_cast<std::size_t>(i), 0);
  e.back() = 1;
  return monomial(std::move(e));
}

void XPolynomial::add_term(Exponents e, std::int64_t c) {
  if (c == 0) return;
  while (!e.empty() && e.back() == 0) e.pop_back();
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

XPolynomial& XPolynomial::operator*=(const XPolynomial& o) {
  XPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(std::max(e1.size(), e2.size()), 0);
      for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
      for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
      out.add_term(std::move(e), checked_mul(c1, c2));
    }
  }
  *this = std::move(out);
  return *this;
}

XPolynomial XPolynomial::swapped(int i) const {
  XPolynomial out;
  for (const auto& [e0, c] : terms_) {
    auto e = e0;
    if (e.size() < static_cast<std::size_t>(i + 1)) e.resize(static_cast<std::size_t>(i + 1), 0);
    std::swap(e[i - 1], e[i]);
    out.add_term(std::move(e), c);
  }
  return out;
}

XPolynomial divided_difference(int i, const XPolynomial& f) {
  if (i < 1) throw std::invalid_argument("divided_difference index must be positive");
  XPolynomial out;
  for (const auto& [e0, c] : f.terms()) {
    auto e = e0;
    if (e.size() < static_cast<std::size_t>(i + 1)) e.resize(static_cast<std::size_t>(i + 1), 0);
    const int a = e[i - 1], b = e[i];
    if (a == b) continue;
    // (x^a y^b - x^b y^a) / (x - y) = sign * sum_{j} x^{hi-1-j} y^{lo+j}
    const int hi = std::max(a, b), lo = std::min(a, b);
    const std::int64_t sign = a > b ? 1 : -1;
    for (int j = 0; j < hi - lo; ++j) {
      auto t = e;
      t[i - 1] = hi - 1 - j;
      t[i] = lo + j;
      out += XPolynomial::monomial(std::move(t), checked_mul(sign, c));
    }
  }
  return out;
}

XPolynomial isobaric(int i, const XPolynomial& f) {
  return divided_difference(i, (XPolynomial(1) - XPolynomial::variable(i + 1)) * f);
}

XPolynomial grothendieck_poly(const Permutation& w, int n) {
  if (n < 1 || !w.in_sn(n)) throw std::invalid_argument("grothendieck_poly: " + to_string(w) + " is not in S_" + std::to_string(n));
  static std::mutex mu;
  static std::map<std::pair<Permutation, int>, XPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({w, n});
    if (it != cache.end()) return it->second;
  }
  auto win = w.window(n);
  XPolynomial result;
  int ascent = 0;
  for (int i = 1; i < n; ++i)
    if (win[i - 1] < win[i]) {
      ascent = i;
      break;
    }
  if (ascent == 0) {  // longest element
    XPolynomial::Exponents e(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) e[i - 1] = n - i;
    result = XPolynomial::monomial(std::move(e));
  } else {
    std::swap(win[ascent - 1], win[ascent]);
    result = isobaric(ascent, grothendieck_poly(Permutation(win), n));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(w, n), result);
  return result;
}

XPolynomial realize_at_q_zero(const Expansion& e, int n) {
  XPolynomial out;
  const Expansion q_free = e.at_q_zero();
  for (const auto& [u, c] : q_free.terms()) out += grothendieck_poly(u, n) * XPolynomial(c.coefficient(QMonomial{}));
  return out;
}

namespace {

int max_support(const Expansion& e, int floor) {
  int n = floor;
  for (const auto& [u, c] : e.terms()) n = std::max(n, u.support());
  return n;
}

}  // namespace

bool verify_pieri_at_q0(const Permutation& w, int k, int p) {
  const Expansion rhs = pieri_expand(w, k, p).at_q_zero();
  const Permutation ckp = cyclic_permutation(k, p);
  const int n = max_support(rhs, std::max(w.support(), ckp.support())) + 1;
  return grothendieck_poly(w, n) * grothendieck_poly(ckp, n) == realize_at_q_zero(rhs, n);
}

bool verify_monk_at_q0(const Permutation& x, int k) {
  const Expansion rhs = monk_lhs_expand(x, k).at_q_zero();
  const int n = max_support(rhs, std::max(x.support(), k)) + 1;
  const XPolynomial lhs = (XPolynomial(1) - XPolynomial::variable(k)) * grothendieck_poly(x, n);
  return lhs == realize_at_q_zero(rhs, n);
}

bool verify_recurrence_at_q0(int k, int p, int n) {
  if (k < 2 || p < 1 || p > k) throw std::invalid_argument("verify_recurrence_at_q0 needs k >= 2 and 1 <= p <= k");
  if (n < k + 1) throw std::invalid_argument("verify_recurrence_at_q0 needs n >= k + 1");
  auto g = [n](int kk, int pp) -> XPolynomial {
    if (kk < 1 || pp < 0 || pp > kk) return XPolynomial(0);
    return grothendieck_poly(cyclic_permutation(kk, pp), n);
  };
  const XPolynomial lhs = g(k, p) - g(k - 1, p - 1);
  const XPolynomial rhs = (XPolynomial(1) - XPolynomial::variable(k)) * (g(k - 1, p) - g(k - 1, p - 1));
  return lhs == rhs;
}

std::string to_string(const XPolynomial& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<XPolynomial::Exponents, std::int64_t>> terms(f.terms().begin(), f.terms().end());
  auto deg = [](const XPolynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    const int dx = deg(x.first), dy = deg(y.first);
    if (dx != dy) return dx < dy;
    return x.first > y.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const std::int64_t mag = c < 0 ? -c : c;
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += std::to_string(mag);
    else
      out += (mag != 1 ? std::to_string(mag) + "*" : "") + mono;
  }
  return out;
}

}  // namespace qkp
