#include "qkp/expansion.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qkp/chains.hpp"

namespace qkp {

Expansion Expansion::basis(const Permutation& u, const QPolynomial& c) {
  Expansion e;
  e.add(u, c);
  return e;
}

QPolynomial Expansion::coefficient(const Permutation& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? QPolynomial{} : it->second;
}

void Expansion::add(const Permutation& u, const QPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Expansion& Expansion::operator+=(const Expansion& o) {
  for (const auto& [u, c] : o.terms_) add(u, c);
  return *this;
}

Expansion& Expansion::operator-=(const Expansion& o) {
  for (const auto& [u, c] : o.terms_) add(u, -c);
  return *this;
}

Expansion& Expansion::operator*=(const QPolynomial& c) {
  Expansion out;
  for (const auto& [u, f] : terms_) out.add(u, f * c);
  *this = std::move(out);
  return *this;
}

Expansion Expansion::at_q_zero() const {
  Expansion out;
  for (const auto& [u, f] : terms_) out.add(u, f.at_q_zero());
  return out;
}

Expansion Expansion::restricted_to_sn(int n) const {
  Expansion out;
  for (const auto& [u, f] : terms_)
    if (u.in_sn(n)) out.add(u, f);
  return out;
}

namespace {

void check_pieri_args(int k, int p) {
  if (k < 1) throw std::invalid_argument("pieri_expand needs k >= 1");
  if (p < 0 || p > k) throw std::invalid_argument("pieri_expand needs 0 <= p <= k");
}

std::int64_t parity_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Expansion pieri_expand(const Permutation& w, int k, int p) {
  check_pieri_args(k, p);
  Expansion out;
  for (const auto& c : enumerate_pieri_chains(w, k)) {
    const auto count = marking_count(c, p);
    if (count == 0) continue;
    const auto& path = c.path();
    const std::int64_t sign = parity_sign(path.size() + static_cast<std::size_t>(p));
    out.add(path.end(), QPolynomial(q_weight(path), checked_mul(sign, static_cast<std::int64_t>(count))));
  }
  return out;
}

Expansion pieri_expand_by_pairs(const Permutation& w, int k, int p) {
  check_pieri_args(k, p);
  Expansion out;
  for (const auto& c : enumerate_pieri_chains(w, k)) {
    const auto& path = c.path();
    const std::int64_t sign = parity_sign(path.size() + static_cast<std::size_t>(p));
    for (std::size_t i = 0, n = enumerate_markings(c, p).size(); i < n; ++i)
      out.add(path.end(), QPolynomial(q_weight(path), sign));
  }
  return out;
}

Expansion monk_lhs_expand(const Permutation& x, int k) {
  Expansion out;
  for (const auto& m : enumerate_monk_chains(x, k))
    out.add(m.path().end(), QPolynomial(q_weight(m.path()), parity_sign(m.k_star_length())));
  return out;
}

Expansion expand_product_chain(const Permutation& w, const std::vector<std::pair<int, int>>& factors) {
  Expansion cur = Expansion::basis(w);
  std::map<std::pair<Permutation, std::pair<int, int>>, Expansion> cache;
  for (const auto& kp : factors) {
    Expansion next;
    for (const auto& [u, c] : cur.terms()) {
      auto key = std::make_pair(u, kp);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, pieri_expand(u, kp.first, kp.second)).first;
      next += it->second * c;
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::pair<Permutation, QPolynomial>> ordered_terms(const Expansion& e) {
  std::vector<std::pair<Permutation, QPolynomial>> out(e.terms().begin(), e.terms().end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const int lx = length(x.first), ly = length(y.first);
    if (lx != ly) return lx < ly;
    return x.first < y.first;
  });
  return out;
}

std::string render_text(const Expansion& e) { return render_text(e, {}); }

std::vector<Permutation> chain_order(const Permutation& w, int k) {
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (const PieriChain& c : enumerate_pieri_chains(w, k))
    if (seen.insert(c.path().end()).second) out.push_back(c.path().end());
  return out;
}

std::string render_text(const Expansion& e, const std::vector<Permutation>& order) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<Permutation, QPolynomial>> terms;
  std::set<Permutation> listed;
  for (const Permutation& u : order) {
    auto it = e.terms().find(u);
    if (it != e.terms().end() && listed.insert(u).second) terms.push_back(*it);
  }
  for (const auto& t : ordered_terms(e))
    if (!listed.count(t.first)) terms.push_back(t);
  std::string out;
  bool first = true;
  for (const auto& [u, c] : terms) {
    const std::string basis = "G[" + to_string(u) + "]";
    if (c.terms().size() == 1) {
      const auto& [m, coeff] = *c.terms().begin();
      const std::int64_t mag = coeff < 0 ? -coeff : coeff;
      if (first)
        out += coeff < 0 ? "-" : "";
      else
        out += coeff < 0 ? " - " : " + ";
      if (mag != 1) out += std::to_string(mag) + "*";
      if (!m.is_one()) out += to_string(m) + "*";
      out += basis;
    } else {
      out += first ? "" : " + ";
      out += "(" + to_string(c) + ")*" + basis;
    }
    first = false;
  }
  return out;
}

std::string render_json(const Expansion& e, int indent) {
  auto arr = nlohmann::json::array();
  for (const auto& [u, c] : ordered_terms(e)) {
    auto terms = nlohmann::json::array();
    for (const auto& [m, coeff] : c.terms()) {
      auto q = nlohmann::json::array();
      for (auto [i, x] : m.exponents()) q.push_back({i, x});
      terms.push_back({{"q", q}, {"c", coeff}});
    }
    arr.push_back({{"perm", to_string(u)}, {"terms", terms}});
  }
  return arr.dump(indent);
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  Expansion parse() {
    skip();
    if (s_.substr(pos_) == "0") return {};
    Expansion out;
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    parse_term(out, sign);
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      parse_term(out, c == '-' ? -1 : 1);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::int64_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return std::stoll(std::string(s_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("number out of range");
    }
  }
  // integer or Q-variable with optional exponent
  QPolynomial qfactor() {
    char c = peek();
    if (c == 'Q') {
      ++pos_;
      int idx = static_cast<int>(number());
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = static_cast<int>(number());
      }
      return QPolynomial(QMonomial::variable(idx, e));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return QPolynomial(number());
    fail("expected a coefficient factor");
  }
  QPolynomial qterm() {
    QPolynomial f = qfactor();
    while (peek() == '*') {
      ++pos_;
      f *= qfactor();
    }
    return f;
  }
  QPolynomial qpoly() {
    int sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    QPolynomial f = qterm() * QPolynomial(sign);
    while (peek() == '+' || peek() == '-') {
      int sg = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
      f += qterm() * QPolynomial(sg);
    }
    return f;
  }
  void parse_term(Expansion& out, int sign) {
    QPolynomial coeff(sign);
    while (true) {
      char c = peek();
      if (c == 'G') {
        ++pos_;
        if (peek() != '[') fail("expected '['");
        ++pos_;
        auto close = s_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated basis symbol");
        Permutation u = parse_permutation(s_.substr(pos_, close - pos_));
        pos_ = close + 1;
        out.add(u, coeff);
        return;
      }
      if (c == '(') {
        ++pos_;
        coeff *= qpoly();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      } else {
        coeff *= qfactor();
      }
      if (peek() != '*') fail("expected '*'");
      ++pos_;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expansion parse_text(std::string_view text) { return TextParser(text).parse(); }

Expansion parse_json(std::string_view text) {
  Expansion out;
  try {
    auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("expansion JSON must be an array");
    for (const auto& rec : arr) {
      Permutation u = parse_permutation(rec.at("perm").get<std::string>());
      QPolynomial c;
      for (const auto& t : rec.at("terms")) {
        QMonomial m;
        for (const auto& ve : t.at("q")) m *= QMonomial::variable(ve.at(0).get<int>(), ve.at(1).get<int>());
        c += QPolynomial(m, t.at("c").get<std::int64_t>());
      }
      out.add(u, c);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad expansion JSON: ") + ex.what());
  }
  return out;
}

}  // namespace qkp
