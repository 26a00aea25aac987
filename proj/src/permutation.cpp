#include "qkp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qkp {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<bool> seen(window_.size() + 1, false);
  for (int v : window_) {
    if (v < 1 || v > static_cast<int>(window_.size()) || seen[v])
      throw std::invalid_argument("not a permutation window");
    seen[v] = true;
  }
  while (!window_.empty() && window_.back() == static_cast<int>(window_.size()))
    window_.pop_back();
}

std::vector<int> Permutation::window(int n) const {
  std::vector<int> out(window_);
  for (int i = static_cast<int>(out.size()) + 1; i <= n; ++i) out.push_back(i);
  return out;
}

Label::Label(int a, int b) : a_(a), b_(b) {
  if (a < 1 || a >= b) throw std::invalid_argument("label needs 1 <= a < b");
}

int length(const Permutation& w) {
  auto win = w.window();
  int inv = 0;
  for (std::size_t i = 0; i < win.size(); ++i)
    for (std::size_t j = i + 1; j < win.size(); ++j)
      if (win[i] > win[j]) ++inv;
  return inv;
}

Permutation apply_transposition(const Permutation& x, Label t) {
  auto win = x.window(std::max(x.support(), t.b()));
  std::swap(win[t.a() - 1], win[t.b() - 1]);
  return Permutation(std::move(win));
}

Permutation cyclic_permutation(int k, int p) {
  if (k < 1 || p < 0 || p > k) throw std::invalid_argument("cyclic_permutation needs k >= 1, 0 <= p <= k");
  if (p == 0) return Permutation::identity();
  auto win = Permutation::identity().window(k + 1);
  // position i maps to i+1 along the cycle, the top wraps to the bottom
  for (int i = k - p + 1; i <= k; ++i) win[i - 1] = i + 1;
  win[k] = k - p + 1;
  return Permutation(std::move(win));
}

bool label_precedes(Label s, Label t) {
  return s.b() > t.b() || (s.b() == t.b() && s.a() < t.a());
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> win(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(win.begin(), win.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(win);
  } while (std::next_permutation(win.begin(), win.end()));
  return out;
}

std::string to_string(const Permutation& w) {
  auto win = w.window();
  if (win.empty()) return "e";
  std::string out;
  bool commas = win.size() > 9;
  for (std::size_t i = 0; i < win.size(); ++i) {
    if (commas && i > 0) out += ',';
    out += std::to_string(win[i]);
  }
  return out;
}

std::string to_string(Label t) {
  return "(" + std::to_string(t.a()) + "," + std::to_string(t.b()) + ")";
}

Permutation parse_permutation(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty permutation");
  if (text == "e") return Permutation::identity();
  std::vector<int> win;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      auto piece = text.substr(pos, next - pos);
      if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad permutation entry '" + std::string(piece) + "'");
      win.push_back(std::stoi(std::string(piece)));
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation digit in '" + std::string(text) + "'");
      win.push_back(c - '0');
    }
  }
  return Permutation(std::move(win));
}

Label parse_label(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("bad label '" + s + "'");
  auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("bad label '" + s + "'");
  try {
    return Label(std::stoi(s.substr(1, comma - 1)), std::stoi(s.substr(comma + 1, s.size() - comma - 2)));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("bad label '" + s + "'");
  }
}

}  // namespace qkp
