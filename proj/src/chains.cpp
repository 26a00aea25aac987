#include "qkp/chains.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qkp {

Segment segment_of_b(const DirectedPath& p, int m) {
  const auto& ls = p.labels();
  std::size_t i = 0;
  while (i < ls.size() && ls[i].b() > m) ++i;
  std::size_t j = i;
  while (j < ls.size() && ls[j].b() == m) ++j;
  return {i, j};
}

namespace {

bool row_seen_before(const std::vector<Label>& ls, std::size_t s) {
  for (std::size_t u = 0; u < s; ++u)
    if (ls[u].a() == ls[s].a()) return true;
  return false;
}

}  // namespace

bool is_pieri_chain(const DirectedPath& p, int k) {
  const auto& ls = p.labels();
  if (k == 0) return ls.empty();
  for (std::size_t s = 0; s < ls.size(); ++s) {
    if (ls[s].a() > k || ls[s].b() <= k) return false;
    if (s > 0 && ls[s].b() > ls[s - 1].b()) return false;
    for (std::size_t u = 0; u < s; ++u)
      if (ls[u] == ls[s]) return false;
    if (s + 1 < ls.size() && row_seen_before(ls, s) && !label_precedes(ls[s], ls[s + 1])) return false;
  }
  return true;
}

PieriChain::PieriChain(DirectedPath path, int k) : path_(std::move(path)), k_(k) {
  if (!is_pieri_chain(path_, k_)) throw std::invalid_argument("not a Pieri chain at level " + std::to_string(k));
}

std::vector<PieriChain> enumerate_pieri_chains(const Permutation& w, int k) {
  if (k < 0) throw std::invalid_argument("enumerate_pieri_chains needs k >= 0");
  std::vector<PieriChain> out;
  if (k == 0) {
    out.emplace_back(DirectedPath(w), 0);
    return out;
  }
  const int n_bound = std::max(w.support(), k) + 1;
  for (int b = n_bound + 1; b <= n_bound + 2; ++b)
    for (int a = 1; a <= k; ++a)
      if (edge_kind(w, Label(a, b)))
        throw std::logic_error("ambient bound audit: edge " + to_string(Label(a, b)) + " from " + to_string(w));

  // candidates in increasing label_precedes order
  std::vector<Label> all;
  for (int b = n_bound; b > k; --b)
    for (int a = 1; a <= k; ++a) all.emplace_back(a, b);

  DirectedPath cur(w);
  std::vector<bool> used(all.size(), false);
  std::function<void()> dfs = [&] {
    out.emplace_back(cur, k);
    const auto& ls = cur.labels();
    const bool need_increase = !ls.empty() && row_seen_before(ls, ls.size() - 1);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (used[i]) continue;
      const Label t = all[i];
      if (!ls.empty() && t.b() > ls.back().b()) continue;
      if (need_increase && !label_precedes(ls.back(), t)) continue;
      DirectedPath next = cur;
      if (!next.try_append(t)) continue;
      std::swap(cur, next);
      used[i] = true;
      dfs();
      used[i] = false;
      std::swap(cur, next);
    }
  };
  dfs();
  return out;
}

std::size_t monk_star_k_length(const DirectedPath& m, int k) {
  std::size_t s = 0;
  while (s < m.size() && m.label(s).b() == k) ++s;
  return s;
}

bool is_monk_chain(const DirectedPath& m, int k) {
  const std::size_t s = monk_star_k_length(m, k);
  for (std::size_t i = 0; i < s; ++i)
    if (i > 0 && m.label(i).a() >= m.label(i - 1).a()) return false;
  for (std::size_t i = s; i < m.size(); ++i) {
    if (m.label(i).a() != k) return false;
    if (i > s && m.label(i).b() >= m.label(i - 1).b()) return false;
  }
  return true;
}

MonkChain::MonkChain(DirectedPath path, int k) : path_(std::move(path)), k_(k), s_(monk_star_k_length(path_, k)) {
  if (!is_monk_chain(path_, k_)) throw std::invalid_argument("not a Monk chain at level " + std::to_string(k));
}

std::vector<MonkChain> enumerate_monk_chains(const Permutation& x, int k) {
  if (k < 1) throw std::invalid_argument("enumerate_monk_chains needs k >= 1");
  const int n_bound = std::max(x.support(), k) + 1;
  std::vector<MonkChain> out;

  std::function<void(const DirectedPath&, int)> tail = [&](const DirectedPath& cur, int max_b) {
    for (int b = max_b; b > k; --b) {
      DirectedPath next = cur;
      if (!next.try_append(Label(k, b))) continue;
      out.emplace_back(next, k);
      tail(next, b - 1);
    }
  };
  std::function<void(const DirectedPath&, int)> head = [&](const DirectedPath& cur, int max_a) {
    for (int b = n_bound + 1; b <= n_bound + 2; ++b)
      if (edge_kind(cur.end(), Label(k, b)))
        throw std::logic_error("ambient bound audit: edge " + to_string(Label(k, b)) + " from " + to_string(cur.end()));
    tail(cur, n_bound);
    for (int a = max_a; a >= 1; --a) {
      DirectedPath next = cur;
      if (!next.try_append(Label(a, k))) continue;
      out.emplace_back(next, k);
      head(next, a - 1);
    }
  };
  out.emplace_back(DirectedPath(x), k);
  head(DirectedPath(x), k - 1);
  return out;
}

bool is_marking(const DirectedPath& p, const Marking& m) {
  const auto& ls = p.labels();
  for (const auto& t : m)
    if (std::find(ls.begin(), ls.end(), t) == ls.end()) return false;
  for (std::size_t s = 0; s < ls.size(); ++s) {
    const bool marked = m.count(ls[s]) > 0;
    if (marked && row_seen_before(ls, s)) return false;
    if (!marked && s + 1 < ls.size() && !label_precedes(ls[s], ls[s + 1])) return false;
  }
  for (std::size_t t = 0; t < ls.size(); ++t) {
    if (t > 0 && (ls[t].b() != ls[0].b() || ls[t].a() >= ls[t - 1].a())) break;
    if (!m.count(ls[t])) return false;
  }
  return true;
}

namespace {

struct MarkingShape {
  std::vector<bool> first;   // first occurrence of its row
  std::vector<bool> forced;  // in every marking
  std::size_t rows = 0;
  std::size_t n_forced = 0;
  bool feasible = true;
};

MarkingShape marking_shape(const DirectedPath& p) {
  const auto& ls = p.labels();
  MarkingShape sh;
  sh.first.assign(ls.size(), false);
  sh.forced.assign(ls.size(), false);
  for (std::size_t s = 0; s < ls.size(); ++s) {
    sh.first[s] = !row_seen_before(ls, s);
    if (sh.first[s]) ++sh.rows;
  }
  for (std::size_t t = 0; t < ls.size(); ++t) {
    if (t > 0 && (ls[t].b() != ls[0].b() || ls[t].a() >= ls[t - 1].a())) break;
    sh.forced[t] = true;
  }
  for (std::size_t s = 0; s + 1 < ls.size(); ++s)
    if (label_precedes(ls[s + 1], ls[s])) sh.forced[s] = true;
  for (std::size_t s = 0; s < ls.size(); ++s) {
    if (!sh.forced[s]) continue;
    ++sh.n_forced;
    if (!sh.first[s]) sh.feasible = false;
  }
  return sh;
}

}  // namespace

std::vector<Marking> enumerate_markings(const DirectedPath& p, int size) {
  std::vector<Marking> out;
  if (size < 0) return out;
  const auto sh = marking_shape(p);
  if (!sh.feasible) return out;
  const auto& ls = p.labels();
  std::vector<std::size_t> free;
  Marking base;
  for (std::size_t s = 0; s < ls.size(); ++s) {
    if (sh.forced[s])
      base.insert(ls[s]);
    else if (sh.first[s])
      free.push_back(s);
  }
  if (static_cast<std::size_t>(size) < sh.n_forced) return out;
  const std::size_t extra = static_cast<std::size_t>(size) - sh.n_forced;
  if (extra > free.size()) return out;

  // subsets of `free` of size `extra`; collect, then order by marked positions
  std::vector<std::vector<std::size_t>> picks;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t from) {
    if (pick.size() == extra) {
      picks.push_back(pick);
      return;
    }
    for (std::size_t i = from; i < free.size(); ++i) {
      pick.push_back(free[i]);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
  std::vector<std::pair<std::vector<std::size_t>, Marking>> keyed;
  for (const auto& pk : picks) {
    Marking m = base;
    for (auto s : pk) m.insert(ls[s]);
    std::vector<std::size_t> pos;
    for (std::size_t s = 0; s < ls.size(); ++s)
      if (m.count(ls[s])) pos.push_back(s);
    keyed.emplace_back(std::move(pos), std::move(m));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [pos, m] : keyed) out.push_back(std::move(m));
  return out;
}

std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::uint64_t out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t marking_count(const DirectedPath& p, int size) {
  const auto sh = marking_shape(p);
  if (!sh.feasible) return 0;
  return binomial(static_cast<std::int64_t>(sh.rows) - static_cast<std::int64_t>(sh.n_forced),
                  static_cast<std::int64_t>(size) - static_cast<std::int64_t>(sh.n_forced));
}

std::vector<Label> in_path_order(const DirectedPath& p, const Marking& m) {
  std::vector<Label> out;
  for (const auto& t : p.labels())
    if (m.count(t)) out.push_back(t);
  return out;
}

}  // namespace qkp
