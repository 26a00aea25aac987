#include "qkp/proof/scanners.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qkp/chains.hpp"

namespace qkp::proof {

namespace {

using Labels = std::vector<Label>;

struct Scan {
  ScanReport rep;
  std::size_t limit;

  void hit(const std::string& what) {
    ++rep.found;
    if (rep.counterexamples.size() < limit) rep.counterexamples.push_back(what);
  }
};

std::string show(const Permutation& v, const Labels& ls) {
  std::string s = "(" + to_string(v) + " ;";
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? ", " : " ") + to_string(ls[i]);
  return s + ")";
}

// Try every v in S_n on every label sequence produced by `gen`.
void over_paths(Scan& sc, int n, const std::function<void(const std::function<void(const Labels&)>&)>& gen) {
  const auto perms = all_permutations(n);
  gen([&](const Labels& ls) {
    for (const Permutation& v : perms) {
      ++sc.rep.checked;
      if (validate_path(v, ls)) sc.hit(show(v, ls));
    }
  });
}

// Ordered sequences of distinct values from `pool` of every length <= max_len.
void sequences(const std::vector<int>& pool, std::size_t max_len, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void()> rec = [&] {
    f(cur);
    if (cur.size() == max_len) return;
    for (int x : pool) {
      if (std::find(cur.begin(), cur.end(), x) != cur.end()) continue;
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

void jm_im_il(Scan& sc, int n, bool weak) {
  over_paths(sc, n, [&](const auto& emit) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int l = 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m) {
            if (i == j || j >= m || i >= l) continue;
            if (!weak && !(i < j && j < l)) continue;
            emit(Labels{{j, m}, {i, m}, {i, l}});
          }
  });
}

void il_im_jm(Scan& sc, int n, bool weak) {
  over_paths(sc, n, [&](const auto& emit) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int l = 1; l <= n; ++l)
          for (int m = l + 1; m <= n; ++m) {
            if (i == j || j >= m || i >= l) continue;
            if (!weak && !(i < j && j < l)) continue;
            emit(Labels{{i, l}, {i, m}, {j, m}});
          }
  });
}

// Plain form: 1 <= a < b <= k-1, b not among the a_i. With `separate`, also
// b <= k-2 and b not among the b_i; its weakening readmits b among the b_i.
void row_revisit(Scan& sc, int n, bool weak, bool separate) {
  over_paths(sc, n, [&](const auto& emit) {
    for (int k = 3; k <= n; ++k)
      for (int a = 1; a <= k - 1; ++a)
        for (int b = a + 1; b <= (separate ? k - 2 : k - 1); ++b) {
          std::vector<int> pool;
          for (int x = 1; x <= k - 1; ++x)
            if (x != a) pool.push_back(x);
          sequences(pool, pool.size(), [&](const std::vector<int>& all) {
            for (std::size_t s = 0; s <= all.size(); ++s) {
              const std::vector<int> bs(all.begin(), all.begin() + static_cast<long>(s));
              const std::vector<int> as(all.begin() + static_cast<long>(s), all.end());
              const bool b_in_as = std::find(as.begin(), as.end(), b) != as.end();
              const bool b_in_bs = std::find(bs.begin(), bs.end(), b) != bs.end();
              if (std::find(bs.begin(), bs.end(), k - 1) != bs.end()) continue;
              if (separate ? b_in_as || (b_in_bs && !weak) : b_in_as && !weak) continue;
              Labels ls{{a, k - 1}};
              for (int x : bs) ls.emplace_back(x, k - 1);
              for (int x : as) ls.emplace_back(x, k);
              ls.emplace_back(a, k);
              ls.emplace_back(b, k);
              emit(ls);
            }
          });
        }
  });
}

void column_repeat(Scan& sc, int n, bool weak) {
  over_paths(sc, n, [&](const auto& emit) {
    for (int k = 3; k <= n; ++k) {
      const int top = weak ? k - 1 : k - 2;
      std::vector<int> pool;
      for (int x = 1; x <= k - 2; ++x) pool.push_back(x);
      for (int a = 1; a <= top; ++a) {
        Labels ls{{a, k}};
        std::function<void(std::size_t)> rec = [&](std::size_t s) {
          ls.emplace_back(a, k);
          emit(ls);
          ls.pop_back();
          if (s == 2) return;
          for (int b : pool) {
            ls.emplace_back(b, k);
            rec(s + 1);
            ls.pop_back();
          }
        };
        rec(0);
      }
    }
  });
}

void im_jm_jl_ik(Scan& sc, int n, bool weak) {
  over_paths(sc, n, [&](const auto& emit) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l)
            for (int m = l + 1; m <= n; ++m) {
              if (i >= j || i >= k || j >= l) continue;
              if (!weak && j >= k) continue;
              emit(Labels{{i, m}, {j, m}, {j, l}, {i, k}});
            }
  });
}

std::vector<std::size_t> positions(const Labels& ls, Label t) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < ls.size(); ++x)
    if (ls[x] == t) out.push_back(x);
  return out;
}

// Chains of every w in S_n at every level 1 <= h < n.
void over_chains(Scan& sc, int n, const std::function<void(const DirectedPath&, int)>& f) {
  for (const Permutation& w : all_permutations(n))
    for (int h = 1; h < n; ++h)
      for (const PieriChain& c : enumerate_pieri_chains(w, h)) {
        ++sc.rep.checked;
        f(c.path(), h);
      }
}

void chain_jm_im_il(Scan& sc, int n, bool weak) {
  over_chains(sc, n, [&](const DirectedPath& p, int k) {
    const Labels& ls = p.labels();
    for (std::size_t x = 0; x < ls.size(); ++x)
      for (std::size_t y = x + 1; y < ls.size(); ++y) {
        const int j = ls[x].a(), m = ls[x].b(), i = ls[y].a();
        if (ls[y].b() != m || i == j || (!weak && i > j) || j > k) continue;
        for (std::size_t z = y + 1; z < ls.size(); ++z) {
          const int l = ls[z].b();
          if (ls[z].a() == i && k < l && l < m) sc.hit(to_string(p) + " at level " + std::to_string(k));
        }
      }
  });
}

void chain_im_jm_jl_ik(Scan& sc, int n, bool weak) {
  over_chains(sc, n, [&](const DirectedPath& p, int h) {
    const int k = h + 1;
    const Labels& ls = p.labels();
    for (std::size_t x = 0; x < ls.size(); ++x) {
      const int i = ls[x].a(), m = ls[x].b();
      if (i >= k) continue;
      for (std::size_t y = x + 1; y < ls.size(); ++y) {
        const int j = ls[y].a();
        if (ls[y].b() != m || j >= k || j == i) continue;
        for (std::size_t z = y + 1; z < ls.size(); ++z) {
          const int l = ls[z].b();
          if (ls[z].a() != j || l < k || l >= m) continue;
          for (std::size_t e : positions(ls, Label(i, k))) {
            if (e <= z) continue;
            bool clean = true;
            for (std::size_t r = x + 1; r < e; ++r)
              if (ls[r].a() == i && ls[r].b() >= k && ls[r].b() <= m) clean = false;
            if (clean || weak) sc.hit(to_string(p) + " at level " + std::to_string(h));
          }
        }
      }
    }
  });
}

}  // namespace

const std::vector<std::string>& scanner_names() {
  static const std::vector<std::string> names = {"jm-im-il", "chain-jm-im-il", "il-im-jm", "row-revisit", "row-revisit-separate", "column-repeat", "im-jm-jl-ik", "chain-im-jm-jl-ik"};
  return names;
}

std::string_view weakening(std::string_view name) {
  if (name == "jm-im-il" || name == "il-im-jm") return "i < j < l relaxed to i != j, i < l, j < m";
  if (name == "chain-jm-im-il") return "i < j relaxed to i != j";
  if (name == "row-revisit") return "b may occur among a_1..a_t";
  if (name == "row-revisit-separate") return "b may occur among b_1..b_s";
  if (name == "column-repeat") return "a <= k-1 instead of a <= k-2";
  if (name == "im-jm-jl-ik") return "j < k relaxed to j < l";
  if (name == "chain-im-jm-jl-ik") return "labels (i,d), k <= d <= m, allowed between (i,m) and (i,k)";
  throw std::invalid_argument("unknown scanner: " + std::string(name));
}

ScanReport scan(std::string_view name, int n, bool weakened, std::size_t limit) {
  Scan sc{{std::string(name) + (weakened ? " (weakened)" : ""), "", 0, {}, 0}, limit};
  const bool chain = name == "chain-jm-im-il" || name == "chain-im-jm-jl-ik";
  sc.rep.universe = chain ? "Pieri chains of w in S_" + std::to_string(n) + ", levels 1.." + std::to_string(n - 1)
                          : "v in S_" + std::to_string(n) + ", labels with b <= " + std::to_string(n);
  if (name == "jm-im-il") jm_im_il(sc, n, weakened);
  else if (name == "chain-jm-im-il") chain_jm_im_il(sc, n, weakened);
  else if (name == "il-im-jm") il_im_jm(sc, n, weakened);
  else if (name == "row-revisit") row_revisit(sc, n, weakened, false);
  else if (name == "row-revisit-separate") row_revisit(sc, n, weakened, true);
  else if (name == "column-repeat") column_repeat(sc, n, weakened);
  else if (name == "im-jm-jl-ik") im_jm_jl_ik(sc, n, weakened);
  else if (name == "chain-im-jm-jl-ik") chain_im_jm_jl_ik(sc, n, weakened);
  else throw std::invalid_argument("unknown scanner: " + std::string(name));
  return sc.rep;
}

}  // namespace qkp::proof
