#include "qkp/proof/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qkp/proof/insertion.hpp"

namespace qkp::proof {

MapStats& map_stats() {
  static MapStats stats;
  return stats;
}

namespace {

using Labels = std::vector<Label>;

Element make(int h, int g, const Permutation& w, const Labels& chain, Marking marking, const Labels& monk, const std::string& what) {
  DirectedPath c = require_path(w, chain, what + " (chain)");
  DirectedPath m = require_path(c.end(), monk, what + " (Monk chain)");
  return Element{h, g, std::move(c), std::move(marking), std::move(m)};
}

Labels drop_first(const DirectedPath& p) {
  if (p.empty()) throw std::logic_error("drop_first on an empty path");
  return {p.labels().begin() + 1, p.labels().end()};
}

Labels drop_last(const DirectedPath& p) {
  if (p.empty()) throw std::logic_error("drop_last on an empty path");
  return {p.labels().begin(), p.labels().end() - 1};
}

Labels with_last(const DirectedPath& p, Label t) {
  Labels out = p.labels();
  out.push_back(t);
  return out;
}

Labels with_first(const DirectedPath& p, Label t) {
  Labels out{t};
  out.insert(out.end(), p.labels().begin(), p.labels().end());
  return out;
}

Labels prefix_before(const DirectedPath& p, int m) {
  const Segment s = segment_of_b(p, m);
  return {p.labels().begin(), p.labels().begin() + static_cast<long>(s.begin)};
}

void append_rows(Labels& out, const std::vector<int>& rows, std::size_t from, std::size_t to, int b) {
  for (std::size_t i = from; i < to; ++i) out.emplace_back(rows[i], b);
}

Marking relabel(const Marking& m, const std::set<int>& rows, int from_b, int to_b) {
  Marking out;
  for (const Label& t : m) out.insert(t.b() == from_b && rows.count(t.a()) ? Label(t.a(), to_b) : t);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

// pi5, pi6: (i..,k),(k-1,k),(j..,k) -> (i..,k),(j..,k-1)
std::pair<Labels, Marking> psi_b3(const Element& q, int k) {
  const auto rows = rows_of(labels_of_b(q.chain, k));
  const auto pos = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), k - 1) - rows.begin());
  require(pos < rows.size() && pos + 1 < rows.size(), "psi_B3: chain not of B3 shape");
  Labels out = prefix_before(q.chain, k);
  append_rows(out, rows, 0, pos, k);
  append_rows(out, rows, pos + 1, rows.size(), k - 1);
  const std::set<int> js(rows.begin() + static_cast<long>(pos) + 1, rows.end());
  Marking m = relabel(q.marking, js, k, k - 1);
  m.erase(Label(k - 1, k));
  return {out, m};
}

std::pair<Labels, Marking> psi_d11(const Element& q, int k) {
  const auto is = rows_of(labels_of_b(q.chain, k));
  const auto js = rows_of(labels_of_b(q.chain, k - 1));
  Labels out = prefix_before(q.chain, k);
  append_rows(out, is, 0, is.size(), k);
  out.emplace_back(k - 1, k);
  append_rows(out, js, 0, js.size(), k);
  Marking m = relabel(q.marking, std::set<int>(js.begin(), js.end()), k - 1, k);
  m.insert(Label(k - 1, k));
  return {out, m};
}

std::pair<Labels, Marking> psi_d12(const Element& q, int k) {
  const auto is = rows_of(labels_of_b(q.chain, k));
  const auto js = rows_of(labels_of_b(q.chain, k - 1));
  std::size_t sp = is.size();
  for (std::size_t r = 0; r < is.size(); ++r)
    if (std::count(js.begin(), js.end(), is[r])) sp = r;
  require(sp < is.size(), "psi_D12: rows of the two segments are disjoint");
  require(js.back() == is[sp], "psi_D12: shared row is not the final row of the (*,k-1)-segment");
  Labels out = prefix_before(q.chain, k);
  append_rows(out, is, 0, sp, k);
  append_rows(out, js, 0, js.size(), k - 1);
  append_rows(out, is, sp + 1, is.size(), k - 1);
  Marking m = relabel(q.marking, std::set<int>(is.begin() + static_cast<long>(sp), is.end()), k, k - 1);
  return {out, m};
}

std::pair<Labels, Marking> psi_d2(const Element& q, int k) {
  const auto is = rows_of(labels_of_b(q.chain, k));
  const auto js = rows_of(labels_of_b(q.chain, k - 1));
  const LowerShape sh = lower_shape(q.chain, k);
  require(sh.has_segment && !sh.complete, "psi_D2: chain not of D2 shape");
  const auto tp = static_cast<std::size_t>(sh.t);
  Labels out = prefix_before(q.chain, k);
  append_rows(out, is, 0, is.size(), k);
  append_rows(out, js, tp - 1, js.size(), k);
  append_rows(out, js, 0, tp, k - 1);
  Marking m = relabel(q.marking, std::set<int>(js.begin() + static_cast<long>(tp) - 1, js.end()), k - 1, k);
  return {out, m};
}

}  // namespace

Element pi_forward(int i, const Element& q, int k) {
  const Label top(k - 1, k);
  const std::string name = "pi" + std::to_string(i);
  const Permutation& w = q.chain.start();
  switch (i) {
    case 1: return make(q.h, q.g, w, with_last(q.chain, top), q.marking, drop_first(q.monk), name);
    case 2: return make(q.h, q.g, w, with_last(q.chain, top), q.marking, with_first(q.monk, top), name);
    case 3:
    case 4: {
      Marking m = q.marking;
      m.erase(top);
      return make(q.h - 1, q.g - 1, w, drop_last(q.chain), m, i == 3 ? drop_first(q.monk) : with_first(q.monk, top), name);
    }
    case 5:
    case 6: {
      auto [c, m] = psi_b3(q, k);
      return make(q.h - 1, q.g - 1, w, c, m, i == 5 ? drop_first(q.monk) : with_first(q.monk, top), name);
    }
    case 7:
    case 8: {
      auto [c, m] = psi_d12(q, k);
      return make(q.h, q.g, w, c, m, i == 7 ? drop_first(q.monk) : with_first(q.monk, top), name);
    }
  }
  throw std::invalid_argument("pi_forward: no map " + name);
}

Element pi_inverse(int i, const Element& q, int k) {
  const Label top(k - 1, k);
  const std::string name = "pi" + std::to_string(i) + "'";
  const Permutation& w = q.chain.start();
  switch (i) {
    case 1: return make(q.h, q.g, w, drop_last(q.chain), q.marking, with_first(q.monk, top), name);
    case 2: return make(q.h, q.g, w, drop_last(q.chain), q.marking, drop_first(q.monk), name);
    case 3:
    case 4: {
      Marking m = q.marking;
      m.insert(top);
      return make(q.h + 1, q.g + 1, w, with_last(q.chain, top), m, i == 3 ? with_first(q.monk, top) : drop_first(q.monk), name);
    }
    case 5:
    case 6: {
      auto [c, m] = psi_d11(q, k);
      return make(q.h + 1, q.g + 1, w, c, m, i == 5 ? with_first(q.monk, top) : drop_first(q.monk), name);
    }
    case 7:
    case 8: {
      auto [c, m] = psi_d2(q, k);
      return make(q.h, q.g, w, c, m, i == 7 ? with_first(q.monk, top) : drop_first(q.monk), name);
    }
  }
  throw std::invalid_argument("pi_inverse: no map " + name);
}

Element theta(int i, const Element& q, int k) {
  const std::string name = "theta" + std::to_string(i);
  const auto pk = labels_of_b(q.chain, k);
  int a = 0;
  if (i == 1) {
    if (!pk.empty()) a = pk.back().a();
  } else {
    const auto pos = std::find(pk.begin(), pk.end(), Label(k - 1, k));
    require(pos != pk.end(), name + ": no (k-1,k) in the chain");
    if (pos + 1 != pk.end()) a = pk.back().a();
  }
  const std::size_t nk = monk_star_k_length(q.monk, k);
  const int b = nk > 0 ? q.monk.label(0).a() : 0;
  require(a != b || a == 0, name + ": a == b");

  bool move_out = false;
  if (i == 1) {
    move_out = in_set(SetId::A2Y, q, k) && a > b;
  } else {
    const bool bns2 = !pk.empty() && a > 0 && !q.marking.count(pk.back());
    if (i == 2) move_out = bns2 && a > b;
    if (i == 3) move_out = bns2 && (nk == 0 || a > b);
  }
  const Permutation& w = q.chain.start();
  if (move_out) return make(q.h, q.g, w, drop_last(q.chain), q.marking, with_first(q.monk, Label(a, k)), name);
  require(b > 0, name + ": nothing to move");
  return make(q.h, q.g, w, with_last(q.chain, Label(b, k)), q.marking, drop_first(q.monk), name);
}

Element theta4(const Element& q, int k) {
  const auto is = rows_of(labels_of_b(q.chain, k));
  const auto js = rows_of(labels_of_b(q.chain, k - 1));
  const LowerShape sh = lower_shape(q.chain, k);
  require(sh.has_segment && !sh.complete, "theta4: chain not of D2 shape");
  const auto tp = static_cast<std::size_t>(sh.t);
  Labels c = prefix_before(q.chain, k);
  append_rows(c, is, 0, is.size(), k);
  append_rows(c, js, tp - 1, js.size(), k);
  c.emplace_back(k - 1, k);
  append_rows(c, js, 0, tp - 1, k);
  for (std::size_t r = 0; r + 1 < tp; ++r)
    if (q.marking.count(Label(js[r], k - 1))) ++map_stats().theta4_marked_low_rows;
  Marking m = relabel(q.marking, std::set<int>(js.begin(), js.end()), k - 1, k);
  m.insert(Label(k - 1, k));
  return make(q.h + 1, q.g + 1, q.chain.start(), c, m, with_first(q.monk, Label(js[tp - 1], k)), "theta4");
}

Element theta4_inverse(const Element& q, int k) {
  const auto rows = rows_of(labels_of_b(q.chain, k));
  const auto top = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), k - 1) - rows.begin());
  require(top < rows.size(), "theta4': no (k-1,k) in the chain");
  require(monk_star_k_length(q.monk, k) > 0, "theta4': Monk chain has no (*,k) label");
  const int c1 = q.monk.label(0).a();
  const auto sp = static_cast<std::size_t>(std::find(rows.begin(), rows.begin() + static_cast<long>(top), c1) - rows.begin());
  require(sp < top, "theta4': initial Monk row is not among the rows before (k-1,k)");
  Labels c = prefix_before(q.chain, k);
  append_rows(c, rows, 0, sp, k);
  append_rows(c, rows, top + 1, rows.size(), k - 1);
  append_rows(c, rows, sp, top, k - 1);
  std::set<int> moved(rows.begin() + static_cast<long>(sp), rows.begin() + static_cast<long>(top));
  moved.insert(rows.begin() + static_cast<long>(top) + 1, rows.end());
  Marking m = relabel(q.marking, moved, k, k - 1);
  m.erase(Label(k - 1, k));
  return make(q.h - 1, q.g - 1, q.chain.start(), c, m, drop_first(q.monk), "theta4'");
}

namespace {

// Inserts the Monk labels (k,d_r), ..., (k,d_1) one by one.
struct InsertTrace {
  DirectedPath path;
  std::map<int, int> first_column;  // row -> column of the first insertion that moved it
  std::optional<int> case2_column;
};

InsertTrace insert_all(const DirectedPath& p, const DirectedPath& monk, int k) {
  InsertTrace tr{p, {}, std::nullopt};
  for (const Label& t : monk.labels()) {
    require(t.a() == k, "insert_all: Monk label not of the form (k,d)");
    const Insertion ins = insert(tr.path, k, t.b());
    if (ins.which_case == 2) {
      require(!tr.case2_column, "insert_all: two Case 2 insertions");
      tr.case2_column = t.b();
    }
    for (int row : ins.moved) tr.first_column.try_emplace(row, t.b());
    tr.path = ins.path;
  }
  return tr;
}

// Successive deletions at the given columns, in order.
DirectedPath delete_all(const DirectedPath& p, const std::vector<int>& columns, int k) {
  DirectedPath cur = p;
  for (int d : columns) {
    const Deletion del = remove(cur, k);
    require(del.d == d, "delete_all: deletion removed column " + std::to_string(del.d) + ", expected " + std::to_string(d));
    cur = del.path;
  }
  return cur;
}

Labels monk_labels(const std::vector<int>& ascending, int k) {
  Labels out;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) out.emplace_back(k, *it);
  return out;
}

// Shared part of the chi2/chi6 inverses: columns d(i) for the participating
// rows, and the marking transport back to column k.
Marking transport_back(const DirectedPath& p, const Marking& marking, const DirectedPath& xi, const std::vector<int>& candidates,
                       const std::vector<int>& rows, int k) {
  const int kx = xi.labels().back().a();
  Marking out = marking;
  for (int i : rows) {
    std::vector<int> cols;
    for (int d : candidates) {
      if (!contains(p, Label(i, d))) continue;
      if (i != kx && labels_of_b(p, d).back() == Label(i, d)) continue;
      cols.push_back(d);
    }
    require(!cols.empty(), "chi inverse: no column for row " + std::to_string(i));
    // Several candidates: the row of kappa(xi) takes the largest column,
    // any other row the smallest.
    if (cols.size() > 1) ++(i == kx ? map_stats().chi_kappa_row_multiple : map_stats().chi_row_multiple);
    const Label from(i, i == kx ? cols.back() : cols.front());
    if (marking.count(from)) {
      out.erase(from);
      out.insert(Label(i, k));
    }
  }
  return out;
}

}  // namespace

Element chi_forward(int i, const Element& q, int k) {
  const std::string name = "chi" + std::to_string(i);
  const Permutation& w = q.chain.start();
  switch (i) {
    case 1:
    case 5: {
      const InsertTrace tr = insert_all(q.chain, q.monk, k);
      Marking m = q.marking;
      if (i == 5) m.insert(Label(k, q.monk.label(0).b()));
      return embed(k, q.g + (i == 5 ? 1 : 0), tr.path, m);
    }
    case 3: return embed(k, q.g, q.chain, q.marking);
    case 4: {
      Marking m = q.marking;
      m.erase(q.chain.labels().back());
      return embed(q.h, q.g - 1, q.chain, m);
    }
    case 2:
    case 6: {
      const InsertTrace tr = insert_all(q.chain, q.monk, k);
      const int kappa_row = q.chain.labels().back().a();
      const int d_r = q.monk.label(0).b();
      Marking m;
      for (const Label& t : q.marking) {
        auto it = tr.first_column.find(t.a());
        if (t.b() != k || it == tr.first_column.end()) {
          m.insert(t);
          continue;
        }
        if (t.a() == kappa_row) continue;
        if (tr.case2_column && it->second == *tr.case2_column) ++map_stats().chi_transport_at_u;
        m.insert(Label(t.a(), it->second));
      }
      if (i == 6) {
        require(tr.first_column.count(kappa_row) && tr.first_column.at(kappa_row) == d_r, name + ": final row not moved first");
        m.insert(Label(kappa_row, d_r));
      }
      // g = p for chi2, p - 1 for chi6; the image has size p in both cases.
      const int p = i == 2 ? q.g : q.g + 1;
      if (tr.case2_column) {
        m.insert(Label(k, *tr.case2_column));
        return embed(k, p, tr.path, m);
      }
      return embed(k - 1, p - 1, tr.path, m);
    }
  }
  (void)w;
  throw std::invalid_argument("chi_forward: no map " + name);
}

Element chi_inverse(int i, const Element& q, int k) {
  const std::string name = "chi" + std::to_string(i) + "'";
  const Permutation& w = q.chain.start();
  std::vector<int> top_cols;
  for (const Label& t : q.chain.labels())
    if (t.a() == k) top_cols.push_back(t.b());
  std::sort(top_cols.begin(), top_cols.end());
  switch (i) {
    case 1:
    case 5: {
      const DirectedPath xi = delete_all(q.chain, top_cols, k);
      Marking m = q.marking;
      if (i == 5) m.erase(Label(k, top_cols.back()));
      return make(k - 1, q.g - (i == 5 ? 1 : 0), w, xi.labels(), m, monk_labels(top_cols, k), name);
    }
    case 3: return embed(k - 1, q.g, q.chain, q.marking);
    case 4: {
      Marking m = q.marking;
      m.insert(q.chain.labels().back());
      return embed(q.h, q.g + 1, q.chain, m);
    }
    case 2:
    case 6: {
      if (q.h == k) {
        const ColumnWalk walk = kappa_double_prime(q.chain, k);
        std::vector<int> cols = top_cols;
        cols.insert(cols.end(), walk.columns.begin() + 1, walk.columns.end());
        const DirectedPath xi = delete_all(q.chain, cols, k);
        std::vector<int> candidates(walk.columns.begin(), walk.columns.end());
        Marking m = transport_back(q.chain, q.marking, xi, candidates, rows_of(labels_of_b(xi, k)), k);
        m.erase(Label(k, top_cols.back()));
        if (i == 2) m.insert(xi.labels().back());
        return make(k - 1, i == 2 ? q.g : q.g - 1, w, xi.labels(), m, monk_labels(cols, k), name);
      }
      const ColumnWalk walk = kappa_prime(q.chain, k);
      const std::vector<int> cols(walk.columns.begin() + 1, walk.columns.end());
      const DirectedPath xi = delete_all(q.chain, cols, k);
      std::vector<int> rows;
      const int kappa_row = q.chain.labels().back().a();
      for (int r : rows_of(labels_of_b(xi, k)))
        if (!contains(q.chain, Label(r, k)) || r == kappa_row) rows.push_back(r);
      Marking m = transport_back(q.chain, q.marking, xi, walk.columns, rows, k);
      if (m.count(Label(kappa_row, k)) && !q.marking.count(Label(kappa_row, k))) ++map_stats().chi_f_side_kappa_row;
      if (i == 2) m.insert(xi.labels().back());
      return make(k - 1, i == 2 ? q.g + 1 : q.g, w, xi.labels(), m, monk_labels(cols, k), name);
    }
  }
  throw std::invalid_argument("chi_inverse: no map " + name);
}

std::vector<MapInstance> map_instances(int k, int p) {
  if (k < 2 || p < 1 || p > k) throw std::invalid_argument("map_instances needs k >= 2 and 1 <= p <= k");
  using S = SetId;
  std::vector<MapInstance> out;
  const int up = k - 1, lo = k - 2;
  for (int g : {p - 1, p}) {
    const std::string tag = g == p ? "[g=p]" : "[g=p-1]";
    auto pi = [&](int i, S dom, int dh, S cod, int ch, int cg, int sign, int qp) {
      out.push_back({"pi" + std::to_string(i) + tag, dom, dh, dh == up ? g : g - 1, {{cod, ch, cg, sign, qp}},
                     [i, k](const Element& q) { return pi_forward(i, q, k); },
                     [i, k](const Element& q) { return pi_inverse(i, q, k); }, false});
    };
    pi(1, S::AX, up, S::B1Y, up, g, -1, 0);
    pi(2, S::AY, up, S::B1X, up, g, -1, 1);
    pi(3, S::B2X, up, S::CY, lo, g - 1, 1, -1);
    pi(4, S::B2Y, up, S::CX, lo, g - 1, 1, 0);
    pi(5, S::B3X, up, S::D11Y, lo, g - 1, 1, -1);
    pi(6, S::B3Y, up, S::D11X, lo, g - 1, 1, 0);
    pi(7, S::D12X, lo, S::D2Y, lo, g - 1, -1, -1);
    pi(8, S::D12Y, lo, S::D2X, lo, g - 1, -1, 0);
    auto th = [&](int i, S dom) {
      out.push_back({"theta" + std::to_string(i) + tag, dom, up, g, {{dom, up, g, -1, 0}},
                     [i, k](const Element& q) { return theta(i, q, k); },
                     [i, k](const Element& q) { return theta(i, q, k); }, true});
    };
    th(1, S::ThetaOneDomain);
    th(2, S::BnsY3Circ2);
    th(3, S::ThetaThreeDomain);
    out.push_back({"theta4" + tag, S::D2Y, lo, g - 1, {{S::BnsY3Circ1, up, g, 1, 1}},
                   [k](const Element& q) { return theta4(q, k); },
                   [k](const Element& q) { return theta4_inverse(q, k); }, false});
  }
  auto chi = [&](int i, S dom, int g, std::vector<CodomainPart> cod) {
    out.push_back({"chi" + std::to_string(i), dom, up, g, std::move(cod),
                   [i, k](const Element& q) { return chi_forward(i, q, k); },
                   [i, k](const Element& q) { return chi_inverse(i, q, k); }, false});
  };
  chi(1, S::A1Y2, p, {{S::S2, k, p, 1, 0}});
  chi(2, S::E, p, {{S::S12b, k, p, 1, 0}, {S::F22, up, p - 1, -1, 0}});
  chi(3, S::A1Empty, p, {{S::R, k, p, 1, 0}});
  chi(4, S::G, p, {{S::F1, up, p - 1, -1, 0}});
  chi(5, S::A1Y2, p - 1, {{S::S11, k, p, -1, 0}});
  chi(6, S::E, p - 1, {{S::S12a, k, p, -1, 0}, {S::F21, up, p - 1, 1, 0}});
  return out;
}

namespace {

bool weight_rule_holds(const Element& pre, const Element& img, const CodomainPart& part, int k) {
  const WeightTerm a = weight(img, k), b = weight(pre, k);
  if (a.basis != b.basis || a.sign != part.sign * b.sign) return false;
  QMonomial lhs = a.q, rhs = b.q;
  const QMonomial qk = QMonomial::variable(k - 1, part.q_power < 0 ? -part.q_power : part.q_power);
  if (part.q_power < 0) lhs *= qk;
  if (part.q_power > 0) rhs *= qk;
  return lhs == rhs;
}

std::vector<Element> members(Universe& u, SetId s, int h, int g) {
  if (h < 0 || g < 0) return {};
  return select(u.elements(h, g), s, u.k());
}

// Q_{k-1}^E S(domain) = sum_i sign_i Q_{k-1}^(E - e_i) S(part_i), with
// E = max(0, e_i), must hold for any bijection obeying the weight rule.
std::optional<std::string> obstruction(const std::vector<Element>& domain, const std::vector<std::vector<Element>>& parts,
                                       const std::vector<CodomainPart>& spec, int k) {
  std::size_t total = 0;
  int top = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total += parts[i].size();
    top = std::max(top, spec[i].q_power);
  }
  if (total != domain.size())
    return "domain has " + std::to_string(domain.size()) + " elements, codomain " + std::to_string(total);
  auto qpow = [k](int e) { return QPolynomial(QMonomial::variable(k - 1, e), 1); };
  const Expansion lhs = sum_weights(domain, k) * qpow(top);
  Expansion rhs;
  for (std::size_t i = 0; i < parts.size(); ++i) rhs += sum_weights(parts[i], k) * (qpow(top - spec[i].q_power) * QPolynomial(spec[i].sign));
  if (lhs != rhs) return "weight sums differ by " + render_text(lhs - rhs);
  return std::nullopt;
}

}  // namespace

MapReport check_map(Universe& u, const MapInstance& m) {
  const int k = u.k();
  MapReport rep;
  rep.name = m.name;
  auto fail = [&](const std::string& msg) {
    if (rep.failures.size() < 20) rep.failures.push_back(m.name + ": " + msg);
  };
  const auto domain = members(u, m.domain, m.h, m.g);
  std::vector<std::vector<Element>> parts;
  std::set<Element> codomain;
  for (const auto& part : m.codomain) {
    parts.push_back(members(u, part.set, part.h, part.g));
    codomain.insert(parts.back().begin(), parts.back().end());
  }
  rep.domain_size = domain.size();
  rep.codomain_size = codomain.size();

  auto part_of = [&](const Element& e) -> const CodomainPart* {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (std::binary_search(parts[i].begin(), parts[i].end(), e) || std::count(parts[i].begin(), parts[i].end(), e))
        return &m.codomain[i];
    return nullptr;
  };

  std::set<Element> images;
  for (const Element& q : domain) {
    ++rep.checked;
    try {
      const Element img = m.forward(q);
      const CodomainPart* part = part_of(img);
      if (!part) {
        fail("image of " + to_string(q) + " is " + to_string(img) + ", outside the codomain");
        continue;
      }
      if (!weight_rule_holds(q, img, *part, k)) fail("weight rule fails at " + to_string(q));
      if (!images.insert(img).second) fail("two elements map to " + to_string(img));
      const Element back = m.inverse(img);
      if (back != q) fail("inverse of image differs for " + to_string(q) + ": got " + to_string(back));
    } catch (const std::exception& ex) {
      fail(std::string("exception at ") + to_string(q) + ": " + ex.what());
    }
  }
  if (domain.size() != codomain.size())
    fail("domain has " + std::to_string(domain.size()) + " elements, codomain " + std::to_string(codomain.size()));
  rep.obstruction = obstruction(domain, parts, m.codomain, k);
  if (!m.involution) {
    for (const Element& c : codomain) {
      ++rep.checked;
      try {
        const Element pre = m.inverse(c);
        if (!std::count(domain.begin(), domain.end(), pre)) {
          fail("inverse of " + to_string(c) + " is " + to_string(pre) + ", outside the domain");
          continue;
        }
        if (m.forward(pre) != c) fail("forward of inverse differs for " + to_string(c));
      } catch (const std::exception& ex) {
        fail(std::string("exception in inverse at ") + to_string(c) + ": " + ex.what());
      }
    }
  }
  return rep;
}

}  // namespace qkp::proof
