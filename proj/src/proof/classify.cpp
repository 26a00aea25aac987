#include "qkp/proof/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkp::proof {

std::vector<Label> labels_of_b(const DirectedPath& p, int m) {
  const Segment s = segment_of_b(p, m);
  return {p.labels().begin() + static_cast<long>(s.begin), p.labels().begin() + static_cast<long>(s.end)};
}

std::vector<int> rows_of(const std::vector<Label>& ls) {
  std::vector<int> out;
  out.reserve(ls.size());
  for (const Label& t : ls) out.push_back(t.a());
  return out;
}

bool contains(const DirectedPath& p, Label t) {
  return std::find(p.labels().begin(), p.labels().end(), t) != p.labels().end();
}

int row_count(const DirectedPath& p, int a) {
  return static_cast<int>(std::count_if(p.labels().begin(), p.labels().end(), [a](const Label& t) { return t.a() == a; }));
}

int column_count(const DirectedPath& p, int b) {
  return static_cast<int>(std::count_if(p.labels().begin(), p.labels().end(), [b](const Label& t) { return t.b() == b; }));
}

std::optional<Label> final_label(const DirectedPath& p) {
  if (p.empty()) return std::nullopt;
  return p.labels().back();
}

std::optional<Label> initial_label(const DirectedPath& p) {
  if (p.empty()) return std::nullopt;
  return p.labels().front();
}

ColumnWalk column_walk(const DirectedPath& p, int d0) {
  ColumnWalk w;
  int d = d0;
  while (true) {
    const auto seg = labels_of_b(p, d);
    if (seg.empty()) throw std::invalid_argument("column_walk: empty segment at column " + std::to_string(d));
    w.columns.push_back(d);
    const int a = seg.back().a();
    int next = 0;
    for (const Label& t : p.labels())
      if (t.a() == a && t.b() > d && (next == 0 || t.b() < next)) next = t.b();
    if (next == 0) {
      w.last = seg.back();
      return w;
    }
    d = next;
  }
}

ColumnWalk kappa_prime(const DirectedPath& p, int k) {
  const auto seg = labels_of_b(p, k);
  if (seg.empty()) throw std::invalid_argument("kappa_prime: empty (*,k)-segment");
  if (row_count(p, seg.back().a()) < 2) throw std::invalid_argument("kappa_prime: final row occurs once");
  return column_walk(p, k);
}

namespace {

std::optional<int> top_column(const DirectedPath& p, int k) {
  std::optional<int> b;
  for (const Label& t : p.labels())
    if (t.a() == k && (!b || t.b() > *b)) b = t.b();
  return b;
}

}  // namespace

ColumnWalk kappa_double_prime(const DirectedPath& p, int k) {
  const auto b = top_column(p, k);
  if (!b) throw std::invalid_argument("kappa_double_prime: no (k,*) label");
  if (labels_of_b(p, *b).back() == Label(k, *b)) throw std::invalid_argument("kappa_double_prime: (k,b(p)) is final in its segment");
  return column_walk(p, *b);
}

LowerShape lower_shape(const DirectedPath& p, int k) {
  LowerShape sh;
  const Segment seg = segment_of_b(p, k - 1);
  if (seg.empty()) return sh;
  sh.has_segment = true;
  const AlgorithmOutcome out = algorithm_skd(p, seg.begin, k - 1, k);
  sh.complete = out.complete;
  sh.t = out.u;
  const auto is = rows_of(labels_of_b(p, k));
  const auto js = rows_of(labels_of_b(p, k - 1));
  sh.disjoint = std::none_of(is.begin(), is.end(), [&](int i) { return std::count(js.begin(), js.end(), i) > 0; });
  return sh;
}

namespace {

enum class Block { A1, A2, A3, B1, Bns1, Bns2, Bns3 };

struct Upper {
  Block block;
  bool x = false;
  bool m_empty = false;
  bool y1 = false, y2 = false, y3 = false;
  bool meets = false;  // (*,k)-segments of chain and Monk chain share a label
  bool circ1 = false;
  bool b2 = false;  // kappa(p) = (k-1,k)
};

Upper upper_features(const Element& e, int k) {
  Upper f;
  const Label top(k - 1, k);
  const auto pk = labels_of_b(e.chain, k);
  const auto kappa = final_label(e.chain);
  const bool kappa_marked = kappa && e.marking.count(*kappa);
  const auto it = std::find(pk.begin(), pk.end(), top);
  if (it == pk.end()) {
    f.block = pk.empty() ? Block::A1 : (kappa_marked ? Block::A3 : Block::A2);
  } else if (!e.marking.count(top)) {
    f.block = Block::B1;
  } else if (it + 1 == pk.end()) {
    f.block = Block::Bns1;
  } else {
    f.block = kappa_marked ? Block::Bns3 : Block::Bns2;
  }
  f.b2 = kappa && *kappa == top;
  const auto iota = initial_label(e.monk);
  f.x = iota && *iota == top;
  f.m_empty = e.monk.empty();
  const std::size_t nk = monk_star_k_length(e.monk, k);
  f.y1 = nk == 0;
  f.y2 = nk == 0 && !e.monk.empty();
  f.y3 = nk > 0;
  for (std::size_t i = 0; i < nk; ++i)
    if (std::find(pk.begin(), pk.end(), e.monk.label(i)) != pk.end()) f.meets = true;
  if (f.y3 && f.meets && std::find(pk.begin(), pk.end(), *iota) != pk.end())
    f.circ1 = f.block != Block::Bns2 || label_precedes(*kappa, *iota);
  return f;
}

bool is_bns(Block b) { return b == Block::Bns1 || b == Block::Bns2 || b == Block::Bns3; }
bool is_a(Block b) { return b == Block::A1 || b == Block::A2 || b == Block::A3; }

bool upper_in(SetId s, const Element& e, int k) {
  const Upper f = upper_features(e, k);
  const bool y = !f.x;
  const bool a = is_a(f.block), bns = is_bns(f.block);
  const bool b1 = f.block == Block::B1;
  const bool b2 = bns && f.b2, b3 = bns && !f.b2;
  switch (s) {
    case SetId::Upper: return true;
    case SetId::AX: return a && f.x;
    case SetId::AY: return a && y;
    case SetId::B1X: return b1 && f.x;
    case SetId::B1Y: return b1 && y;
    case SetId::B2X: return b2 && f.x;
    case SetId::B2Y: return b2 && y;
    case SetId::B3X: return b3 && f.x;
    case SetId::B3Y: return b3 && y;
    case SetId::BnsY: return bns && y;
    case SetId::A1Y3: return f.block == Block::A1 && y && f.y3;
    case SetId::A2Y: return f.block == Block::A2 && y;
    case SetId::A3Y3: return f.block == Block::A3 && y && f.y3;
    case SetId::A1Empty: return f.block == Block::A1 && f.m_empty;
    case SetId::A2Empty: return f.block == Block::A2 && f.m_empty;
    case SetId::A3Empty: return f.block == Block::A3 && f.m_empty;
    case SetId::A1Y2: return f.block == Block::A1 && y && f.y2;
    case SetId::A3Y2: return f.block == Block::A3 && y && f.y2;
    case SetId::B1Empty: return b1 && f.m_empty;
    case SetId::BnsY3Circ1: return bns && y && f.y3 && f.meets && f.circ1;
    case SetId::BnsY3Circ2: return bns && y && f.y3 && f.meets && !f.circ1;
    case SetId::Bns2Y1: return f.block == Block::Bns2 && y && f.y1;
    case SetId::BnsY3Sep: return bns && y && f.y3 && !f.meets;
    case SetId::Bns1Empty: return f.block == Block::Bns1 && f.m_empty;
    case SetId::Bns2Empty: return f.block == Block::Bns2 && f.m_empty;
    case SetId::Bns3Empty: return f.block == Block::Bns3 && f.m_empty;
    case SetId::Bns1Y2: return f.block == Block::Bns1 && y && f.y2;
    case SetId::Bns3Y2: return f.block == Block::Bns3 && y && f.y2;
    case SetId::EmptySlice: return f.m_empty;
    case SetId::ThetaOneDomain:
      return upper_in(SetId::A1Y3, e, k) || upper_in(SetId::A2Y, e, k) || upper_in(SetId::A3Y3, e, k);
    case SetId::ThetaThreeDomain: return upper_in(SetId::Bns2Y1, e, k) || upper_in(SetId::BnsY3Sep, e, k);
    default: break;
  }
  // E, F, G and the F split use the direct characterizations.
  const auto pk = labels_of_b(e.chain, k);
  const auto kappa = final_label(e.chain);
  const bool kappa_marked = kappa && e.marking.count(*kappa);
  switch (s) {
    case SetId::E: return !pk.empty() && kappa_marked && f.y2;
    case SetId::G: return f.m_empty && !pk.empty() && kappa_marked;
    case SetId::F: return f.m_empty && !pk.empty() && !kappa_marked;
    case SetId::F1:
    case SetId::F21:
    case SetId::F22: {
      if (!(f.m_empty && !pk.empty() && !kappa_marked)) return false;
      const bool once = row_count(e.chain, kappa->a()) == 1;
      if (s == SetId::F1) return once;
      if (once) return false;
      const bool marked = e.marking.count(kappa_prime(e.chain, k).last) > 0;
      return s == SetId::F21 ? marked : !marked;
    }
    default: return false;
  }
}

bool lower_in(SetId s, const Element& e, int k) {
  const auto iota = initial_label(e.monk);
  const bool x = iota && *iota == Label(k - 1, k);
  const LowerShape sh = lower_shape(e.chain, k);
  const bool c = !sh.has_segment;
  const bool d11 = sh.has_segment && sh.complete && sh.disjoint;
  const bool d12 = sh.has_segment && sh.complete && !sh.disjoint;
  const bool d2 = sh.has_segment && !sh.complete;
  switch (s) {
    case SetId::Lower: return true;
    case SetId::CX: return c && x;
    case SetId::CY: return c && !x;
    case SetId::D11X: return d11 && x;
    case SetId::D11Y: return d11 && !x;
    case SetId::D12X: return d12 && x;
    case SetId::D12Y: return d12 && !x;
    case SetId::D2X: return d2 && x;
    case SetId::D2Y: return d2 && !x;
    default: return false;
  }
}

bool top_in(SetId s, const Element& e, int k) {
  if (s == SetId::Top) return true;
  const auto b = top_column(e.chain, k);
  if (s == SetId::R) return !b;
  if (!b) return false;
  const Label kb(k, *b);
  const bool s1 = e.marking.count(kb) > 0;
  if (s == SetId::S2) return !s1;
  if (!s1) return false;
  const bool final = labels_of_b(e.chain, *b).back() == kb;
  if (s == SetId::S11) return final;
  if (final) return false;
  const bool marked = e.marking.count(kappa_double_prime(e.chain, k).last) > 0;
  if (s == SetId::S12a) return marked;
  if (s == SetId::S12b) return !marked;
  return false;
}

}  // namespace

std::string_view set_name(SetId s) {
  switch (s) {
    case SetId::Upper: return "U(k-1,g)";
    case SetId::Lower: return "U(k-2,g-1)";
    case SetId::Top: return "U(k,p)";
    case SetId::BnsY: return "BnsY";
    case SetId::AX: return "AX";
    case SetId::AY: return "AY";
    case SetId::B1X: return "B1X";
    case SetId::B1Y: return "B1Y";
    case SetId::B2X: return "B2X";
    case SetId::B2Y: return "B2Y";
    case SetId::B3X: return "B3X";
    case SetId::B3Y: return "B3Y";
    case SetId::CX: return "CX";
    case SetId::CY: return "CY";
    case SetId::D11X: return "D11X";
    case SetId::D11Y: return "D11Y";
    case SetId::D12X: return "D12X";
    case SetId::D12Y: return "D12Y";
    case SetId::D2X: return "D2X";
    case SetId::D2Y: return "D2Y";
    case SetId::A1Y3: return "A1Y3";
    case SetId::A2Y: return "A2Y";
    case SetId::A3Y3: return "A3Y3";
    case SetId::A1Empty: return "A1-empty";
    case SetId::A2Empty: return "A2-empty";
    case SetId::A3Empty: return "A3-empty";
    case SetId::A1Y2: return "A1Y2";
    case SetId::A3Y2: return "A3Y2";
    case SetId::B1Empty: return "B1-empty";
    case SetId::BnsY3Circ1: return "BnsY3(1a)";
    case SetId::BnsY3Circ2: return "BnsY3(1b)";
    case SetId::Bns2Y1: return "Bns2Y1";
    case SetId::BnsY3Sep: return "BnsY3(2)";
    case SetId::Bns1Empty: return "Bns1-empty";
    case SetId::Bns2Empty: return "Bns2-empty";
    case SetId::Bns3Empty: return "Bns3-empty";
    case SetId::Bns1Y2: return "Bns1Y2";
    case SetId::Bns3Y2: return "Bns3Y2";
    case SetId::EmptySlice: return "empty-monk";
    case SetId::ThetaOneDomain: return "A1Y3+A2Y+A3Y3";
    case SetId::ThetaThreeDomain: return "Bns2Y1+BnsY3(2)";
    case SetId::E: return "E";
    case SetId::F: return "F";
    case SetId::G: return "G";
    case SetId::F1: return "F1";
    case SetId::F21: return "F2-1";
    case SetId::F22: return "F2-2";
    case SetId::R: return "R";
    case SetId::S11: return "S1-1";
    case SetId::S12a: return "S1-2a";
    case SetId::S12b: return "S1-2b";
    case SetId::S2: return "S2";
  }
  return "?";
}

int set_level(SetId s, int k) {
  switch (s) {
    case SetId::Lower:
    case SetId::CX:
    case SetId::CY:
    case SetId::D11X:
    case SetId::D11Y:
    case SetId::D12X:
    case SetId::D12Y:
    case SetId::D2X:
    case SetId::D2Y: return k - 2;
    case SetId::Top:
    case SetId::R:
    case SetId::S11:
    case SetId::S12a:
    case SetId::S12b:
    case SetId::S2: return k;
    default: return k - 1;
  }
}

bool in_set(SetId s, const Element& e, int k) {
  if (e.h != set_level(s, k)) return false;
  if (e.h == k) return top_in(s, e, k);
  if (e.h == k - 2) return lower_in(s, e, k);
  return upper_in(s, e, k);
}

namespace {

SetId unique_of(const Element& e, int k, std::initializer_list<SetId> candidates) {
  std::optional<SetId> found;
  for (SetId s : candidates) {
    if (!in_set(s, e, k)) continue;
    if (found) throw std::logic_error("classify: " + to_string(e) + " lies in " + std::string(set_name(*found)) + " and " + std::string(set_name(s)));
    found = s;
  }
  if (!found) throw std::invalid_argument("classify: no class for " + to_string(e));
  return *found;
}

}  // namespace

SetId classify(const Element& e, int k, Decomposition level) {
  using S = SetId;
  const bool upper = e.h == k - 1, lower = e.h == k - 2 && k >= 2, top = e.h == k;
  switch (level) {
    case Decomposition::First:
      if (upper) return unique_of(e, k, {S::AX, S::AY, S::B1X, S::B1Y, S::B2X, S::B2Y, S::B3X, S::B3Y});
      if (lower) return unique_of(e, k, {S::CX, S::CY, S::D11X, S::D11Y, S::D12X, S::D12Y, S::D2X, S::D2Y});
      break;
    case Decomposition::Second: {
      if (!upper) break;
      const SetId first = classify(e, k, Decomposition::First);
      if (first == S::AY) return unique_of(e, k, {S::A1Y3, S::A2Y, S::A3Y3, S::A1Empty, S::A3Empty, S::A1Y2, S::A3Y2});
      if (first == S::B2Y || first == S::B3Y)
        return unique_of(e, k, {S::BnsY3Circ1, S::BnsY3Circ2, S::Bns2Y1, S::BnsY3Sep, S::Bns1Empty, S::Bns3Empty, S::Bns1Y2, S::Bns3Y2});
      return first;
    }
    case Decomposition::Third:
      if (top) return unique_of(e, k, {S::R, S::S11, S::S12a, S::S12b, S::S2});
      if (upper && in_set(S::F, e, k)) return unique_of(e, k, {S::F1, S::F21, S::F22});
      break;
  }
  throw std::invalid_argument("classify: element outside the requested decomposition: " + to_string(e));
}

const std::vector<Partition>& partitions() {
  using S = SetId;
  static const std::vector<Partition> all = {
      {S::Upper, {S::AX, S::AY, S::B1X, S::B1Y, S::B2X, S::B2Y, S::B3X, S::B3Y}},
      {S::Lower, {S::CX, S::CY, S::D11X, S::D11Y, S::D12X, S::D12Y, S::D2X, S::D2Y}},
      {S::AY, {S::A1Y3, S::A2Y, S::A3Y3, S::A1Empty, S::A3Empty, S::A1Y2, S::A3Y2}},
      {S::BnsY, {S::BnsY3Circ1, S::BnsY3Circ2, S::Bns2Y1, S::BnsY3Sep, S::Bns1Empty, S::Bns3Empty, S::Bns1Y2, S::Bns3Y2}},
      {S::EmptySlice, {S::A1Empty, S::A2Empty, S::A3Empty, S::B1Empty, S::Bns1Empty, S::Bns2Empty, S::Bns3Empty}},
      {S::E, {S::A3Y2, S::Bns1Y2, S::Bns3Y2}},
      {S::F, {S::A2Empty, S::B1Empty, S::Bns2Empty}},
      {S::G, {S::A3Empty, S::Bns1Empty, S::Bns3Empty}},
      {S::F, {S::F1, S::F21, S::F22}},
      {S::Top, {S::R, S::S11, S::S12a, S::S12b, S::S2}},
  };
  return all;
}

std::vector<Element> select(const std::vector<Element>& elems, SetId s, int k) {
  std::vector<Element> out;
  for (const Element& e : elems)
    if (in_set(s, e, k)) out.push_back(e);
  return out;
}

}  // namespace qkp::proof
