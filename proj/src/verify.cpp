#include "qkp/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qkp/classical.hpp"
#include "qkp/expansion.hpp"
#include "qkp/proof/bijections.hpp"
#include "qkp/proof/insertion.hpp"
#include "qkp/proof/ledger.hpp"
#include "qkp/proof/scanners.hpp"
#include "qkp/report.hpp"

namespace qkp::verify {

void Report::fail(std::string what) {
  ++failure_count;
  if (failures.size() < kMaxListed) failures.push_back(std::move(what));
}

std::string to_json(const Report& r, int indent) {
  nlohmann::json j = {{"suite", r.suite},         {"universe", r.universe}, {"checked", r.checked},
                      {"failure_count", r.failure_count}, {"failures", r.failures}, {"notes", r.notes}};
  return j.dump(indent);
}

std::string to_text(const Report& r) {
  std::string out = "suite: " + r.suite + "\nuniverse: " + r.universe + "\nchecked: " + std::to_string(r.checked) +
                    "\nfailures: " + std::to_string(r.failure_count) + "\n";
  for (const auto& f : r.failures) out += "  FAIL " + f + "\n";
  for (const auto& n : r.notes) out += "  note " + n + "\n";
  out += r.passed() ? "result: pass\n" : "result: FAIL\n";
  return out;
}

namespace {

std::string at(const Permutation& w, int k, int p) {
  return "w=" + to_string(w) + " k=" + std::to_string(k) + " p=" + std::to_string(p);
}

// Reference rows of the two worked examples, in render_row format.
const std::vector<std::string> kEx1Rows = {
    "(w ; ∅) | ∅ | 321",
    "(w ; (1,4)_B) | ∅ | 4213",
    "(w ; (1,4)_B, (2,4)_B) | {(1,4),(2,4)} | 4312",
    "(w ; (1,4)_B, (2,4)_B, (1,3)_Q) | {(1,4),(2,4)} | 1342",
    "(w ; (1,4)_B, (2,4)_B, (1,3)_Q, (2,3)_B) | {(1,4),(2,4)} | 1432",
    "(w ; (1,4)_B, (2,4)_B, (2,3)_Q) | {(1,4),(2,4)} | 4132",
    "(w ; (1,4)_B, (1,3)_Q) | ∅ | 1243",
    "(w ; (1,4)_B, (1,3)_Q, (2,3)_B) | {(1,4),(2,3)} | 1423",
    "(w ; (1,4)_B, (2,3)_Q) | {(1,4),(2,3)} | 4123",
    "(w ; (1,3)_Q) | ∅ | e",
    "(w ; (1,3)_Q, (2,3)_B) | {(1,3),(2,3)} | 132",
    "(w ; (2,3)_Q) | ∅ | 312",
};

const char* const kEx1Expansion =
    "G[4312] - Q1*Q2*G[1342] + Q1*Q2*G[1432] - Q2*G[4132] - Q1*Q2*G[1423] + Q2*G[4123] + Q1*Q2*G[132]";

const std::vector<std::string> kEx2Rows = {
    "(w ; ∅) | ∅ | 32514",
    "(w ; (3,6)_B) | ∅ | 326145",
    "(w ; (3,6)_B, (1,5)_B) | {(3,6),(1,5)} | 426135",
    "(w ; (3,6)_B, (1,5)_B, (2,5)_B) | {(3,6),(1,5)},{(3,6),(2,5)} | 436125",
    "(w ; (3,6)_B, (1,5)_B, (2,5)_B, (3,4)_Q) | {(3,6),(1,5)},{(3,6),(2,5)} | 431625",
    "(w ; (3,6)_B, (1,5)_B, (3,4)_Q) | {(3,6),(1,5)} | 421635",
    "(w ; (3,6)_B, (2,5)_B) | {(3,6),(2,5)} | 346125",
    "(w ; (3,6)_B, (2,5)_B, (3,4)_Q) | {(3,6),(2,5)} | 341625",
    "(w ; (3,6)_B, (3,4)_Q) | ∅ | 321645",
    "(w ; (1,5)_B) | ∅ | 42513",
    "(w ; (1,5)_B, (2,5)_B) | {(1,5),(2,5)} | 43512",
    "(w ; (1,5)_B, (2,5)_B, (3,4)_Q) | {(1,5),(2,5)},{(1,5),(3,4)} | 43152",
    "(w ; (1,5)_B, (2,5)_B, (3,4)_Q, (1,4)_B) | {(1,5),(2,5)},{(1,5),(3,4)} | 53142",
    "(w ; (1,5)_B, (2,5)_B, (3,4)_Q, (1,4)_B, (2,4)_B) | {(1,5),(2,5)},{(1,5),(3,4)} | 54132",
    "(w ; (1,5)_B, (2,5)_B, (3,4)_Q, (2,4)_B) | {(1,5),(2,5)},{(1,5),(3,4)} | 45132",
    "(w ; (1,5)_B, (3,4)_Q) | {(1,5),(3,4)} | 42153",
    "(w ; (1,5)_B, (3,4)_Q, (1,4)_B) | {(1,5),(3,4)} | 52143",
    "(w ; (1,5)_B, (3,4)_Q, (1,4)_B, (2,4)_B) | {(1,5),(3,4)},{(1,5),(2,4)} | 54123",
    "(w ; (1,5)_B, (3,4)_Q, (2,4)_B) | {(1,5),(3,4)},{(1,5),(2,4)} | 45123",
    "(w ; (2,5)_B) | ∅ | 34512",
    "(w ; (2,5)_B, (3,4)_Q) | {(2,5),(3,4)} | 34152",
    "(w ; (2,5)_B, (3,4)_Q, (2,4)_B) | {(2,5),(3,4)} | 35142",
    "(w ; (3,4)_Q) | ∅ | 32154",
    "(w ; (3,4)_Q, (1,4)_B) | {(3,4),(1,4)} | 52134",
    "(w ; (3,4)_Q, (1,4)_B, (2,4)_B) | {(3,4),(1,4)} | 53124",
    "(w ; (3,4)_Q, (2,4)_B) | {(3,4),(2,4)} | 35124",
};

const char* const kEx2Expansion =
    "G[426135] - 2*G[436125] + 2*Q3*G[431625] - Q3*G[421635] + G[346125] - Q3*G[341625] + G[43512] - 2*Q3*G[43152]"
    " + 2*Q3*G[53142] - 2*Q3*G[54132] + 2*Q3*G[45132] + Q3*G[42153] - Q3*G[52143] + 2*Q3*G[54123] - 2*Q3*G[45123]"
    " + Q3*G[34152] - Q3*G[35142] + Q3*G[52134] - Q3*G[53124] + Q3*G[35124]";

struct ReferenceRow {
  std::string chain;
  std::vector<std::string> markings;
  std::string end;
};

ReferenceRow split_row(const std::string& row) {
  const auto bar1 = row.find(" | ");
  const auto bar2 = row.rfind(" | ");
  ReferenceRow r{row.substr(0, bar1), {}, row.substr(bar2 + 3)};
  const std::string marks = row.substr(bar1 + 3, bar2 - bar1 - 3);
  if (marks == "∅") return r;
  std::size_t pos = 0;
  while (pos < marks.size()) {
    const auto close = marks.find('}', pos);
    r.markings.push_back(marks.substr(pos, close + 1 - pos));
    pos = close + 2;
  }
  return r;
}

Marking parse_marking(const std::string& text) {
  Marking m;
  std::size_t pos = 1;
  while (pos < text.size() && text[pos] == '(') {
    const auto close = text.find(')', pos);
    m.insert(parse_label(text.substr(pos, close + 1 - pos)));
    pos = close + 2;
  }
  return m;
}

// Reference rows against computed rows. A reference marking that is not a marking
// and an omitted row that is a genuine chain without markings are recorded as
// notes; anything else is a failure.
void compare_table(Report& r, const std::string& tag, const Permutation& w, int k, int p, const std::vector<std::string>& reference) {
  const auto rows = chain_table(w, k, p);
  std::map<std::string, const ChainRow*> by_chain;
  for (const ChainRow& row : rows) by_chain[split_row(render_row(row)).chain] = &row;
  std::set<std::string> seen;
  for (const std::string& line : reference) {
    ++r.checked;
    const ReferenceRow pr = split_row(line);
    seen.insert(pr.chain);
    auto it = by_chain.find(pr.chain);
    if (it == by_chain.end()) {
      r.fail(tag + ": reference chain not enumerated: " + pr.chain);
      continue;
    }
    const ChainRow& row = *it->second;
    const ReferenceRow ours = split_row(render_row(row));
    if (ours.end != pr.end) r.fail(tag + ": end of " + pr.chain + " is " + ours.end + ", reference " + pr.end);
    if (ours.markings == pr.markings) continue;
    for (const std::string& m : pr.markings) {
      if (std::find(ours.markings.begin(), ours.markings.end(), m) != ours.markings.end()) continue;
      if (is_marking(row.chain, parse_marking(m)))
        r.fail(tag + ": reference marking " + m + " of " + pr.chain + " is a marking but was not enumerated");
      else
        r.notes.push_back(tag + ": reference marking " + m + " of " + pr.chain + " violates the marking conditions");
    }
    for (const std::string& m : ours.markings)
      if (std::find(pr.markings.begin(), pr.markings.end(), m) == pr.markings.end())
        r.fail(tag + ": marking " + m + " of " + pr.chain + " missing from the reference");
  }
  for (const ChainRow& row : rows) {
    const ReferenceRow ours = split_row(render_row(row));
    if (seen.count(ours.chain)) continue;
    ++r.checked;
    const bool valid = validate_path(w, row.chain.labels()) && is_pieri_chain(row.chain, k);
    if (valid && row.markings.empty())
      r.notes.push_back(tag + ": chain " + ours.chain + " (end " + ours.end + ") is valid, has no " + std::to_string(p) +
                        "-marking, and is not in the reference table");
    else
      r.fail(tag + ": unlisted row " + render_row(row));
  }
}

// Computed expansion against the reference one. Terms whose reference coefficient
// is twice ours are notes when the table lists an invalid extra marking for
// the chain ending there; any other difference is a failure.
void compare_expansion(Report& r, const std::string& tag, const Expansion& ours, const Expansion& reference,
                       const std::set<std::string>& doubled_ends) {
  ++r.checked;
  if (ours == reference) return;
  std::set<Permutation> perms;
  for (const auto& [u, c] : ours.terms()) perms.insert(u);
  for (const auto& [u, c] : reference.terms()) perms.insert(u);
  for (const Permutation& u : perms) {
    const QPolynomial a = ours.coefficient(u), b = reference.coefficient(u);
    if (a == b) continue;
    if (a * QPolynomial(2) == b && doubled_ends.count(to_string(u)))
      r.notes.push_back(tag + ": coefficient of G[" + to_string(u) + "] is " + to_string(a) + ", reference " + to_string(b));
    else
      r.fail(tag + ": coefficient of G[" + to_string(u) + "] is " + to_string(a) + ", reference " + to_string(b));
  }
}

std::set<std::string> ends_with_invalid_marking(const Permutation& w, int k, int p, const std::vector<std::string>& reference) {
  std::set<std::string> out;
  std::map<std::string, DirectedPath> paths;
  for (const ChainRow& row : chain_table(w, k, p)) paths.emplace(split_row(render_row(row)).chain, row.chain);
  for (const std::string& line : reference) {
    const ReferenceRow pr = split_row(line);
    auto it = paths.find(pr.chain);
    if (it == paths.end()) continue;
    for (const std::string& m : pr.markings)
      if (!is_marking(it->second, parse_marking(m))) out.insert(pr.end);
  }
  return out;
}

}  // namespace

Report worked_examples() {
  Report r{"examples", "w=321 k=2 p=2; w=32514 k=3 p=2", 0, 0, {}, {}};
  const Permutation w1 = parse_permutation("321"), w2 = parse_permutation("32514");
  compare_table(r, "ex1", w1, 2, 2, kEx1Rows);
  compare_expansion(r, "ex1", pieri_expand(w1, 2, 2), parse_text(kEx1Expansion), {});
  compare_table(r, "ex2", w2, 3, 2, kEx2Rows);
  compare_expansion(r, "ex2", pieri_expand(w2, 3, 2), parse_text(kEx2Expansion), ends_with_invalid_marking(w2, 3, 2, kEx2Rows));
  const auto e2 = pieri_expand(w2, 3, 2);
  ++r.checked;
  if (enumerate_pieri_chains(w2, 3).size() != 26) r.fail("ex2: chain count differs from 26");
  if (e2.size() != 20) r.fail("ex2: term count " + std::to_string(e2.size()) + ", reference 20");
  for (const char* u : {"431625", "43152"}) {
    const auto c = e2.coefficient(parse_permutation(u));
    if (c.terms().size() != 1 || std::abs(c.terms().begin()->second) != 2) r.fail(std::string("ex2: G[") + u + "] has no 2*Q3 coefficient");
  }
  ++r.checked;
  if (pieri_expand_by_pairs(w1, 2, 2) != pieri_expand(w1, 2, 2) || pieri_expand_by_pairs(w2, 3, 2) != e2)
    r.fail("pair form and count form of the expansion differ");
  return r;
}

Report classical(int n) {
  Report r{"classical", "pieri: w in S_" + std::to_string(n) + ", 1<=k<=" + std::to_string(n) +
                            ", 0<=p<=k, and w=32514 (k,p)=(3,2); recurrence: 2<=k<=4, 1<=p<=k",
           0, 0, {}, {}};
  for (const Permutation& w : all_permutations(n))
    for (int k = 1; k <= n; ++k)
      for (int p = 0; p <= k; ++p) {
        ++r.checked;
        if (!verify_pieri_at_q0(w, k, p)) r.fail("pieri at Q=0: " + at(w, k, p));
      }
  ++r.checked;
  if (!verify_pieri_at_q0(parse_permutation("32514"), 3, 2)) r.fail("pieri at Q=0: " + at(parse_permutation("32514"), 3, 2));
  for (int k = 2; k <= 4; ++k)
    for (int p = 1; p <= k; ++p) {
      ++r.checked;
      if (!verify_recurrence_at_q0(k, p, k + 1)) r.fail("recurrence at Q=0: k=" + std::to_string(k) + " p=" + std::to_string(p));
    }
  return r;
}

Report monk(int n) {
  Report r{"monk", "x in S_" + std::to_string(n) + ", 1<=k<" + std::to_string(n), 0, 0, {}, {}};
  for (const Permutation& x : all_permutations(n))
    for (int k = 1; k < n; ++k) {
      ++r.checked;
      if (!verify_monk_at_q0(x, k)) r.fail("monk at Q=0: x=" + to_string(x) + " k=" + std::to_string(k));
      for (const MonkChain& m : enumerate_monk_chains(x, k)) {
        ++r.checked;
        if (!is_monk_chain(m.path(), k)) r.fail("not a Monk chain: " + to_string(m.path()));
      }
    }
  return r;
}

Report commutativity(int n) {
  Report r{"commutativity", "w in S_" + std::to_string(n) + ", G^k_p G^l_q with 1<=k,l<=" + std::to_string(n), 0, 0, {}, {}};
  std::vector<std::pair<int, int>> factors;
  for (int k = 1; k <= n; ++k)
    for (int p = 0; p <= k; ++p) factors.emplace_back(k, p);
  for (const Permutation& w : all_permutations(n))
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (std::size_t j = i + 1; j < factors.size(); ++j) {
        ++r.checked;
        if (expand_product_chain(w, {factors[i], factors[j]}) != expand_product_chain(w, {factors[j], factors[i]}))
          r.fail("w=" + to_string(w) + " factors (" + std::to_string(factors[i].first) + "," + std::to_string(factors[i].second) +
                 ") and (" + std::to_string(factors[j].first) + "," + std::to_string(factors[j].second) + ")");
      }
  return r;
}

Report markings(int n) {
  Report r{"markings", "chains of w in S_" + std::to_string(n) + ", 1<=k<" + std::to_string(n) + ", 0<=p<=k", 0, 0, {}, {}};
  for (const Permutation& w : all_permutations(n))
    for (int k = 1; k < n; ++k)
      for (const PieriChain& c : enumerate_pieri_chains(w, k)) {
        const auto& ls = c.path().labels();
        std::vector<std::uint64_t> brute(static_cast<std::size_t>(k) + 1, 0);
        for (std::uint32_t mask = 0; mask < (1u << ls.size()); ++mask) {
          Marking m;
          for (std::size_t i = 0; i < ls.size(); ++i)
            if (mask >> i & 1u) m.insert(ls[i]);
          if (static_cast<int>(m.size()) <= k && is_marking(c.path(), m)) ++brute[m.size()];
        }
        for (int p = 0; p <= k; ++p) {
          ++r.checked;
          const auto closed = marking_count(c, p);
          const auto listed = enumerate_markings(c, p).size();
          if (closed != brute[static_cast<std::size_t>(p)] || listed != closed)
            r.fail(to_string(c.path()) + " p=" + std::to_string(p) + ": closed form " + std::to_string(closed) + ", subsets " +
                   std::to_string(brute[static_cast<std::size_t>(p)]) + ", enumerated " + std::to_string(listed));
        }
      }
  return r;
}

Report bijections(int n, int kmin, int kmax) {
  Report r{"bijections", "w in S_" + std::to_string(n) + ", " + std::to_string(kmin) + "<=k<=" + std::to_string(kmax) +
                             ", 1<=p<=k, g in {p-1,p}",
           0, 0, {}, {}};
  std::size_t obstructed = 0;
  for (const Permutation& w : all_permutations(n))
    for (int k = kmin; k <= kmax; ++k) {
      proof::Universe u(w, k);
      for (int p = 1; p <= k; ++p)
        for (const proof::MapInstance& m : proof::map_instances(k, p)) {
          const proof::MapReport rep = proof::check_map(u, m);
          r.checked += rep.checked;
          if (rep.failures.empty()) continue;
          std::string msg = at(w, k, p) + " " + m.name + ": " + rep.failures.front();
          if (rep.obstruction) {
            ++obstructed;
            msg += " [no bijection possible: " + *rep.obstruction + "]";
          }
          r.fail(msg);
        }
    }
  if (r.failure_count)
    r.notes.push_back(std::to_string(obstructed) + " of " + std::to_string(r.failure_count) +
                      " failing instances have domain and codomain that cannot match under the weight rule");
  return r;
}

Report ledger(int n, int kmin, int kmax) {
  Report r{"ledger", "w in S_" + std::to_string(n) + ", " + std::to_string(kmin) + "<=k<=" + std::to_string(kmax) + ", 1<=p<=k", 0, 0, {}, {}};
  for (const Permutation& w : all_permutations(n))
    for (int k = kmin; k <= kmax; ++k) {
      proof::Universe u(w, k);
      ++r.checked;
      for (const auto& f : proof::check_partitions(u)) r.fail("w=" + to_string(w) + " k=" + std::to_string(k) + " partition " + f);
      ++r.checked;
      for (const auto& f : proof::check_class_remarks(u)) r.fail("w=" + to_string(w) + " k=" + std::to_string(k) + " remark " + f);
      for (int p = 1; p <= k; ++p)
        for (const proof::IdentityCheck& c : proof::ledger_identities(u, p)) {
          ++r.checked;
          if (!c.holds()) r.fail(at(w, k, p) + " " + c.name + ": lhs - rhs = " + render_text(c.residual()));
        }
    }
  return r;
}

Report scanners(int n) {
  Report r{"scanners", "scanners in S_" + std::to_string(n) + "; edge criterion in S_" + std::to_string(n) + ", b <= " + std::to_string(n + 1), 0, 0, {}, {}};
  for (const std::string& name : proof::scanner_names()) {
    const proof::ScanReport plain = proof::scan(name, n);
    const proof::ScanReport weak = proof::scan(name, n, true);
    r.checked += plain.checked + weak.checked;
    if (plain.found)
      r.fail(name + ": " + std::to_string(plain.found) + " forbidden configurations, e.g. " + plain.counterexamples.front());
    if (!weak.found) r.fail(name + ": weakened pattern (" + std::string(proof::weakening(name)) + ") finds nothing");
    r.notes.push_back(name + ": " + std::to_string(plain.found) + " found; weakened (" + std::string(proof::weakening(name)) +
                      "): " + std::to_string(weak.found) + " found");
  }
  const Report edge = edge_criterion(n, n + 1);
  r.checked += edge.checked;
  for (const auto& f : edge.failures) r.fail("edge: " + f);
  return r;
}

Report edge_criterion(int n, int bmax) {
  Report r{"edge", "x in S_" + std::to_string(n) + ", labels (a,b) with b <= " + std::to_string(bmax), 0, 0, {}, {}};
  for (const Permutation& x : all_permutations(n))
    for (int b = 2; b <= bmax; ++b)
      for (int a = 1; a < b; ++a) {
        ++r.checked;
        const Label t(a, b);
        const int delta = length(apply_transposition(x, t)) - length(x);
        std::optional<EdgeKind> expected;
        if (delta == 1) expected = EdgeKind::Bruhat;
        if (delta == 1 - 2 * (b - a)) expected = EdgeKind::Quantum;
        if (edge_kind(x, t) != expected) r.fail("x=" + to_string(x) + " " + to_string(t) + ": length change " + std::to_string(delta));
      }
  return r;
}

Report insertion(int n, int kmax, int dmax) {
  Report r{"insertion", "w in S_" + std::to_string(n) + ", 1<=k<=" + std::to_string(kmax) + ", labels and d <= " + std::to_string(dmax), 0, 0, {}, {}};
  std::size_t inserted = 0, deleted = 0;
  for (const Permutation& w : all_permutations(n))
    for (int k = 1; k <= kmax; ++k) {
      std::vector<Label> alphabet;
      for (int b = dmax; b >= k; --b)
        for (int a = 1; a <= std::min(k, b - 1); ++a) alphabet.emplace_back(a, b);
      std::function<void(const DirectedPath&)> visit = [&](const DirectedPath& p) {
        for (int d = k + 1; d <= dmax; ++d) {
          if (proof::check_insertable(p, k, d)) continue;
          ++r.checked;
          ++inserted;
          const std::string where = to_string(p) + " k=" + std::to_string(k) + " d=" + std::to_string(d);
          try {
            const proof::Insertion ins = proof::insert(p, k, d);
            if (auto bad = proof::check_shape(ins.path, k)) r.fail("insert " + where + ": output violates " + *bad);
            const int before = proof::top_row_count(p, k), after = proof::top_row_count(ins.path, k);
            if (ins.which_case == 3 ? after != 0 : after != before + 1)
              r.fail("insert " + where + ": n_(k,*) " + std::to_string(before) + " -> " + std::to_string(after) + " in case " +
                     std::to_string(ins.which_case));
            const proof::Deletion del = proof::remove(ins.path, k);
            if (del.path != p || del.d != d) r.fail("delete after insert " + where + " gives " + to_string(del.path) + ", d=" + std::to_string(del.d));
          } catch (const std::exception& ex) {
            r.fail("insert " + where + ": " + ex.what());
          }
        }
        if (!proof::check_deletable(p, k)) {
          ++r.checked;
          ++deleted;
          try {
            const proof::Deletion del = proof::remove(p, k);
            if (auto bad = proof::check_shape(del.path, k)) r.fail("delete " + to_string(p) + ": output violates " + *bad);
            if (auto bad = proof::check_insertable(del.path, k, del.d))
              r.fail("delete " + to_string(p) + ": result not insertable: " + *bad);
            else if (proof::insert(del.path, k, del.d).path != p)
              r.fail("insert after delete " + to_string(p) + " k=" + std::to_string(k));
          } catch (const std::exception& ex) {
            r.fail("delete " + to_string(p) + " k=" + std::to_string(k) + ": " + ex.what());
          }
        }
        for (const Label& t : alphabet) {
          if (!p.empty() && t.b() > p.labels().back().b()) continue;
          if (std::find(p.labels().begin(), p.labels().end(), t) != p.labels().end()) continue;
          DirectedPath next = p;
          if (!next.try_append(t) || proof::check_shape(next, k)) continue;
          visit(next);
        }
      };
      visit(DirectedPath(w));
    }
  r.notes.push_back(std::to_string(inserted) + " admissible insertions, " + std::to_string(deleted) + " admissible deletions");
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"examples", "classical", "monk",    "commutativity", "markings",
                                                  "bijections", "scanners",    "insertion", "ledger"};
  return names;
}

Report run_suite(std::string_view name, std::optional<int> max_n) {
  auto n_or = [&](int d) { return max_n.value_or(d); };
  if (name == "examples") return worked_examples();
  if (name == "classical") return classical(n_or(3));
  if (name == "monk") return monk(n_or(3));
  if (name == "commutativity") return commutativity(n_or(3));
  if (name == "markings") return markings(n_or(4));
  if (name == "bijections") return bijections(n_or(3), 2, n_or(3));
  if (name == "scanners") return scanners(n_or(5));
  if (name == "insertion") return insertion(n_or(5), 3, n_or(5));
  if (name == "ledger") return ledger(n_or(3), 2, n_or(3));
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace qkp::verify
