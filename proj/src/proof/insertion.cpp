#include "qkp/proof/insertion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qkp/chains.hpp"
#include "qkp/proof/classify.hpp"

namespace qkp::proof {

int top_row_count(const DirectedPath& p, int k) { return row_count(p, k); }

std::optional<std::string> check_shape(const DirectedPath& p, int k) {
  const auto& ls = p.labels();
  std::set<Label> seen;
  for (const Label& t : ls) {
    if (t.a() > k || t.b() < k) return "(P0)': label " + to_string(t) + " outside L_{k-1} u L_k";
    if (!seen.insert(t).second) return "(P0)': repeated label " + to_string(t);
  }
  if (row_count(p, k) >= 1 && column_count(p, k) >= 1) return "(P0)': both (k,*) and (*,k) labels present";
  for (std::size_t i = 1; i < ls.size(); ++i)
    if (ls[i].b() > ls[i - 1].b()) return "(P1)': second indices increase at step " + std::to_string(i + 1);
  for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
    bool repeated = false;
    for (std::size_t j = 0; j < i; ++j) repeated = repeated || ls[j].a() == ls[i].a();
    if (repeated && !label_precedes(ls[i], ls[i + 1])) return "(P2)': repeated row not followed by a larger label at step " + std::to_string(i + 1);
  }
  return std::nullopt;
}

std::optional<std::string> check_deletable(const DirectedPath& p, int k) {
  if (auto bad = check_shape(p, k)) return bad;
  if (row_count(p, k) >= 1) return std::nullopt;
  const auto kappa = final_label(p);
  if (!kappa || kappa->b() != k) return std::string("(P3)': final label is not of the form (a,k)");
  if (row_count(p, kappa->a()) < 2) return std::string("(P3)': final row occurs once");
  return std::nullopt;
}

std::optional<std::string> check_insertable(const DirectedPath& p, int k, int d) {
  if (d <= k) return std::string("d must exceed k");
  if (auto bad = check_shape(p, k)) return bad;
  std::vector<Label> ls = p.labels();
  ls.emplace_back(k, d);
  if (!validate_path(p.start(), ls)) return std::string("(C1): (k,d) is not an edge at the end of p");
  if (row_count(p, k) >= 1) {
    for (const Label& t : p.labels())
      if (t.a() == k && d >= t.b()) return std::string("(C2): d is not below every (k,c) in p");
    return std::nullopt;
  }
  const auto pk = labels_of_b(p, k);
  if (!pk.empty()) {
    const int is = pk.back().a();
    for (const Label& t : p.labels())
      if (t.a() == is && t.b() >= k + 1 && t.b() <= d) return "(C3): " + to_string(t) + " is in p";
  }
  return std::nullopt;
}

Insertion insert(const DirectedPath& p, int k, int d) {
  if (auto bad = check_insertable(p, k, d)) throw std::invalid_argument("insert: " + *bad);
  const auto& ls = p.labels();
  const Segment seg_k = segment_of_b(p, k);
  const Segment seg_d = segment_of_b(p, d);
  const AlgorithmOutcome out = algorithm_skd(p, seg_k.begin, k, d);

  std::vector<Label> head(ls.begin(), ls.begin() + static_cast<long>(seg_d.end));
  std::vector<Label> mid(ls.begin() + static_cast<long>(seg_d.end), ls.begin() + static_cast<long>(seg_k.begin));
  const auto rows = rows_of(labels_of_b(p, k));

  Insertion ins;
  std::vector<Label> result = head;
  if (out.complete) {
    ins.which_case = row_count(p, k) >= 1 ? 1 : 2;
    result.emplace_back(k, d);
    for (int i : rows) result.emplace_back(i, d);
    result.insert(result.end(), mid.begin(), mid.end());
    ins.moved = rows;
  } else {
    ins.which_case = 3;
    ins.t = out.u;
    const auto t = static_cast<std::size_t>(out.u);
    for (std::size_t r = t - 1; r < rows.size(); ++r) result.emplace_back(rows[r], d);
    result.insert(result.end(), mid.begin(), mid.end());
    for (std::size_t r = 0; r < t; ++r) result.emplace_back(rows[r], k);
    ins.moved.assign(rows.begin() + static_cast<long>(t - 1), rows.end());
  }
  ins.path = require_path(p.start(), result, "insertion of " + to_string(Label(k, d)));
  if (ins.path.end() != out.path.end()) throw std::logic_error("insert: end permutation differs from p * (k,d)");
  return ins;
}

Deletion remove(const DirectedPath& p, int k) {
  if (auto bad = check_deletable(p, k)) throw std::invalid_argument("delete: " + *bad);
  const auto& ls = p.labels();
  Deletion del;
  int a = k;
  if (row_count(p, k) >= 1) {
    del.which_case = 1;
    del.d = 0;
    for (const Label& t : ls)
      if (t.a() == k && (del.d == 0 || t.b() < del.d)) del.d = t.b();
  } else {
    del.which_case = 2;
    a = p.labels().back().a();
    for (const Label& t : ls)
      if (t.a() == a && t.b() > k && (del.d == 0 || t.b() < del.d)) del.d = t.b();
  }
  const Segment seg_d = segment_of_b(p, del.d);
  const auto pos = static_cast<std::size_t>(std::find(ls.begin(), ls.end(), Label(a, del.d)) - ls.begin());
  std::vector<Label> result(ls.begin(), ls.begin() + static_cast<long>(pos));
  result.insert(result.end(), ls.begin() + static_cast<long>(seg_d.end), ls.end());
  for (std::size_t i = pos + 1; i < seg_d.end; ++i) result.emplace_back(ls[i].a(), k);
  del.path = require_path(p.start(), result, "deletion of " + to_string(Label(k, del.d)));
  std::vector<Label> back = result;
  back.emplace_back(k, del.d);
  if (require_path(p.start(), back, "deleted path followed by (k,d)").end() != p.end())
    throw std::logic_error("delete: deleted path followed by (k,d) does not end at ed(p)");
  return del;
}

}  // namespace qkp::proof
