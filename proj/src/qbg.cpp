#include "qkp/qbg.hpp"

#include <stdexcept>

namespace qkp {

std::optional<EdgeKind> edge_kind(const Permutation& x, Label t) {
  const int a = t.a(), b = t.b();
  const int xa = x(a), xb = x(b);
  if (xa < xb) {
    for (int c = a + 1; c < b; ++c)
      if (x(c) >= xa && x(c) <= xb) return std::nullopt;
    return EdgeKind::Bruhat;
  }
  for (int c = a + 1; c < b; ++c)
    if (x(c) < xb || x(c) > xa) return std::nullopt;
  return EdgeKind::Quantum;
}

QMonomial edge_weight(Label t, EdgeKind kind) {
  return kind == EdgeKind::Quantum ? QMonomial::interval(t.a(), t.b()) : QMonomial{};
}

DirectedPath::DirectedPath(Permutation start) { vertices_.push_back(std::move(start)); }

bool DirectedPath::try_append(Label t) {
  auto kind = edge_kind(end(), t);
  if (!kind) return false;
  vertices_.push_back(apply_transposition(end(), t));
  labels_.push_back(t);
  kinds_.push_back(*kind);
  return true;
}

std::optional<DirectedPath> validate_path(const Permutation& start, std::span<const Label> labels,
                                          std::size_t* failing_index) {
  DirectedPath p(start);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!p.try_append(labels[i])) {
      if (failing_index) *failing_index = i;
      return std::nullopt;
    }
  }
  return p;
}

DirectedPath require_path(const Permutation& start, std::span<const Label> labels, const std::string& what) {
  std::size_t bad = 0;
  auto p = validate_path(start, labels, &bad);
  if (!p) {
    std::string seq;
    for (const auto& t : labels) seq += to_string(t);
    throw std::logic_error(what + ": step " + std::to_string(bad) + " of (" + to_string(start) + " ; " + seq +
                           ") is not an edge");
  }
  return *p;
}

QMonomial q_weight(const DirectedPath& p) {
  QMonomial m;
  for (std::size_t i = 0; i < p.size(); ++i) m *= edge_weight(p.label(i), p.kinds()[i]);
  return m;
}

std::vector<std::pair<Label, Label>> local_transform(const Permutation& v, int which_case, Label s, Label t) {
  const Label st[] = {s, t};
  if (!validate_path(v, st)) throw std::invalid_argument("local_transform: input is not a directed path");
  std::vector<std::pair<Label, Label>> candidates;
  auto bad_shape = [&] { throw std::invalid_argument("local_transform: shape does not match case " + std::to_string(which_case)); };
  switch (which_case) {
    case 1:
      if (s.a() == t.a() || s.a() == t.b() || s.b() == t.a() || s.b() == t.b()) bad_shape();
      candidates.emplace_back(t, s);
      break;
    case 2:  // common larger index c
      if (s.b() != t.b() || s.a() == t.a()) bad_shape();
      if (s.a() < t.a())
        candidates.emplace_back(t, Label(s.a(), t.a()));
      else
        candidates.emplace_back(Label(t.a(), s.a()), s);
      break;
    case 3:  // common smaller index a
      if (s.a() != t.a() || s.b() == t.b()) bad_shape();
      if (s.b() < t.b())
        candidates.emplace_back(Label(s.b(), t.b()), s);
      else
        candidates.emplace_back(t, Label(t.b(), s.b()));
      break;
    case 4:
      if (s.b() == t.a()) {  // (a,b),(b,c)
        Label ac(s.a(), t.b());
        candidates.emplace_back(t, ac);
        candidates.emplace_back(ac, s);
      } else if (t.b() == s.a()) {  // (b,c),(a,b)
        Label ac(t.a(), s.b());
        candidates.emplace_back(ac, s);
        candidates.emplace_back(t, ac);
      } else {
        bad_shape();
      }
      break;
    default:
      throw std::invalid_argument("local_transform: case must be 1..4");
  }
  std::vector<std::pair<Label, Label>> out;
  for (const auto& [x, y] : candidates) {
    const Label xy[] = {x, y};
    if (validate_path(v, xy)) out.emplace_back(x, y);
  }
  return out;
}

AlgorithmOutcome algorithm_skd(const DirectedPath& path, std::size_t segment_start, int k, int d) {
  if (k < 1 || d <= k) throw std::invalid_argument("algorithm_skd needs d > k >= 1");
  if (segment_start > path.size()) throw std::invalid_argument("algorithm_skd: segment start out of range");
  for (std::size_t i = segment_start; i < path.size(); ++i)
    if (path.label(i).b() != k) throw std::invalid_argument("algorithm_skd: trailing run must have second index k");

  std::vector<Label> labels = path.labels();
  labels.emplace_back(k, d);
  AlgorithmOutcome out;
  out.path = require_path(path.start(), labels, "algorithm_skd input with (k,d) appended");
  const Permutation target = out.path.end();

  int u = static_cast<int>(path.size() - segment_start);
  std::size_t pos = path.size();  // index of (k,d)
  while (u > 0) {
    const int j = labels[pos - 1].a();
    auto commuted = labels;
    commuted[pos - 1] = Label(k, d);
    commuted[pos] = Label(j, d);
    auto swapped = labels;
    swapped[pos - 1] = Label(j, d);
    swapped[pos] = Label(j, k);
    auto p_commuted = validate_path(path.start(), commuted);
    auto p_swapped = validate_path(path.start(), swapped);
    if (p_commuted && p_swapped) out.both_valid_seen = true;
    if (p_commuted) {
      labels = std::move(commuted);
      out.path = std::move(*p_commuted);
      --pos;
      --u;
      continue;
    }
    if (!p_swapped) throw std::logic_error("algorithm_skd: neither rewrite of (j,k),(k,d) is a directed path");
    out.path = std::move(*p_swapped);
    out.u = u;
    out.complete = false;
    if (out.path.end() != target) throw std::logic_error("algorithm_skd: end permutation changed");
    return out;
  }
  out.complete = true;
  out.u = 0;
  if (out.path.end() != target) throw std::logic_error("algorithm_skd: end permutation changed");
  return out;
}

std::string to_string(EdgeKind kind) { return kind == EdgeKind::Bruhat ? "B" : "Q"; }

std::string to_string(const DirectedPath& p, const std::string& start_name) {
  std::string out = "(" + (start_name.empty() ? to_string(p.start()) : start_name) + " ; ";
  if (p.empty()) return out + "∅)";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.label(i)) + "_" + to_string(p.kinds()[i]);
  }
  return out + ")";
}

}  // namespace qkp
