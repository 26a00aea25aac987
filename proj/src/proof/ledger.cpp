#include "qkp/proof/ledger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qkp::proof {

Expansion class_sum(Universe& u, SetId s, int h, int g) {
  if (h < 0 || g < 0) return {};
  return sum_weights(select(u.elements(h, g), s, u.k()), u.k());
}

namespace {

Expansion all_sum(Universe& u, int h, int g) {
  if (h < 0 || g < 0) return {};
  return sum_weights(u.elements(h, g), u.k());
}

}  // namespace

std::vector<IdentityCheck> ledger_identities(Universe& u, int p) {
  const int k = u.k();
  if (k < 2 || p < 1 || p > k) throw std::invalid_argument("ledger_identities: need k >= 2 and 1 <= p <= k");
  using S = SetId;
  auto sum = [&](S s, int h, int g) { return class_sum(u, s, h, g); };
  const QPolynomial qk(QMonomial::variable(k - 1));
  const Expansion pieri = pieri_expand(u.w(), k, p);
  const Expansion slice = sum(S::EmptySlice, k - 1, p - 1);

  std::vector<IdentityCheck> out;
  const Expansion top = sum(S::Top, k, p);
  out.push_back({"top", pieri, top});

  auto layer = [&](int g) { return all_sum(u, k - 1, g) - all_sum(u, k - 2, g - 1) * qk; };
  out.push_back({"ind1", (pieri - slice) * (QPolynomial(1) - qk), layer(p) - layer(p - 1)});

  auto remaining = [&](int g) {
    return sum(S::AY, k - 1, g) + sum(S::B2Y, k - 1, g) + sum(S::B3Y, k - 1, g) - sum(S::D2Y, k - 2, g - 1) * qk;
  };
  out.push_back({"ind2", pieri, slice + remaining(p) - remaining(p - 1)});

  auto a1y2_e = [&](int g) { return sum(S::A1Y2, k - 1, g) + sum(S::E, k - 1, g); };
  const Expansion ind4 = a1y2_e(p) + sum(S::A1Empty, k - 1, p) + sum(S::G, k - 1, p) - a1y2_e(p - 1) + sum(S::F, k - 1, p - 1);
  out.push_back({"ind4", pieri, ind4});

  // F side at (k-1, p-1) against the S side at (k, p).
  const Expansion f_side = sum(S::F, k - 1, p - 1) - sum(S::F1, k - 1, p - 1) - sum(S::F21, k - 1, p - 1) - sum(S::F22, k - 1, p - 1);
  const Expansion s_side = sum(S::R, k, p) + sum(S::S11, k, p) + sum(S::S12a, k, p) + sum(S::S12b, k, p) + sum(S::S2, k, p);
  out.push_back({"matched", s_side + f_side, top});

  out.push_back({"grand", ind4 - top, Expansion()});
  return out;
}

std::vector<std::string> check_partitions(Universe& u) {
  const int k = u.k();
  std::vector<std::string> fails;
  for (const Partition& part : partitions()) {
    const int h = set_level(part.whole, k);
    if (h < 0) continue;
    for (int g = 0; g <= k; ++g) {
      for (const Element& e : u.elements(h, g)) {
        const bool whole = in_set(part.whole, e, k);
        int hits = 0;
        for (SetId s : part.parts) hits += in_set(s, e, k) ? 1 : 0;
        if (whole ? hits == 1 : hits == 0) continue;
        fails.push_back(std::string(set_name(part.whole)) + ": " + std::to_string(hits) + " parts contain " + to_string(e) +
                        (whole ? "" : " (outside the whole)"));
        if (fails.size() >= 20) return fails;
      }
    }
  }
  return fails;
}

std::vector<std::string> check_class_remarks(Universe& u) {
  const int k = u.k();
  const Label top(k - 1, k);
  std::vector<std::string> fails;
  for (int g = 0; g <= k - 1; ++g) {
    for (const Element& e : u.elements(k - 1, g)) {
      auto fail = [&](const std::string& what) { fails.push_back(what + ": " + to_string(e)); };
      if ((in_set(SetId::B1X, e, k) || in_set(SetId::B1Y, e, k)) && final_label(e.chain) != top) fail("B1 with kappa != (k-1,k)");
      const bool bns = in_set(SetId::B2X, e, k) || in_set(SetId::B2Y, e, k) || in_set(SetId::B3X, e, k) || in_set(SetId::B3Y, e, k);
      if (bns && row_count(e.chain, k - 1) != 1) fail("B2/B3 with n_(k-1,*) != 1");
      if (in_set(SetId::BnsY3Circ1, e, k) || in_set(SetId::BnsY3Circ2, e, k)) {
        const auto pk = labels_of_b(e.chain, k);
        const auto at = std::find(pk.begin(), pk.end(), top);
        auto row_set = [](std::vector<Label> ls) {
          const auto r = rows_of(ls);
          return std::set<int>(r.begin(), r.end());
        };
        const std::set<int> before = row_set({pk.begin(), at});
        const std::set<int> after = row_set({at, pk.end()});
        const std::size_t nk = monk_star_k_length(e.monk, k);
        for (std::size_t i = 0; i < nk; ++i) {
          const int c = e.monk.label(i).a();
          if (after.count(c) && !before.count(c)) fail("Monk row " + std::to_string(c) + " meets (k-1,k) or a later row only");
        }
      }
    }
    if (fails.size() >= 20) break;
  }
  return fails;
}

}  // namespace qkp::proof
