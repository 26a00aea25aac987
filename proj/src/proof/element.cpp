#include "qkp/proof/element.hpp"

#include <stdexcept>

namespace qkp::proof {

Element embed(int h, int g, DirectedPath chain, Marking marking) {
  DirectedPath monk(chain.end());
  return Element{h, g, std::move(chain), std::move(marking), std::move(monk)};
}

WeightTerm weight(const Element& e, int k) {
  const auto tail = static_cast<long>(e.monk.size() - monk_star_k_length(e.monk, k));
  const long exponent = static_cast<long>(e.chain.size()) - e.g + tail;
  WeightTerm t;
  t.sign = exponent % 2 == 0 ? 1 : -1;
  t.q = q_weight(e.chain) * q_weight(e.monk);
  t.basis = e.monk.end();
  return t;
}

Expansion as_expansion(const WeightTerm& t) { return Expansion::basis(t.basis, QPolynomial(t.q, t.sign)); }

Universe::Universe(Permutation w, int k) : w_(std::move(w)), k_(k) {
  if (k < 1) throw std::invalid_argument("Universe needs k >= 1");
}

const std::vector<Element>& Universe::elements(int h, int g) {
  auto [it, inserted] = cache_.try_emplace({h, g});
  if (!inserted) return it->second;
  auto& out = it->second;
  if (h < 0 || g < 0 || h > k_) return out;
  for (const PieriChain& c : enumerate_pieri_chains(w_, h)) {
    for (Marking& m : enumerate_markings(c, g)) {
      if (h == k_) {
        out.push_back(embed(h, g, c.path(), std::move(m)));
        continue;
      }
      for (const MonkChain& mc : enumerate_monk_chains(c.path().end(), k_))
        out.push_back(Element{h, g, c.path(), m, mc.path()});
    }
  }
  return out;
}

std::string to_string(const Element& e) {
  std::string mark = "{";
  bool first = true;
  for (const Label& t : in_path_order(e.chain, e.marking)) {
    if (!first) mark += ",";
    first = false;
    mark += to_string(t);
  }
  mark += "}";
  return "(" + to_string(e.chain) + " ; " + mark + " | " + to_string(e.monk) + ")";
}

}  // namespace qkp::proof
