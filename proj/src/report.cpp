#include "qkp/report.hpp"

#include <json.hpp>

namespace qkp {

std::vector<ChainRow> chain_table(const Permutation& w, int k, int p) {
  std::vector<ChainRow> rows;
  for (const PieriChain& c : enumerate_pieri_chains(w, k)) rows.push_back({c.path(), enumerate_markings(c, p)});
  return rows;
}

std::string render_marking(const DirectedPath& chain, const Marking& m) {
  std::string out = "{";
  bool first = true;
  for (const Label& t : in_path_order(chain, m)) {
    if (!first) out += ",";
    first = false;
    out += to_string(t);
  }
  return out + "}";
}

std::string render_row(const ChainRow& row) {
  std::string marks;
  for (const Marking& m : row.markings) {
    if (!marks.empty()) marks += ",";
    marks += render_marking(row.chain, m);
  }
  if (marks.empty()) marks = "∅";
  return to_string(row.chain, "w") + " | " + marks + " | " + to_string(row.chain.end());
}

std::string render_chain_table(const std::vector<ChainRow>& rows, int p) {
  std::string out = "chain | Mark_" + std::to_string(p) + " | end\n";
  for (const ChainRow& r : rows) out += render_row(r) + "\n";
  return out;
}

std::string chain_table_json(const std::vector<ChainRow>& rows, int indent) {
  auto arr = nlohmann::json::array();
  for (const ChainRow& r : rows) {
    auto chain = nlohmann::json::array();
    for (std::size_t i = 0; i < r.chain.size(); ++i)
      chain.push_back({r.chain.label(i).a(), r.chain.label(i).b(), to_string(r.chain.kinds()[i])});
    auto marks = nlohmann::json::array();
    for (const Marking& m : r.markings) {
      auto one = nlohmann::json::array();
      for (const Label& t : in_path_order(r.chain, m)) one.push_back({t.a(), t.b()});
      marks.push_back(one);
    }
    arr.push_back({{"chain", chain}, {"markings", marks}, {"end", to_string(r.chain.end())}});
  }
  return arr.dump(indent);
}

std::string render_marking_counts(const Permutation& w, int k, int p) {
  std::string out = "chain | closed form | enumerated | Mark_" + std::to_string(p) + "\n";
  for (const ChainRow& r : chain_table(w, k, p)) {
    std::string marks;
    for (const Marking& m : r.markings) marks += (marks.empty() ? "" : ",") + render_marking(r.chain, m);
    out += to_string(r.chain, "w") + " | " + std::to_string(marking_count(r.chain, p)) + " | " + std::to_string(r.markings.size()) +
           " | " + (marks.empty() ? "∅" : marks) + "\n";
  }
  return out;
}

}  // namespace qkp
