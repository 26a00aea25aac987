#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qkp::verify {

struct Report {
  std::string suite;
  std::string universe;
  std::size_t checked = 0;
  std::size_t failure_count = 0;      // failures.size() is capped, this is not
  std::vector<std::string> failures;  // first `kMaxListed`
  std::vector<std::string> notes;     // documented deviations, diagnostics
  bool passed() const { return failure_count == 0; }
  void fail(std::string what);
};

inline constexpr std::size_t kMaxListed = 50;

// {"suite", "universe", "checked", "failure_count", "failures", "notes"}
std::string to_json(const Report& r, int indent = 2);
std::string to_text(const Report& r);

// The two worked examples: expansions, chain tables and markings, with the
// reference-table discrepancies re-derived rather than taken on trust.
Report worked_examples();
// Pieri products at Q = 0 for w in S_n, 1 <= k <= n, 0 <= p <= k, plus
// 32514 with (k,p) = (3,2); the cyclic recurrence for 2 <= k <= 4.
Report classical(int n);
// The Monk expansion at Q = 0 for x in S_n, 1 <= k < n, and the shape of
// every enumerated Monk chain.
Report monk(int n);
// G_w G^k_p G^l_q in both orders, w in S_n, 1 <= k, l <= n.
Report commutativity(int n);
// Closed-form marking count against a subset search, w in S_n, k < n.
Report markings(int n);
// Every map for w in S_n, kmin <= k <= kmax, 1 <= p <= k.
Report bijections(int n, int kmin, int kmax);
// Ledger identities, partitions and class remarks, same grid.
Report ledger(int n, int kmin, int kmax);
// The path scanners in S_n, each also weakened, and the edge criterion.
Report scanners(int n);
// Window edge criterion against length differences, x in S_n, b <= bmax.
Report edge_criterion(int n, int bmax);
// Insertion/deletion round trips for w in S_n, labels with b <= dmax,
// 1 <= k <= kmax, k < d <= dmax.
Report insertion(int n, int kmax, int dmax);

const std::vector<std::string>& suite_names();
// Runs a suite on its default universe, with n replaced by `max_n` if given.
// Throws std::invalid_argument for an unknown suite.
Report run_suite(std::string_view name, std::optional<int> max_n = std::nullopt);

}  // namespace qkp::verify
