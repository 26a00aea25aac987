#include "qkp/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qkp/expansion.hpp"
#include "qkp/report.hpp"
#include "qkp/verify.hpp"

namespace qkp::cli {

namespace {

struct Config {
  std::string w;
  int k = 1;
  int p = 0;
  std::string format = "text";
  std::optional<int> filter_sn;
  std::optional<int> max_n;
  std::string suite;
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_kp(const Config& c, bool need_p) {
  if (c.k < 1) throw UsageError("--k must be at least 1");
  if (need_p && (c.p < 0 || c.p > c.k)) throw UsageError("--p must satisfy 0 <= p <= k");
  if (c.filter_sn && *c.filter_sn < 1) throw UsageError("--filter-sn must be at least 1");
}

Permutation perm(const Config& c) {
  try {
    return parse_permutation(c.w);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(std::string("bad permutation: ") + ex.what());
  }
}

std::string render(const Expansion& e, const Config& c, const std::vector<Permutation>& order = {}) {
  const Expansion shown = c.filter_sn ? e.restricted_to_sn(*c.filter_sn) : e;
  return c.format == "json" ? render_json(shown) + "\n" : render_text(shown, order) + "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pieri products of quantum Grothendieck polynomials"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub, bool with_p) {
    sub->add_option("--w,--x", cfg.w, "permutation in one-line notation, e.g. 321 or e")->required();
    sub->add_option("--k", cfg.k, "level k >= 1")->required();
    if (with_p) sub->add_option("--p", cfg.p, "0 <= p <= k");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "write output to this file");
  };
  CLI::App* expand = app.add_subcommand("expand", "expand G_w G^k_p");
  common(expand, true);
  expand->add_option("--filter-sn", cfg.filter_sn, "keep only G[u] with u in S_n");
  CLI::App* monk = app.add_subcommand("monk", "expand (1 - Q_k)(1 - x_k) G_x");
  common(monk, false);
  monk->add_option("--filter-sn", cfg.filter_sn, "keep only G[u] with u in S_n");
  CLI::App* chains = app.add_subcommand("chains", "k-Pieri chains with their p-markings");
  common(chains, true);
  CLI::App* marks = app.add_subcommand("markings", "marking counts per chain");
  common(marks, true);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suites;
  for (const auto& s : verify::suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  verify->add_option("--suite", cfg.suite, suites)->required()->check(CLI::IsMember(verify::suite_names()));
  verify->add_option("--max-n", cfg.max_n, "symmetric group bound for the suite universe")->check(CLI::Range(1, 7));
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", cfg.out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return kUsageError;
  }

  std::ostringstream buf;
  int code = kPass;
  try {
    if (expand->parsed()) {
      check_kp(cfg, true);
      const Permutation w = perm(cfg);
      buf << render(pieri_expand(w, cfg.k, cfg.p), cfg, chain_order(w, cfg.k));
    } else if (monk->parsed()) {
      check_kp(cfg, false);
      buf << render(monk_lhs_expand(perm(cfg), cfg.k), cfg);
    } else if (chains->parsed()) {
      check_kp(cfg, true);
      const auto rows = chain_table(perm(cfg), cfg.k, cfg.p);
      buf << (cfg.format == "json" ? chain_table_json(rows) + "\n" : render_chain_table(rows, cfg.p));
    } else if (marks->parsed()) {
      check_kp(cfg, true);
      buf << render_marking_counts(perm(cfg), cfg.k, cfg.p);
    } else if (verify->parsed()) {
      const verify::Report r = verify::run_suite(cfg.suite, cfg.max_n);
      buf << (cfg.format == "json" ? verify::to_json(r) + "\n" : verify::to_text(r));
      if (!r.passed()) code = kVerificationFailure;
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kVerificationFailure;
  }

  if (cfg.out.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "error: cannot write " << cfg.out << "\n";
      return kUsageError;
    }
    file << buf.str();
  }
  return code;
}

}  // namespace qkp::cli
