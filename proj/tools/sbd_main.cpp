#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sbd/analyzer.hpp"
#include "sbd/errors.hpp"
#include "sbd/lemmas.hpp"
#include "sbd/numtheory.hpp"
#include "sbd/report_json.hpp"
#include "sbd/search.hpp"

// Machine-readable records go to stdout, one JSON object per line; the
// human summary goes to stderr. Exit codes: 0 success, 1 failed check,
// 2 usage error, 3 parse error.

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Cli {
  Clock::time_point start = Clock::now();
  std::vector<std::string> artifacts;

  void record(const json& j) { std::cout << j.dump() << "\n"; }

  int finish(const std::string& command, const json& inputs,
             const std::string& verdict, int exit_code) {
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - start)
                       .count();
    record(json{{"type", "run_summary"},
                {"command", command},
                {"inputs", inputs},
                {"verdict", verdict},
                {"artifacts", artifacts},
                {"elapsed_ms", ms}});
    std::cerr << command << ": " << verdict << " (" << ms << " ms)\n";
    return exit_code;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sbd::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sbd::SearchLimits limits_from_env() {
  sbd::SearchLimits l;
  if (const char* env = std::getenv("SBD_MAX_NODES")) {
    char* end = nullptr;
    long long n = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && n > 0) l.max_nodes = n;
  }
  return l;
}

sbd::GroupSpec parse_group_file(const std::string& path, int degree) {
  sbd::GroupSpec g{degree, {}};
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    g.generators.push_back(sbd::parse_cycles(line, degree));
  }
  return g;
}

int cmd_verify(Cli& cli, const std::string& path) {
  json inputs{{"file", path}};
  try {
    sbd::Design d = sbd::parse_design(read_file(path));
    cli.record(sbd::design_json(d));
    std::cerr << "valid (" << d.v() << "," << d.k() << "," << d.lambda()
              << ") design, " << d.blocks().size() << " blocks\n";
    return cli.finish("verify", inputs, "ok", 0);
  } catch (const sbd::AxiomViolation& e) {
    cli.record(json{{"type", "axiom_violation"}, {"axiom", e.axiom},
                    {"witness", e.witness}});
    std::cerr << e.what() << "\n";
    return cli.finish("verify", inputs, "violation", 1);
  } catch (const sbd::ParamViolation& e) {
    cli.record(json{{"type", "param_violation"}, {"detail", e.what()}});
    std::cerr << e.what() << "\n";
    return cli.finish("verify", inputs, "violation", 1);
  }
}

int cmd_aut(Cli& cli, const std::string& path, const sbd::SearchLimits& limits) {
  json inputs{{"file", path}};
  sbd::Design d = sbd::parse_design(read_file(path));
  try {
    sbd::AutGroupResult r = sbd::automorphism_group(d, limits);
    cli.record(sbd::aut_json(r));
    std::cerr << "automorphism group order " << r.order << ", "
              << r.generators.size() << " generators, " << r.node_count
              << " nodes\n";
    return cli.finish("aut", inputs, "ok", 0);
  } catch (const sbd::BudgetExceeded& e) {
    cli.record(json{{"type", "budget"}, {"detail", e.what()}});
    return cli.finish("aut", inputs, "budget-exceeded", 0);
  }
}

int cmd_fixed(Cli& cli, const std::string& path, const std::string& perm_text) {
  json inputs{{"file", path}, {"perm", perm_text}};
  sbd::Design d = sbd::parse_design(read_file(path));
  sbd::Perm p = sbd::parse_cycles(perm_text, d.v());
  try {
    sbd::FixedData f = sbd::fixed_structure(d, p);
    cli.record(sbd::fixed_structure_json(d, p, f));
    std::cerr << "|F| = " << f.fixed_points.size()
              << ", |F_b| = " << f.fixed_blocks.size() << "\n";

    long long order = sbd::perm_order(p);
    if (sbd::is_prime(order)) {
      sbd::LemmaReport rep = sbd::lemma_suite(d, p, order);
      cli.record(sbd::lemma_report_json(rep));
      if (!rep.all_applicable_hold()) {
        std::cerr << "an applicable predicate fails\n";
        return cli.finish("fixed", inputs, "violation", 1);
      }
      std::cerr << "all applicable predicates hold\n";
    } else {
      cli.record(json{{"type", "lemma_report"}, {"skipped", true},
                      {"reason", "permutation order " + std::to_string(order) +
                                     " is not prime"}});
      std::cerr << "suite skipped: order " << order << " is not prime\n";
    }
    return cli.finish("fixed", inputs, "ok", 0);
  } catch (const sbd::NotAutomorphism& e) {
    cli.record(json{{"type", "not_automorphism"}, {"detail", e.what()}});
    std::cerr << e.what() << "\n";
    return cli.finish("fixed", inputs, "violation", 1);
  }
}

int cmd_analyze(Cli& cli, int v, int k, int lambda, long long prime, bool all,
                bool no_external_facts) {
  sbd::DesignParams params{v, k, lambda};
  json inputs{{"v", v}, {"k", k}, {"lambda", lambda}};

  if (!all) {
    inputs["prime"] = prime;
    sbd::PrimeReport rep = sbd::analyze_prime(params, prime);
    cli.record(sbd::prime_report_json(rep));
    std::string verdict = rep.contradiction() ? "contradiction" : "feasible";
    std::cerr << "p = " << prime << ": " << verdict;
    if (!rep.contradiction()) {
      std::cerr << ", |F| in {";
      for (std::size_t i = 0; i < rep.survivors.size(); ++i)
        std::cerr << (i ? " " : "") << rep.survivors[i];
      std::cerr << "}";
    }
    std::cerr << "\n";
    return cli.finish("analyze", inputs, verdict, 0);
  }

  inputs["all"] = true;
  for (long long p : sbd::primes_up_to(params.v)) {
    if (sbd::prime_admissible(params, p) == sbd::PrimeAdmissibility::excluded)
      continue;
    cli.record(sbd::prime_report_json(sbd::analyze_prime(params, p)));
  }
  auto facts = no_external_facts ? std::vector<sbd::KnownFact>{}
                                 : sbd::standard_facts(params);
  sbd::TheoremReport rep = sbd::full_report(params, facts);
  cli.record(sbd::theorem_report_json(rep));
  std::cerr << "allowed primes:";
  for (long long p : rep.allowed_primes) std::cerr << " " << p;
  std::cerr << "\nforbidden element orders:";
  for (long long o : rep.forbidden_element_orders) std::cerr << " " << o;
  std::cerr << "\n";
  return cli.finish("analyze", inputs, "ok", 0);
}

int cmd_burnside(Cli& cli, long long v, long long order, long long fix) {
  json inputs{{"v", v}, {"order", order}, {"fix", fix}};
  // prime-power orders get the full p-group record; anything else is the
  // plain integrality probe with a uniform nonidentity fixed count
  long long p = 0;
  int n = 0;
  if (order >= 2) {
    long long rest = order, q = 2;
    while (q <= rest && rest % q != 0) ++q;
    p = q;
    while (rest % q == 0) {
      rest /= q;
      ++n;
    }
    if (rest != 1) {
      p = 0;
      n = 0;
    }
  }
  sbd::Fraction r = sbd::Fraction::of(v + (order - 1) * fix, order);
  if (p != 0) {
    sbd::IntegralityReport rep = sbd::pgroup_integrality(v, p, n, {{p, fix}});
    cli.record(sbd::integrality_json(rep));
  } else {
    cli.record(json{{"type", "integrality"}, {"v", v}, {"group_order", order},
                    {"nonidentity", order - 1}, {"fixed_count", fix},
                    {"r", json{{"num", r.num}, {"den", r.den}, {"str", r.str()}}},
                    {"verdict", r.integral() ? "possible" : "impossible"}});
  }
  std::cerr << "r = " << r.str() << (r.integral() ? " (integral)" : " (not integral)")
            << "\n";
  return cli.finish("burnside", inputs, r.integral() ? "feasible" : "contradiction", 0);
}

int cmd_search_ds(Cli& cli, int v, int k, int lambda, const sbd::SearchLimits& limits) {
  json inputs{{"v", v}, {"k", k}, {"lambda", lambda}};
  sbd::DifferenceSetSearch r = sbd::search_difference_sets(v, k, lambda, limits);
  for (const auto& s : r.sets)
    cli.record(json{{"type", "difference_set"}, {"v", v}, {"set", s}});
  cli.record(json{{"type", "search_summary"}, {"results", r.sets.size()},
                  {"nodes", r.nodes}, {"budget_exceeded", r.budget_exceeded}});
  std::cerr << r.sets.size() << " difference sets, " << r.nodes << " nodes\n";
  return cli.finish("search-ds", inputs,
                    r.budget_exceeded ? "budget-exceeded" : "ok", 0);
}

int cmd_search(Cli& cli, int v, int k, int lambda, const std::string& group_path,
               const std::string& out_dir, const sbd::SearchLimits& limits) {
  json inputs{{"v", v}, {"k", k}, {"lambda", lambda}};
  sbd::GroupSpec group{v, {}};
  if (!group_path.empty()) {
    group = parse_group_file(group_path, v);
    inputs["group"] = group_path;
  }
  sbd::InvariantSearchResult r =
      sbd::search_invariant_designs(sbd::DesignParams{v, k, lambda}, group, limits);

  int counter = 0;
  for (const sbd::Design& d : r.designs) {
    cli.record(sbd::design_json(d));
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      char name[64];
      std::snprintf(name, sizeof name, "design-%03d.design", ++counter);
      std::string path = (std::filesystem::path(out_dir) / name).string();
      std::ofstream out(path, std::ios::binary);
      out << sbd::serialize_design(d);
      cli.artifacts.push_back(path);
    }
  }
  cli.record(json{{"type", "search_summary"}, {"results", r.designs.size()},
                  {"nodes", r.nodes}, {"budget_exceeded", r.budget_exceeded}});
  std::cerr << r.designs.size() << " designs, " << r.nodes << " nodes\n";
  return cli.finish("search", inputs, r.budget_exceeded ? "budget-exceeded" : "ok",
                    0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric (v,k,lambda) design toolkit"};
  app.require_subcommand(1);

  sbd::SearchLimits limits = limits_from_env();
  app.add_option("--max-nodes", limits.max_nodes, "search node budget")
      ->check(CLI::PositiveNumber);

  std::string file, perm_text, group_path, out_dir;
  int v = 0, k = 0, lambda = 0;
  long long prime = 0, order = 0, fix = 0;
  bool all = false, no_external = false;

  CLI::App* verify = app.add_subcommand("verify", "check the design axioms");
  verify->add_option("file", file)->required();

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of a design");
  aut->add_option("file", file)->required();

  CLI::App* fixed = app.add_subcommand("fixed", "fixed structure of an automorphism");
  fixed->add_option("file", file)->required();
  fixed->add_option("--perm", perm_text, "cycle notation, e.g. \"(4 5)(6 7)\"")
      ->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "fixed-point feasibility for prime orders");
  analyze->add_option("--v", v)->required();
  analyze->add_option("--k", k)->required();
  analyze->add_option("--lambda", lambda)->required();
  CLI::Option* po = analyze->add_option("--prime", prime, "single prime to analyze");
  analyze->add_flag("--all", all, "all primes up to v, plus the group-order report");
  analyze->add_flag("--no-external-facts", no_external,
                    "drop imported fixed-count facts");
  po->excludes("--all");

  long long bv = 0;
  CLI::App* burn = app.add_subcommand("burnside", "orbit-count integrality probe");
  burn->add_option("--v", bv, "point count")->required();
  burn->add_option("--order", order, "group order")->required();
  burn->add_option("--fix", fix, "fixed count of nonidentity elements")->required();

  CLI::App* sds = app.add_subcommand("search-ds", "enumerate difference sets");
  sds->add_option("--v", v)->required();
  sds->add_option("--k", k)->required();
  sds->add_option("--lambda", lambda)->required();

  CLI::App* search = app.add_subcommand("search", "designs invariant under a group");
  search->add_option("--v", v)->required();
  search->add_option("--k", k)->required();
  search->add_option("--lambda", lambda)->required();
  search->add_option("--group", group_path, "file with one permutation per line");
  search->add_option("--out", out_dir, "write found designs to this directory");
  search->add_option("--max-results", limits.max_results)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Cli cli;
  try {
    if (*verify) return cmd_verify(cli, file);
    if (*aut) return cmd_aut(cli, file, limits);
    if (*fixed) return cmd_fixed(cli, file, perm_text);
    if (*analyze) {
      if (!all && prime == 0) {
        std::cerr << "analyze needs --prime or --all\n";
        return 2;
      }
      return cmd_analyze(cli, v, k, lambda, prime, all, no_external);
    }
    if (*burn) return cmd_burnside(cli, bv, order, fix);
    if (*sds) return cmd_search_ds(cli, v, k, lambda, limits);
    if (*search) return cmd_search(cli, v, k, lambda, group_path, out_dir, limits);
  } catch (const sbd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const sbd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
