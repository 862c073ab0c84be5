// Drives the installed binary through popen and checks records, verdicts and
// exit codes. The binary path comes from SBD_BIN (set by ctest).

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

int checks = 0, failures = 0;

void expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::vector<json> records;
};

RunResult run(const std::string& bin, const std::string& args) {
  RunResult r;
  std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    r.records.push_back(json::parse(line, nullptr, false));
  }
  return r;
}

const json* find_record(const RunResult& r, const std::string& type) {
  for (const json& j : r.records)
    if (j.is_object() && j.value("type", "") == type) return &j;
  return nullptr;
}

std::string strip_elapsed(const RunResult& r) {
  std::string out;
  for (json j : r.records) {
    if (j.is_object() && j.value("type", "") == "run_summary") j.erase("elapsed_ms");
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace

int main() {
  const char* bin_env = std::getenv("SBD_BIN");
  if (!bin_env) {
    std::cerr << "SBD_BIN not set\n";
    return 1;
  }
  std::string bin = bin_env;

  auto tmp = std::filesystem::temp_directory_path() / "sbd_cli_tests";
  std::filesystem::create_directories(tmp);
  std::string fano = (tmp / "fano.design").string();
  {
    std::ofstream f(fano);
    f << "7 3 1\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";
  }
  std::string broken = (tmp / "broken.design").string();
  {
    std::ofstream f(broken);
    f << "7 3 1\n1 2 3\n1 2 3\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n";
  }
  std::string garbage = (tmp / "garbage.design").string();
  {
    std::ofstream f(garbage);
    f << "7 3 1\n1 2 zebra\n";
  }
  std::string c7 = (tmp / "c7.group").string();
  {
    std::ofstream f(c7);
    f << "# cyclic shift\n(1 2 3 4 5 6 7)\n";
  }

  {
    RunResult r = run(bin, "verify " + fano);
    expect(r.exit_code == 0, "verify valid design exits 0");
    const json* s = find_record(r, "run_summary");
    expect(s && (*s)["verdict"] == "ok", "verify verdict ok");
    expect(find_record(r, "design") != nullptr, "verify emits the design record");
  }

  {
    RunResult r = run(bin, "verify " + broken);
    expect(r.exit_code == 1, "verify broken design exits 1");
    const json* s = find_record(r, "run_summary");
    expect(s && (*s)["verdict"] == "violation", "verify verdict violation");
    const json* a = find_record(r, "axiom_violation");
    expect(a && (*a)["axiom"] == 3, "duplicate block reports axiom 3");
  }

  {
    RunResult r = run(bin, "verify " + garbage);
    expect(r.exit_code == 3, "parse error exits 3");
  }

  {
    RunResult r = run(bin, "frobnicate");
    expect(r.exit_code == 2, "unknown subcommand exits 2");
    r = run(bin, "analyze --v 81 --k 16 --lambda 3");
    expect(r.exit_code == 2, "analyze without --prime/--all exits 2");
  }

  {
    RunResult r = run(bin, "analyze --v 81 --k 16 --lambda 3 --prime 7");
    expect(r.exit_code == 0, "analysis reaching a contradiction still exits 0");
    const json* p = find_record(r, "prime_report");
    expect(p && (*p)["verdict"] == "contradiction", "p=7 verdict contradiction");
    expect(p && (*p)["candidates"] == json::array({4, 11, 18}), "p=7 R1 set");
    expect(p && (*p)["g_base"] == json::array({9}), "p=7 g-set");

    RunResult again = run(bin, "analyze --v 81 --k 16 --lambda 3 --prime 7");
    expect(strip_elapsed(r) == strip_elapsed(again),
           "reports are byte-identical across runs");
  }

  {
    RunResult r = run(bin, "analyze --v 81 --k 16 --lambda 3 --all");
    expect(r.exit_code == 0, "analyze --all exits 0");
    const json* t = find_record(r, "theorem_report");
    expect(t && (*t)["allowed_primes"] == json::array({2, 3, 5, 13}),
           "theorem report allowed primes");
    expect(t && (*t)["forbidden_element_orders"] == json::array({7, 10, 11, 26, 65}),
           "theorem report forbidden orders");

    RunResult bare = run(bin, "analyze --v 81 --k 16 --lambda 3 --all --no-external-facts");
    const json* tb = find_record(bare, "theorem_report");
    expect(tb && (*tb)["elementary_abelian_2_cap"] == "unknown",
           "--no-external-facts drops the 2-rank cap");
  }

  {
    RunResult r = run(bin, "fixed " + fano + " --perm \"(4 5)(6 7)\"");
    expect(r.exit_code == 0, "fixed on an automorphism exits 0");
    const json* f = find_record(r, "fixed_structure");
    expect(f && (*f)["fixed_point_count"] == 3, "|F| = 3");
    expect(f && (*f)["fixed_block_count"] == 3, "|F_b| = 3");
    const json* l = find_record(r, "lemma_report");
    expect(l && (*l)["all_applicable_hold"] == true, "all applicable predicates hold");

    RunResult bad = run(bin, "fixed " + fano + " --perm \"(1 2)\"");
    expect(bad.exit_code == 1, "fixed on a non-automorphism exits 1");
  }

  {
    RunResult r = run(bin, "aut " + fano);
    const json* a = find_record(r, "aut_group");
    expect(a && (*a)["order"] == 168, "fano automorphism group order 168");
  }

  {
    RunResult r = run(bin, "burnside --v 81 --order 8 --fix 9");
    const json* i = find_record(r, "integrality");
    expect(i && (*i)["verdict"] == "possible", "order 8 is possible");
    expect(i && (*i)["r"]["str"] == "18", "r = 18");

    RunResult r2 = run(bin, "burnside --v 81 --order 25 --fix 1");
    const json* i2 = find_record(r2, "integrality");
    expect(i2 && (*i2)["verdict"] == "impossible", "order 25 is impossible");
    expect(i2 && (*i2)["r"]["str"] == "21/5", "r = 21/5");
  }

  {
    RunResult r = run(bin, "search-ds --v 7 --k 3 --lambda 1");
    int count = 0;
    for (const json& j : r.records)
      if (j.is_object() && j.value("type", "") == "difference_set") ++count;
    expect(count == 14, "14 difference sets for (7,3,1)");
  }

  {
    // node budget via environment variable
    RunResult r = run("SBD_MAX_NODES=3 " + bin, "search-ds --v 7 --k 3 --lambda 1");
    const json* s = find_record(r, "search_summary");
    expect(s && (*s)["budget_exceeded"] == true, "SBD_MAX_NODES caps the search");
    const json* rs = find_record(r, "run_summary");
    expect(rs && (*rs)["verdict"] == "budget-exceeded",
           "budget exhaustion is the reported verdict");
  }

  {
    std::string out_dir = (tmp / "found").string();
    RunResult r = run(bin, "search --v 7 --k 3 --lambda 1 --group " + c7 +
                               " --out " + out_dir);
    int count = 0;
    for (const json& j : r.records)
      if (j.is_object() && j.value("type", "") == "design") ++count;
    expect(count == 2, "2 cyclic (7,3,1) designs");
    const json* s = find_record(r, "run_summary");
    expect(s && (*s)["artifacts"].size() == 2, "two design files written");
    if (s)
      for (const auto& path : (*s)["artifacts"]) {
        RunResult v = run(bin, "verify " + path.get<std::string>());
        expect(v.exit_code == 0, "written design file verifies");
      }
  }

  std::cout << checks - failures << "/" << checks << " cli checks passed\n";
  return failures == 0 ? 0 : 1;
}
