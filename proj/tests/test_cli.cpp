#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "tricolor/dimacs.hpp"
#include "tricolor/graph.hpp"
#include "tricolor/oracle.hpp"

using namespace tricolor;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the binary, captures stdout; stderr goes to a scratch file so it does
// not bleed into the capture.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TRICOLOR_CLI_PATH) + " " + args + " 2>/tmp/tricolor_cli_err";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& data) {
  std::string path = "/tmp/" + name;
  std::ofstream f(path, std::ios::binary);
  f << data;
  return path;
}

const std::string k4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";
const std::string c5 = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";

}  // namespace

TEST_CASE("solve answers and exits zero either way") {
  std::string k4_path = write_temp("cli_k4.col", k4);
  RunResult r = run_cli("solve --input " + k4_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "NOT_COLORABLE\n");

  std::string c5_path = write_temp("cli_c5.col", c5);
  r = run_cli("solve --input " + c5_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "COLORABLE\n");
}

TEST_CASE("certificates round-trip through verify as PROPER") {
  std::string c5_path = write_temp("cli_c5.col", c5);
  RunResult r = run_cli("solve --input " + c5_path + " --certificate");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.substr(0, 10) == "COLORABLE\n");
  std::string cert_path = write_temp("cli_c5.cert", r.out);
  RunResult v = run_cli("verify --input " + c5_path + " --coloring " + cert_path);
  CHECK(v.exit_code == 0);
  CHECK(v.out == "PROPER\n");
}

TEST_CASE("verify flags an improper coloring and still exits zero") {
  std::string c5_path = write_temp("cli_c5.col", c5);
  std::string bad_path =
      write_temp("cli_bad.cert", "v 1 1\nv 2 1\nv 3 2\nv 4 1\nv 5 2\n");
  RunResult v = run_cli("verify --input " + c5_path + " --coloring " + bad_path);
  CHECK(v.exit_code == 0);
  CHECK(v.out == "IMPROPER\n");
}

TEST_CASE("gen is reproducible byte for byte") {
  RunResult a = run_cli("gen --model min-degree --n 30 --delta 8 --seed 7");
  RunResult b = run_cli("gen --model min-degree --n 30 --delta 8 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  Graph g = parse_dimacs(a.out);
  CHECK(g.order() == 30);
  for (int v : g.live_vertices()) CHECK(g.degree(v) >= 8);

  RunResult c = run_cli("gen --model planted-3col --n 20 --delta 5 --seed 9");
  CHECK(c.exit_code == 0);
  CHECK(brute_3color(parse_dimacs(c.out)).has_value());
}

TEST_CASE("csp solves both ways") {
  std::string sat_path =
      write_temp("cli_sat.csp", "csp32 2\nf 1 1 2 1\nf 1 2 2 2\n");
  RunResult r = run_cli("csp --input " + sat_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 4) == "SAT\n");

  std::string unsat_path = write_temp(
      "cli_unsat.csp",
      "csp32 2\nd 1 1 2\nd 2 1 2\nf 1 1 2 1\nf 1 1 2 2\nf 1 2 2 1\nf 1 2 2 2\n");
  r = run_cli("csp --input " + unsat_path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "UNSAT\n");
}

TEST_CASE("usage and parse problems exit with one") {
  CHECK(run_cli("solve").exit_code == 1);               // missing --input
  CHECK(run_cli("frobnicate").exit_code == 1);          // unknown subcommand
  CHECK(run_cli("solve --input /tmp/absent_file_xyz.col").exit_code == 1);
  std::string bad = write_temp("cli_bad.col", "p edge 2 1\ne 1 1\n");
  CHECK(run_cli("solve --input " + bad).exit_code == 1);
  CHECK(run_cli("gen --model nope --n 5").exit_code == 1);
}

TEST_CASE("node limit exits with two") {
  // Petersen graph: triangle-free, needs real search
  std::string pet = "p edge 10 15\n";
  for (int i = 0; i < 5; ++i) {
    pet += "e " + std::to_string(i + 1) + " " + std::to_string((i + 1) % 5 + 1) + "\n";
    pet += "e " + std::to_string(i + 1) + " " + std::to_string(i + 6) + "\n";
    pet += "e " + std::to_string(i + 6) + " " + std::to_string((i + 2) % 5 + 6) + "\n";
  }
  std::string pet_path = write_temp("cli_petersen.col", pet);
  RunResult limited = run_cli("solve --input " + pet_path + " --node-limit 1 --mode unchecked");
  CHECK(limited.exit_code == 2);
  RunResult free_run = run_cli("solve --input " + pet_path);
  CHECK(free_run.exit_code == 0);
  CHECK(free_run.out == "COLORABLE\n");
}

TEST_CASE("bench emits the pinned csv header and a stable body") {
  RunResult a = run_cli(
      "bench --family planted-3col --delta 5 --sizes 14,16 --seeds 2 --out -");
  CHECK(a.exit_code == 0);
  CHECK(a.out.substr(0, a.out.find('\n')) ==
        "n,Delta,delta_min,decision,engine_nodes,csp_nodes,case2_enums,"
        "elapsed_ms,bound_exponent,bound_value,guarantee_held");
  CHECK(a.out.find("COLORABLE") != std::string::npos);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 5);  // header + 4 rows
}

TEST_CASE("solve json stats name every counter") {
  std::string c5_path = write_temp("cli_c5.col", c5);
  RunResult r = run_cli("solve --input " + c5_path + " --stats json --certificate");
  CHECK(r.exit_code == 0);
  for (const char* key :
       {"\"decision\"", "\"engine_nodes\"", "\"csp_nodes\"", "\"case2_enums\"",
        "\"reductions\"", "\"case1_entries\"", "\"case2_entries\"",
        "\"case3_entries\"", "\"elapsed_ms\"", "\"guarantee_held\"",
        "\"certificate\""})
    CHECK(r.out.find(key) != std::string::npos);
}

TEST_CASE("generated planted instance certifies through the pipeline") {
  RunResult gen = run_cli("gen --model planted-3col --n 36 --delta 8 --seed 11");
  REQUIRE(gen.exit_code == 0);
  std::string graph_path = write_temp("cli_planted.col", gen.out);
  RunResult solve = run_cli("solve --input " + graph_path + " --certificate");
  REQUIRE(solve.exit_code == 0);
  CHECK(solve.out.substr(0, 10) == "COLORABLE\n");
  std::string cert_path = write_temp("cli_planted.cert", solve.out);
  RunResult v = run_cli("verify --input " + graph_path + " --coloring " + cert_path);
  CHECK(v.out == "PROPER\n");
}
