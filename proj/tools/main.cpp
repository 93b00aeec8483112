// Command-line front end: solve / verify / gen / csp / bench.
// Exit codes: 0 command completed (including NOT_COLORABLE and IMPROPER
// answers), 1 usage or parse error, 2 resource limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tricolor/bench.hpp"
#include "tricolor/csp32.hpp"
#include "tricolor/dimacs.hpp"
#include "tricolor/engine.hpp"
#include "tricolor/errors.hpp"
#include "tricolor/instances.hpp"
#include "tricolor/oracle.hpp"

using nlohmann::json;
using namespace tricolor;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << data;
}

// Accepts "309/1000" or a plain decimal like "0.309".
std::pair<int, int> parse_alpha(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      int num = std::stoi(text.substr(0, slash));
      int den = std::stoi(text.substr(slash + 1));
      return {num, den};
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return {std::stoi(text), 1};
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    int den = 1;
    for (std::size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
    return {std::stoi(digits), den};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse alpha '" + text + "'");
  }
}

MinDegreeMode parse_mode(const std::string& text) {
  if (text == "delta8") return MinDegreeMode::delta8;
  if (text == "delta7") return MinDegreeMode::delta7;
  if (text == "unchecked") return MinDegreeMode::unchecked;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

Family parse_family(const std::string& text) {
  if (text == "min-degree") return Family::min_degree_random;
  if (text == "planted-3col") return Family::planted_3colorable;
  if (text == "planted-obstruction") return Family::planted_obstruction;
  throw std::invalid_argument("unknown family '" + text + "'");
}

json stats_json(const SolveStats& s) {
  return json{{"engine_nodes", s.engine_nodes},
              {"csp_nodes", s.csp_nodes},
              {"case2_enums", s.case2_enums},
              {"reductions", s.reductions},
              {"case1_entries", s.case1_entries},
              {"case2_entries", s.case2_entries},
              {"case3_entries", s.case3_entries},
              {"elapsed_ms", s.elapsed_ms}};
}

void print_stats_text(std::ostream& out, const SolveStats& s, bool guarantee) {
  out << "stats engine_nodes " << s.engine_nodes << '\n'
      << "stats csp_nodes " << s.csp_nodes << '\n'
      << "stats case2_enums " << s.case2_enums << '\n'
      << "stats reductions " << s.reductions << '\n'
      << "stats case1_entries " << s.case1_entries << '\n'
      << "stats case2_entries " << s.case2_entries << '\n'
      << "stats case3_entries " << s.case3_entries << '\n'
      << "stats elapsed_ms " << s.elapsed_ms << '\n'
      << "stats guarantee_held " << (guarantee ? "true" : "false") << '\n';
}

// Certificate / coloring file: `v <id> <color>` per vertex, 1-based ids.
Coloring parse_coloring(const std::string& text, int n) {
  Coloring c(n, 0);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c" || tag == "COLORABLE") continue;
    if (tag != "v") throw ParseError(lineno, "expected 'v <id> <color>'");
    int id = 0, color = 0;
    std::string rest;
    if (!(ls >> id >> color) || (ls >> rest))
      throw ParseError(lineno, "expected 'v <id> <color>'");
    if (id < 1 || id > n) throw ParseError(lineno, "vertex id out of range");
    if (c[id - 1] != 0) throw ParseError(lineno, "duplicate vertex id");
    if (color < 1 || color > 3)
      throw ParseError(lineno, "color outside {1,2,3}");
    c[id - 1] = color;
  }
  return c;
}

struct SolveArgs {
  std::string input;
  std::string mode = "delta8";
  std::string alpha = "309/1000";
  std::string stats;
  bool certificate = false;
  std::optional<std::uint64_t> node_limit;
};

int cmd_solve(const SolveArgs& args) {
  Graph g = parse_dimacs(read_input(args.input));
  SolverConfig cfg;
  cfg.mode = parse_mode(args.mode);
  std::tie(cfg.alpha_num, cfg.alpha_den) = parse_alpha(args.alpha);
  cfg.want_certificate = args.certificate;
  cfg.node_limit = args.node_limit;

  SolveReport rep;
  try {
    rep = decide_3colorable(g, cfg);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: node limit exceeded\n";
    print_stats_text(std::cerr, e.partial_stats, false);
    return 2;
  }

  if (args.stats == "json") {
    json out{{"decision", to_string(rep.decision)},
             {"stats", stats_json(rep.stats)},
             {"guarantee_held", rep.guarantee_held}};
    if (rep.certificate) {
      json cert = json::array();
      for (int v = 0; v < g.original_order(); ++v)
        cert.push_back({v + 1, (*rep.certificate)[v]});
      out["certificate"] = cert;
    }
    std::cout << out.dump() << '\n';
    return 0;
  }

  std::cout << to_string(rep.decision) << '\n';
  if (rep.certificate)
    for (int v = 0; v < g.original_order(); ++v)
      std::cout << "v " << v + 1 << ' ' << (*rep.certificate)[v] << '\n';
  if (args.stats == "text")
    print_stats_text(std::cout, rep.stats, rep.guarantee_held);
  return 0;
}

int cmd_verify(const std::string& input, const std::string& coloring) {
  Graph g = parse_dimacs(read_input(input));
  Coloring c = parse_coloring(read_input(coloring), g.original_order());
  std::cout << (verify_coloring(g, c) ? "PROPER" : "IMPROPER") << '\n';
  return 0;
}

int cmd_csp(const std::string& input) {
  Csp32Instance inst = parse_csp32(read_input(input));
  CspResult res = solve_csp(inst);
  if (!res.sat) {
    std::cout << "UNSAT\n";
    return 0;
  }
  std::cout << "SAT\n";
  for (int i = 0; i < inst.var_count(); ++i)
    std::cout << "v " << i + 1 << ' ' << res.assignment[i] << '\n';
  return 0;
}

struct GenArgs {
  std::string model = "min-degree";
  int n = 0;
  int delta = 0;
  double extra_p = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  Graph g = [&] {
    switch (parse_family(args.model)) {
      case Family::min_degree_random:
        return gen_min_degree_random(args.n, args.delta, args.extra_p, args.seed);
      case Family::planted_3colorable:
        return gen_planted_3colorable(args.n, args.delta, args.seed);
      default:
        return gen_planted_obstruction(args.n, args.delta, args.seed);
    }
  }();
  write_output(args.out, write_dimacs(g));
  return 0;
}

struct BenchArgs {
  std::string family = "min-degree";
  std::string sizes;
  int seeds = 1;
  int delta = 8;
  double extra_p = 0.0;
  std::string mode = "delta8";
  std::uint64_t seed_base = 1;
  std::optional<std::uint64_t> node_limit;
  std::string out;
};

int cmd_bench(const BenchArgs& args) {
  BenchParams p;
  p.family = parse_family(args.family);
  p.delta = args.delta;
  p.extra_p = args.extra_p;
  p.seeds_per_size = args.seeds;
  p.seed_base = args.seed_base;
  p.cfg.mode = parse_mode(args.mode);
  p.cfg.node_limit = args.node_limit;

  std::istringstream ss(args.sizes);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) p.sizes.push_back(std::stoi(tok));
  if (p.sizes.empty()) throw std::invalid_argument("no sizes given");

  std::vector<BenchRow> rows = run_suite(p);
  std::string csv = to_csv(rows);
  bool csv_on_stdout = args.out.empty() || args.out == "-";
  std::ostream& info = csv_on_stdout ? std::cerr : std::cout;
  write_output(args.out, csv);
  try {
    GrowthEstimate est = estimate_growth_base(rows);
    char buf[128];
    std::snprintf(buf, sizeof buf, "estimate_base %.6f residual %.6f points %d\n",
                  est.base, est.residual, est.points);
    info << buf;
  } catch (const std::invalid_argument&) {
    std::cerr << "note: not enough spread to estimate a growth base\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 3-colorability decision engine"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Decide 3-colorability of a DIMACS graph");
  solve->add_option("--input", solve_args.input, "DIMACS file, or - for stdin")->required();
  solve->add_option("--mode", solve_args.mode, "delta8|delta7|unchecked");
  solve->add_option("--alpha", solve_args.alpha, "dense-pivot threshold, e.g. 309/1000");
  solve->add_flag("--certificate", solve_args.certificate, "emit v <id> <color> lines when colorable");
  solve->add_option("--stats", solve_args.stats, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--node-limit", solve_args.node_limit, "abort after this many search nodes");

  std::string verify_input, verify_coloring_path;
  CLI::App* verify = app.add_subcommand("verify", "Check a coloring file against a DIMACS graph");
  verify->add_option("--input", verify_input, "DIMACS file")->required();
  verify->add_option("--coloring", verify_coloring_path, "file of v <id> <color> lines")->required();

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a test-family graph");
  gen->add_option("--model", gen_args.model, "min-degree|planted-3col|planted-obstruction");
  gen->add_option("--n", gen_args.n, "vertex count")->required();
  gen->add_option("--delta", gen_args.delta, "minimum degree target");
  gen->add_option("--extra-p", gen_args.extra_p, "extra edge probability (min-degree model)");
  gen->add_option("--seed", gen_args.seed, "rng seed");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  std::string csp_input;
  CLI::App* csp = app.add_subcommand("csp", "Solve a csp32-format instance");
  csp->add_option("--input", csp_input, "csp32 file, or - for stdin")->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run a generated family and emit csv");
  bench->add_option("--family", bench_args.family, "min-degree|planted-3col|planted-obstruction");
  bench->add_option("--sizes", bench_args.sizes, "comma-separated vertex counts")->required();
  bench->add_option("--seeds", bench_args.seeds, "seeds per size");
  bench->add_option("--delta", bench_args.delta, "minimum degree target");
  bench->add_option("--extra-p", bench_args.extra_p, "extra edge probability");
  bench->add_option("--mode", bench_args.mode, "delta8|delta7|unchecked");
  bench->add_option("--seed-base", bench_args.seed_base, "first seed");
  bench->add_option("--node-limit", bench_args.node_limit, "per-run node cap");
  bench->add_option("--out", bench_args.out, "csv file (default stdout)");

  try {
    app.parse(argc, argv);
    if (*solve) return cmd_solve(solve_args);
    if (*verify) return cmd_verify(verify_input, verify_coloring_path);
    if (*gen) return cmd_gen(gen_args);
    if (*csp) return cmd_csp(csp_input);
    if (*bench) return cmd_bench(bench_args);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ResourceLimitError&) {
    std::cerr << "error: node limit exceeded\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
