// treecube: metric dimension bounds and resolving sets for cubes of trees.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "treecube/cli.hpp"

namespace {

void add_tree_input(CLI::App* cmd, treecube::cli::TreeInput& in) {
  cmd->add_option("-i,--input", in.path, "edge-list file (one 'u v' pair per line)");
  cmd->add_option("-f,--family", in.family,
                  "family spec, e.g. cat:spine=4;pendants=2,0,1,0 or spider:1,1,3");
}

int with_output(const std::string& out_path, const std::function<int(std::ostream&)>& fn) {
  if (out_path.empty()) return fn(std::cout);
  std::ofstream f(out_path);
  if (!f) throw treecube::cli::CliUsageError("cannot open output file '" + out_path + "'");
  return fn(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"metric dimension bounds and resolving sets for cubes of trees"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--out", out_path, "write output to a file instead of stdout");

  treecube::cli::AnalyzeOptions an;
  auto* analyze = app.add_subcommand(
      "analyze", "classify a tree, compute bounds, and build a resolving set for its cube");
  add_tree_input(analyze, an.in);
  analyze->add_option("--format", an.format, "text, json, or dot")->capture_default_str();
  analyze->add_flag("--exact", an.exact, "also run the brute-force oracle when small enough");
  analyze->add_option("--oracle-cap", an.oracle_cap, "largest n the oracle will attempt")
      ->capture_default_str();
  analyze->add_option("--budget", an.budget, "oracle subset budget")->capture_default_str();

  treecube::cli::VerifyOptions ve;
  auto* verify = app.add_subcommand("verify", "test a vertex set against the distance conditions");
  add_tree_input(verify, ve.in);
  verify->add_option("-s,--set", ve.set_csv, "comma-separated vertex labels")->required();
  verify->add_option("--format", ve.format, "text or json")->capture_default_str();

  treecube::cli::GenerateOptions ge;
  auto* generate = app.add_subcommand("generate", "emit a named tree family as an edge list");
  generate->add_option("-f,--family", ge.family, "family spec")->required();
  generate->add_option("--format", ge.format, "text or dot")->capture_default_str();

  treecube::cli::BruteCliOptions br;
  auto* brute = app.add_subcommand("brute", "exact metric dimension of a tree power by search");
  add_tree_input(brute, br.in);
  brute->add_option("-p,--power", br.power, "graph power to search")->capture_default_str();
  brute->add_option("--budget", br.budget, "subset budget before giving up")
      ->capture_default_str();
  brute->add_option("-t,--threads", br.threads, "worker threads")->capture_default_str();
  brute->add_option("--format", br.format, "text or json")->capture_default_str();

  treecube::cli::SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "cross-validate formulas against search on many trees");
  sweep->add_option("--exhaustive", sw.exhaustive_n, "check every labeled tree on N vertices");
  sweep->add_option("--random", sw.random_count, "check COUNT random trees");
  sweep->add_option("--n", sw.random_n, "tree size for random mode");
  sweep->add_option("--seed", sw.seed, "base seed")->capture_default_str();
  sweep->add_option("--sets-per-tree", sw.sets_per_tree, "candidate sets sampled per tree")
      ->capture_default_str();
  sweep->add_option("--oracle-cap", sw.oracle_cap, "largest n cross-checked by brute force")
      ->capture_default_str();
  sweep->add_option("-t,--threads", sw.threads, "worker threads")->capture_default_str();
  sweep->add_option("--format", sw.format, "text or json")->capture_default_str();

  for (auto* sub : {analyze, verify, generate, brute, sweep}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : treecube::cli::kExitInput;
  }

  return treecube::cli::guarded(
      [&]() -> int {
        return with_output(out_path, [&](std::ostream& out) {
          if (*analyze) return treecube::cli::run_analyze(an, out);
          if (*verify) return treecube::cli::run_verify(ve, out);
          if (*generate) return treecube::cli::run_generate(ge, out);
          if (*brute) return treecube::cli::run_brute(br, out);
          return treecube::cli::run_sweep(sw, out);
        });
      },
      std::cerr);
}
