#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ybcube/cli.hpp"

namespace {

void add_input_options(CLI::App* cmd, ybcube::RunConfig& config) {
  cmd->add_option("--fixture", config.fixture_name, "built-in presentation: gamma1 or gamma2");
  cmd->add_option("--in", config.input_path, "presentation JSON file");
  cmd->add_option("--q", config.q, "prime power q; builds Gamma_{M,delta} over F_{q^2}");
  cmd->add_option("--p", config.p, "field characteristic (alternative to --q)");
  cmd->add_option("--e", config.e, "extension degree, q = p^e");
  cmd->add_option("--modulus", config.modulus,
                  "modulus coefficients c0,c1,... (default: smallest irreducible)")
      ->delimiter(',');
  cmd->add_option("--cosets", config.cosets, "coset residues mod q-1, e.g. 1,2,3")
      ->delimiter(',');
  cmd->add_option("--delta-exp", config.delta_exponent,
                  "power of the default primitive root selecting delta");
  cmd->add_flag("--allow-even-q", config.allow_even_q,
                "permit even q (the involution then has fixed points)");
  cmd->add_option("--extend", config.extend_k,
                  "append a commuting factor with k generator pairs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-vertex cube complexes covered by products of trees and their "
               "Yang-Baxter solutions"};
  app.require_subcommand(1);
  app.fallthrough();
  ybcube::RunConfig config;
  app.add_flag("-v,--verbose", config.verbosity, "chatty progress output on stderr");

  CLI::App* build = app.add_subcommand("build", "construct a presentation and its complex");
  add_input_options(build, config);
  build->add_option("--out", config.out_path, "write JSON here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run the verifier suite");
  add_input_options(verify, config);
  verify->add_flag("--vh", config.run_vh, "link completeness and involution checks");
  verify->add_flag("--cube", config.run_cube, "3-cube closing condition");
  verify->add_flag("--ybe", config.run_ybe, "braid identity for the derived map");
  verify->add_flag("--qybe", config.run_qybe, "quantum YBE for the flipped map");
  verify->add_flag("--all", config.run_all, "all checks (default when none selected)");
  verify->add_option("--out", config.out_path, "write the JSON report here");

  CLI::App* invariants = app.add_subcommand("invariants", "first homology and solution data");
  add_input_options(invariants, config);
  invariants->add_flag("--json", config.json_output, "machine-readable output");
  invariants->add_option("--out", config.out_path, "write JSON here (with --json)");

  CLI::App* exp = app.add_subcommand("export", "matrices, solutions, link graphs");
  add_input_options(exp, config);
  exp->add_option("--matrix", config.matrix_format, "permutation matrix format: mm or csv");
  exp->add_option("--solution", config.solution_out, "write the solution JSON to this file");
  exp->add_option("--link", config.link_colors, "export the link of a color pair, e.g. 0,1");
  exp->add_option("--out", config.out_path, "output file (default stdout)");

  CLI::App* census = app.add_subcommand("census", "count one-vertex VH square complexes");
  census->add_option("--m", config.census_m, "half valency of A (|A| = 2m)")->required();
  census->add_option("--l", config.census_l, "half valency of B (|B| = 2l)")->required();
  census->add_option("--k", config.census_k, "report the 3-cube lower bound for this k");
  census->add_option("--method", config.census_method, "enum, formula, or both (default)");
  census->add_option("--stream", config.stream_path, "write enumerated complexes as JSONL");
  census->add_flag("--distinct", config.census_distinct,
                   "also count complexes up to relabeling (canonical-form dedup)");
  census->add_flag("--force-large", config.force_large, "lift the ml <= 10 guard");
  census->add_flag("--json", config.json_output, "machine-readable output");
  census->add_option("--out", config.out_path, "write JSON here (with --json)");

  CLI::App* iso = app.add_subcommand("iso", "solution isomorphism test");
  iso->add_option("--a", config.iso_a, "fixture name or JSON file")->required();
  iso->add_option("--b", config.iso_b, "fixture name or JSON file")->required();
  iso->add_option("--budget", config.iso_budget, "backtracking node budget");
  iso->add_flag("--json", config.json_output, "machine-readable output");
  iso->add_option("--out", config.out_path, "write JSON here (with --json)");

  CLI11_PARSE(app, argc, argv);
  config.subcommand = app.get_subcommands().front()->get_name();
  return ybcube::run_command(config, std::cout, std::cerr);
}
