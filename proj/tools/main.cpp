#include <iostream>

#include "CLI11.hpp"
#include "confalg/cli/run.hpp"

#ifndef CONFALG_CORPUS_DIR
#define CONFALG_CORPUS_DIR "corpus"
#endif

int main(int argc, char** argv) {
  using confalg::cli::Options;
  Options opts;
  opts.corpus_dir = CONFALG_CORPUS_DIR;
  std::string grid;

  CLI::App app{"Quadratic Leibniz conformal superalgebra toolkit"};
  app.require_subcommand(1);
  app.add_option("--format", opts.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--fail-fast", opts.fail_fast, "stop at the first failing instance");

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", opts.file, "algebra definition file")->required();
    sub->add_option("--at", opts.at, "instantiate parameters, e.g. a=1,b=0");
    sub->add_option("--format", opts.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_flag("--fail-fast", opts.fail_fast, "stop at the first failing instance");
    return sub;
  };

  auto* verify = with_file(app.add_subcommand("verify-conformal", "check the conformal identities of the bracket"));
  verify->add_option("--kind", opts.kind)->check(CLI::IsMember({"leibniz", "lie", "left-leibniz"}));

  auto* structure = with_file(app.add_subcommand("check-structure", "check finite dimensional structure equations"));
  structure->add_option("--which", opts.which)
      ->check(CLI::IsMember(
          {"t", "anl", "symmetrized", "star-zero", "circ-zero", "gd", "novikov", "assoc-novikov", "averaging"}));

  with_file(app.add_subcommand("classify-brackets", "all brackets compatible with an associative Novikov o"));

  auto* central = with_file(app.add_subcommand("central-ext", "one-dimensional central extensions"));
  central->add_option("--case", opts.case_name)->check(CLI::IsMember({"anl", "assoc-novikov", "gd", "novikov-lie"}));
  central->add_option("--degree", opts.degree, "also solve at degrees 0..N and compare with degree 3")
      ->check(CLI::Range(4u, 64u));

  auto* coeff = with_file(app.add_subcommand("coeff", "coefficient algebra"));
  coeff->add_option("--grid", grid, "mode range lo..hi");
  coeff->add_flag("--verify", opts.verify, "check the Leibniz identity on the grid");
  coeff->add_option("--phi", opts.phi, "lift cocycles")->check(CLI::IsMember({"from-central-ext"}));

  auto* examples = app.add_subcommand("examples", "replay the corpus of worked examples");
  examples->add_option("--corpus", opts.corpus_dir, "corpus directory");
  examples->add_flag("--allow-known-deviations", opts.allow_known_deviations,
                     "documented deviations print FAIL without failing the run");
  examples->add_option("--format", opts.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();
  if (!grid.empty()) {
    try {
      opts.grid = confalg::cli::parse_grid(grid);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return confalg::cli::execute(opts, std::cout, std::cerr);
}
