#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curveres/cli.hpp"

int main(int argc, char** argv) {
  using namespace curveres;

  CLI::App app{"Resolve space curve branches, compare dual graphs and build isotopy flows"};
  app.require_subcommand(1);

  std::string first;
  std::string second;
  int max_steps = kDefaultMaxSteps;

  cli::ResolveOptions resolve_opts;
  std::string dot_path;
  std::string json_path;
  auto* resolve_cmd = app.add_subcommand("resolve", "Resolve a branch and report its dual graph");
  resolve_cmd->add_option("branch", first, "Branch file (JSON)")->required()->check(CLI::ExistingFile);
  resolve_cmd->add_option("--max-steps", max_steps, "Blow-up limit")->check(CLI::PositiveNumber);
  resolve_cmd->add_option("--dot", dot_path, "Write the dual graph as DOT");
  resolve_cmd->add_option("--json", json_path, "Also write the report to a file");

  auto* compare_cmd = app.add_subcommand("compare", "Compare the dual graphs of two branches");
  compare_cmd->add_option("first", first, "Branch file (JSON)")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("second", second, "Branch file (JSON)")->required()->check(CLI::ExistingFile);
  compare_cmd->add_option("--max-steps", max_steps, "Blow-up limit")->check(CLI::PositiveNumber);

  cli::IsotopyOptions iso_opts;
  std::string csv_path;
  auto* isotopy_cmd = app.add_subcommand("isotopy", "Build flows moving the first branch onto the second");
  isotopy_cmd->add_option("first", first, "Branch file (JSON)")->required()->check(CLI::ExistingFile);
  isotopy_cmd->add_option("second", second, "Branch file (JSON)")->required()->check(CLI::ExistingFile);
  std::string mode = "exact";
  isotopy_cmd->add_option("--mode", mode, "Lemma flavour: constant (tangency) or exact")
      ->check(CLI::IsMember({"constant", "exact"}));
  isotopy_cmd->add_option("--csv", csv_path, "Write blended-flow trajectories as CSV");
  isotopy_cmd->add_option("--samples", iso_opts.samples, "Sample points per step")->check(CLI::PositiveNumber);
  isotopy_cmd->add_option("--json", json_path, "Also write the schedule to a file");
  isotopy_cmd->add_option("--max-steps", max_steps, "Blow-up limit")->check(CLI::PositiveNumber);

  std::uint64_t seed = 0;
  CorpusOptions corpus;
  auto* random_cmd = app.add_subcommand("random", "Print a seeded random branch file");
  random_cmd->add_option("--seed", seed, "Generator seed");
  random_cmd->add_option("--dim", corpus.dim, "Ambient dimension")->check(CLI::Range(2, 16));
  random_cmd->add_option("--max-multiplicity", corpus.max_multiplicity)->check(CLI::PositiveNumber);
  random_cmd->add_option("--max-degree", corpus.max_degree)->check(CLI::PositiveNumber);
  random_cmd->add_option("--precision", corpus.precision)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kMalformed;
  }

  if (!dot_path.empty()) resolve_opts.dot = dot_path;
  if (!json_path.empty()) {
    resolve_opts.json = json_path;
    iso_opts.json = json_path;
  }
  if (!csv_path.empty()) iso_opts.csv = csv_path;
  iso_opts.mode = mode == "constant" ? FieldMode::LemmaConstant : FieldMode::LemmaExact;
  resolve_opts.max_steps = max_steps;
  iso_opts.max_steps = max_steps;

  if (*resolve_cmd) return cli::cmd_resolve(first, resolve_opts, std::cout, std::cerr);
  if (*compare_cmd) return cli::cmd_compare(first, second, max_steps, std::cout, std::cerr);
  if (*isotopy_cmd) return cli::cmd_isotopy(first, second, iso_opts, std::cout, std::cerr);
  return cli::cmd_random(seed, corpus, std::cout, std::cerr);
}
