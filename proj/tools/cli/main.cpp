#include <iostream>

#include <CLI11.hpp>

#include "run.hpp"

int main(int argc, char** argv) {
  using bubblering::cli::RunConfig;
  RunConfig cfg;

  CLI::App app{"Axisymmetric bubble-ring cross-sections: geometry, stream solver, Weber bounds"};
  app.set_version_flag("--version", BUBBLERING_VERSION);
  app.require_subcommand(1);

  auto shape_opt = [&](CLI::App* sub, const char* what) {
    sub->add_option("--shape", cfg.shape, what)->required();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output file (default: standard output)");
    sub->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", cfg.seed, "Random seed");
  };

  auto* analyze = app.add_subcommand("analyze", "Geometric functionals of a cross-section");
  shape_opt(analyze, "Shape JSON file or inline JSON");
  analyze->add_option("--resolution", cfg.resolution, "Boundary nodes");
  common(analyze);

  auto* bound = app.add_subcommand("bound", "Weber lower bound of the normalized shape");
  shape_opt(bound, "Shape JSON file or inline JSON");
  bound->add_option("--we", cfg.we, "Weber number to test");
  bound->add_option("--resolution", cfg.resolution, "Boundary nodes");
  common(bound);

  auto* solve = app.add_subcommand("solve", "Stream function and dynamic residual");
  shape_opt(solve, "Shape JSON file or inline JSON");
  solve->add_option("--we", cfg.we, "Weber number");
  solve->add_option("--W", cfg.W, "Translation speed");
  solve->add_option("--lambda", cfg.lambda, "Bernoulli constant");
  solve->add_option("--resolution", cfg.resolution, "Boundary nodes");
  common(solve);

  auto* search = app.add_subcommand("search", "Minimize the dynamic residual over a family");
  shape_opt(search, "Family JSON file or inline JSON");
  search->add_option("--we", cfg.we, "Weber number");
  search->add_option("--budget", cfg.budget, "Objective evaluations");
  search->add_option("--log", cfg.log, "CSV evaluation log (default: <out>.log.csv)");
  search->add_option("--resolution", cfg.resolution, "Boundary nodes");
  common(search);

  auto* verify = app.add_subcommand("verify-lemmas", "Seeded property suites");
  verify->add_option("--count", cfg.count, "Shapes per suite");
  common(verify);

  auto* norbury = app.add_subcommand("norbury-table", "Thin-disk scaling probe");
  norbury->add_option("--eps", cfg.eps, "eps/R0 values in (0, 1)")->delimiter(',');
  norbury->add_option("--R0", cfg.r0, "Disk center radius");
  common(norbury);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : bubblering::cli::kExitValidation;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return bubblering::cli::run(cfg, std::cout, std::cerr);
}
