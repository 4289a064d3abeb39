#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tanglerate/commands.hpp"
#include "tanglerate/outer_search.hpp"

namespace {

struct Cli {
  std::string config_path;
  std::string format = "csv";
  std::string out_path;
  bool exhaustive = false;
  int num_seeds = 20;
};

void add_common(CLI::App* cmd, Cli& cli, bool with_seeds) {
  cmd->add_option("--config", cli.config_path, "Path to the JSON config")
      ->required();
  cmd->add_flag("--exhaustive", cli.exhaustive,
                "Search every difficulty vector instead of only "
                "nondecreasing ones");
  cmd->add_option("--format", cli.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", cli.out_path,
                  "Write output to this file instead of stdout");
  if (with_seeds)
    cmd->add_option("--seeds", cli.num_seeds,
                    "Number of simulation runs per population size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Difficulty/weight mechanism solver and DAG ledger simulator"};
  app.require_subcommand(1);
  Cli cli;

  auto* solve = app.add_subcommand(
      "solve", "Optimal difficulty and weight assignment per population size");
  add_common(solve, cli, false);
  auto* simulate = app.add_subcommand(
      "simulate", "Simulate the ledger under the optimal assignment");
  add_common(simulate, cli, true);
  auto* sweep = app.add_subcommand(
      "sweep", "Solve and simulate across the full population sweep");
  add_common(sweep, cli, true);
  auto* compare = app.add_subcommand(
      "compare", "Mechanism assignment vs the fixed linear scheme");
  add_common(compare, cli, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto rc = tanglerate::load_config(cli.config_path);
    tanglerate::CommandOptions opt;
    opt.exhaustive = cli.exhaustive;
    opt.num_seeds = cli.num_seeds;
    tanglerate::Table table{{}};
    if (solve->parsed())
      table = tanglerate::cmd_solve(rc, opt);
    else if (simulate->parsed())
      table = tanglerate::cmd_simulate(rc, opt);
    else if (sweep->parsed())
      table = tanglerate::cmd_sweep(rc, opt);
    else
      table = tanglerate::cmd_compare(rc, opt);
    const auto format = cli.format == "json" ? tanglerate::OutputFormat::json
                                             : tanglerate::OutputFormat::csv;
    return emit(tanglerate::render_output(table, rc, format), cli.out_path);
  } catch (const tanglerate::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const tanglerate::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const tanglerate::NoFeasibleMechanismError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
