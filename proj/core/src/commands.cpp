#include "tanglerate/commands.hpp"

#include <string>

#include <json.hpp>

#include "tanglerate/inner_solver.hpp"
#include "tanglerate/outer_search.hpp"
#include "tanglerate/tangle_sim.hpp"

namespace tanglerate {

namespace {

MechanismSolution solve_at(const RunConfig& rc, std::int64_t N,
                           bool exhaustive) {
  MechanismConfig cfg = rc.mechanism;
  cfg.num_agents = N;
  return solve_mechanism(
      cfg, exhaustive ? SearchMode::exhaustive : SearchMode::pruned);
}

void simulate_into(Table& table, const RunConfig& rc,
                   const std::vector<std::int64_t>& sweep,
                   const CommandOptions& opt) {
  for (const auto N : sweep) {
    const auto sol = solve_at(rc, N, opt.exhaustive);
    SimConfig sim;
    sim.config = rc.mechanism;
    sim.config.num_agents = N;
    sim.assignment = sol.assignment;
    sim.horizon = rc.sim.horizon;
    sim.arrival_model = rc.sim.arrival_model;
    for (int s = 0; s < opt.num_seeds; ++s) {
      sim.seed = rc.sim.seed + static_cast<std::uint64_t>(s);
      const auto metrics = run(sim);
      for (int i = 0; i < sim.config.num_types(); ++i) {
        const auto& row = metrics.approvals.per_type[i];
        Table::Cell mean = std::monostate{};
        if (row.mean_approval_time) mean = *row.mean_approval_time;
        table.add_row({N, static_cast<std::int64_t>(sim.seed),
                       static_cast<std::int64_t>(i + 1), row.created,
                       row.approved, row.unapproved, mean});
      }
    }
  }
}

const std::vector<std::string> kSimColumns = {
    "N",       "seed",       "type_index",        "created",
    "approved", "unapproved", "mean_approval_time"};

}  // namespace

Table cmd_solve(const RunConfig& rc, const CommandOptions& opt) {
  Table table({"N", "type_index", "x", "p", "d", "w", "per_type_rate",
               "objective_value"});
  for (const auto N : rc.solve_sweep()) {
    const auto sol = solve_at(rc, N, opt.exhaustive);
    for (int i = 0; i < rc.mechanism.num_types(); ++i) {
      const double x = rc.mechanism.types.power(i);
      const double p = rc.mechanism.types.fraction(i);
      const int d = sol.assignment.d.level(i);
      table.add_row({N, static_cast<std::int64_t>(i + 1), x, p,
                     static_cast<std::int64_t>(d), sol.assignment.w.value(i),
                     static_cast<double>(N) * p * transaction_rate(x, d),
                     sol.objective_value});
    }
  }
  return table;
}

Table cmd_simulate(const RunConfig& rc, const CommandOptions& opt) {
  Table table(kSimColumns);
  simulate_into(table, rc, rc.simulate_sweep(), opt);
  return table;
}

Table cmd_sweep(const RunConfig& rc, const CommandOptions& opt) {
  Table table(kSimColumns);
  simulate_into(table, rc, rc.solve_sweep(), opt);
  return table;
}

Table cmd_compare(const RunConfig& rc, const CommandOptions& opt) {
  Table table({"N", "type_index", "x", "mech_d", "mech_w", "mech_dw_dd",
               "base_d", "base_w"});
  for (const auto N : rc.solve_sweep()) {
    const auto sol = solve_at(rc, N, opt.exhaustive);
    MechanismConfig cfg = rc.mechanism;
    cfg.num_agents = N;
    const auto base =
        fixed_linear_scheme(cfg, rc.baseline.slope, rc.baseline.intercept);
    for (int i = 0; i < cfg.num_types(); ++i) {
      Table::Cell slope = std::monostate{};
      if (i > 0) {
        const int dd = sol.assignment.d.level(i) - sol.assignment.d.level(i - 1);
        if (dd != 0)
          slope = (sol.assignment.w.value(i) - sol.assignment.w.value(i - 1)) /
                  static_cast<double>(dd);
      }
      table.add_row({N, static_cast<std::int64_t>(i + 1),
                     cfg.types.power(i),
                     static_cast<std::int64_t>(sol.assignment.d.level(i)),
                     sol.assignment.w.value(i), slope,
                     static_cast<std::int64_t>(base.d.level(i)),
                     base.w.value(i)});
    }
  }
  return table;
}

std::string render_output(const Table& table, const RunConfig& rc,
                          OutputFormat format) {
  if (format == OutputFormat::csv) return table.to_csv();
  nlohmann::json doc;
  doc["config"] = nlohmann::json::parse(effective_config_json(rc));
  doc["columns"] = table.columns();
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows()) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : row) {
      if (std::holds_alternative<std::monostate>(cell))
        cells.push_back(nullptr);
      else if (const auto* i = std::get_if<std::int64_t>(&cell))
        cells.push_back(*i);
      else if (const auto* d = std::get_if<double>(&cell))
        cells.push_back(std::stod(format_real(*d)));
      else
        cells.push_back(std::get<std::string>(cell));
    }
    doc["rows"].push_back(std::move(cells));
  }
  return doc.dump(2) + "\n";
}

}  // namespace tanglerate
