#include <cmath>
#include <random>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "tanglerate/commands.hpp"
#include "tanglerate/mechanism.hpp"
#include "tanglerate/run_config.hpp"
#include "tanglerate/table.hpp"

using namespace tanglerate;

namespace {

const std::string kTable1Path =
    std::string(TANGLERATE_CONFIG_DIR) + "/table1.json";

std::string minimal_config_text() {
  return R"({
    "types": [{"x": 1, "p": 0.5}, {"x": 2, "p": 0.5}],
    "max_difficulty": 3,
    "alpha": 0.1,
    "beta": 80,
    "u0": 10
  })";
}

}  // namespace

TEST_CASE("real formatting uses six significant digits") {
  CHECK(format_real(1.0291923) == "1.02919");
  CHECK(format_real(171.777072546) == "171.777");
  CHECK(format_real(2.5) == "2.5");
  CHECK(format_real(123.0) == "123");
  CHECK(format_real(0.0067379) == "0.0067379");
  CHECK(format_real(1e-7) == "1e-07");
  CHECK(format_real(5.6753725) == "5.67537");

  SUBCASE("rendered values survive a parse and re-render") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-8, 8);
    for (int trial = 0; trial < 1000; ++trial) {
      const double v = mantissa(rng) * std::pow(10.0, exponent(rng));
      const auto s = format_real(v);
      CHECK(format_real(std::stod(s)) == s);
    }
  }
}

TEST_CASE("table assembly and CSV rendering") {
  Table t({"a", "b", "c"});
  t.add_row({std::int64_t{1}, 2.5, std::string("x")});
  t.add_row({std::int64_t{-3}, std::monostate{}, std::string("y,z")});
  CHECK(t.to_csv() == "a,b,c\n1,2.5,x\n-3,,\"y,z\"\n");
  CHECK_THROWS_AS(t.add_row({std::int64_t{1}}), std::invalid_argument);

  SUBCASE("quotes are doubled inside quoted fields") {
    Table q({"v"});
    q.add_row({std::string("say \"hi\"")});
    CHECK(q.to_csv() == "v\n\"say \"\"hi\"\"\"\n");
  }
}

TEST_CASE("config parsing") {
  const auto rc = parse_config(minimal_config_text(), "test");
  CHECK(rc.mechanism.num_types() == 2);
  CHECK(rc.mechanism.types.power(1) == 2.0);
  CHECK(rc.mechanism.max_difficulty == 3);
  CHECK(rc.mechanism.beta == 80.0);

  SUBCASE("defaults fill in") {
    CHECK(rc.mechanism.num_agents == 100);
    CHECK(rc.sim.horizon == 2000);
    CHECK(rc.sim.seed == 42);
    CHECK(rc.sim.arrival_model == ArrivalModel::poisson);
    CHECK(rc.baseline.slope == 1.0);
    CHECK(rc.baseline.intercept == 0.0);
    CHECK_FALSE(rc.sweep.has_value());
    CHECK(rc.solve_sweep() ==
          std::vector<std::int64_t>{100, 1000, 10000, 100000});
    CHECK(rc.simulate_sweep() == std::vector<std::int64_t>{100});
  }
  SUBCASE("explicit sweep steers both sweep kinds") {
    auto with = parse_config(R"({
      "types": [{"x": 1, "p": 1.0}],
      "max_difficulty": 2, "alpha": 0, "beta": 80, "u0": 0,
      "sweep_N": [50, 500]
    })", "test");
    CHECK(with.solve_sweep() == std::vector<std::int64_t>{50, 500});
    CHECK(with.simulate_sweep() == std::vector<std::int64_t>{50, 500});
  }
  SUBCASE("unknown keys are rejected by name") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"types": [{"x": 1, "p": 1}], "max_difficulty": 2,
                         "alpha": 0, "beta": 1, "u0": 0, "bogus": 3})", "t"),
        doctest::Contains("bogus"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"types": [{"x": 1, "p": 1, "q": 2}],
                         "max_difficulty": 2, "alpha": 0, "beta": 1,
                         "u0": 0})", "t"),
        doctest::Contains("q"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"types": [{"x": 1, "p": 1}], "max_difficulty": 2,
                         "alpha": 0, "beta": 1, "u0": 0,
                         "sim": {"horizont": 5}})", "t"),
        doctest::Contains("horizont"), ConfigError);
  }
  SUBCASE("missing and mistyped fields") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"types": [{"x": 1, "p": 1}], "max_difficulty": 2,
                         "alpha": 0, "u0": 0})", "t"),
        doctest::Contains("beta"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"types": [{"x": 1, "p": 1}], "max_difficulty": 2.5,
                         "alpha": 0, "beta": 1, "u0": 0})", "t"),
        doctest::Contains("max_difficulty"), ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"types": [{"x": 1, "p": 1}], "max_difficulty": 2,
                         "alpha": 0, "beta": 1, "u0": 0,
                         "sim": {"arrival_model": "gamma"}})", "t"),
        doctest::Contains("arrival_model"), ConfigError);
  }
  SUBCASE("empty and invalid documents") {
    CHECK_THROWS_WITH_AS(parse_config("", "empty"),
                         doctest::Contains("not valid JSON"), ConfigError);
    CHECK_THROWS_WITH_AS(parse_config("[1,2]", "arr"),
                         doctest::Contains("object"), ConfigError);
  }
  SUBCASE("semantic validation surfaces as config errors") {
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"types": [{"x": 1, "p": 0.5}, {"x": 2, "p": 0.4}],
                         "max_difficulty": 2, "alpha": 0, "beta": 1,
                         "u0": 0})", "t"),
        doctest::Contains("sum"), ConfigError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(load_config("/nonexistent/nope.json"),
                         doctest::Contains("nope.json"), ConfigError);
  }
}

TEST_CASE("shipped reference config") {
  const auto rc = load_config(kTable1Path);
  CHECK(rc.mechanism.num_types() == 3);
  CHECK(rc.mechanism.types.power(0) == 1.0);
  CHECK(rc.mechanism.types.power(2) == 10.0);
  CHECK(rc.mechanism.max_difficulty == 12);
  CHECK(rc.mechanism.alpha == 0.1);
  CHECK(rc.mechanism.beta == 80.0);
  CHECK(rc.mechanism.u0 == 10.0);
  CHECK(rc.mechanism.num_agents == 100);
  CHECK(rc.sim.horizon == 2000);

  SUBCASE("effective config echo round-trips") {
    const auto echo = nlohmann::json::parse(effective_config_json(rc));
    CHECK(echo["max_difficulty"] == 12);
    CHECK(echo["N"] == 100);
    CHECK(echo["sim"]["arrival_model"] == "poisson");
    CHECK(echo["baseline"]["slope"] == 1.0);
    CHECK(echo["types"].size() == 3);
  }
}

TEST_CASE("solve command emits one row per population and type") {
  const auto rc = load_config(kTable1Path);
  const auto table = cmd_solve(rc);
  CHECK(table.columns() ==
        std::vector<std::string>{"N", "type_index", "x", "p", "d", "w",
                                 "per_type_rate", "objective_value"});
  REQUIRE(table.rows().size() == 12);

  const auto& first = table.rows()[0];
  CHECK(std::get<std::int64_t>(first[0]) == 100);
  CHECK(std::get<std::int64_t>(first[1]) == 1);
  CHECK(std::get<double>(first[2]) == 1.0);
  CHECK(std::get<std::int64_t>(first[4]) == 4);
  CHECK(format_cell(first[6]) == "0.610521");  // 100/3 * e^-4
  CHECK(format_cell(first[7]) == "1.27451");

  const auto& third = table.rows()[2];
  CHECK(std::get<std::int64_t>(third[4]) == 8);
  CHECK(format_cell(third[5]) == "5.67537");

  SUBCASE("difficulties and weights are monotone within each N") {
    for (std::size_t r = 0; r < table.rows().size(); ++r) {
      if (r % 3 == 0) continue;
      CHECK(std::get<std::int64_t>(table.rows()[r][4]) >=
            std::get<std::int64_t>(table.rows()[r - 1][4]));
      CHECK(std::get<double>(table.rows()[r][5]) >=
            std::get<double>(table.rows()[r - 1][5]) - 1e-9);
    }
  }
  SUBCASE("byte determinism") {
    const auto again = cmd_solve(rc);
    CHECK(render_output(table, rc, OutputFormat::csv) ==
          render_output(again, rc, OutputFormat::csv));
  }
  SUBCASE("exhaustive flag reproduces the pruned table") {
    auto small = rc;
    small.sweep = std::vector<std::int64_t>{100};
    CommandOptions opt;
    opt.exhaustive = true;
    const auto pruned = cmd_solve(small);
    const auto full = cmd_solve(small, opt);
    CHECK(pruned.rows().size() == full.rows().size());
    for (std::size_t r = 0; r < pruned.rows().size(); ++r)
      for (std::size_t c = 0; c < pruned.columns().size(); ++c)
        CHECK(format_cell(pruned.rows()[r][c]) ==
              format_cell(full.rows()[r][c]));
  }
}

TEST_CASE("simulate command emits per-seed approval rows") {
  auto rc = load_config(kTable1Path);
  rc.sim.horizon = 100;
  CommandOptions opt;
  opt.num_seeds = 2;
  const auto table = cmd_simulate(rc, opt);
  CHECK(table.columns() ==
        std::vector<std::string>{"N", "seed", "type_index", "created",
                                 "approved", "unapproved",
                                 "mean_approval_time"});
  REQUIRE(table.rows().size() == 6);  // one N, two seeds, three types
  CHECK(std::get<std::int64_t>(table.rows()[0][0]) == 100);
  CHECK(std::get<std::int64_t>(table.rows()[0][1]) == 42);
  CHECK(std::get<std::int64_t>(table.rows()[3][1]) == 43);
  for (const auto& row : table.rows()) {
    CHECK(std::get<std::int64_t>(row[3]) ==
          std::get<std::int64_t>(row[4]) + std::get<std::int64_t>(row[5]));
  }

  SUBCASE("sweep command covers the default population sweep") {
    auto quick = rc;
    quick.sim.horizon = 20;
    quick.sweep = std::vector<std::int64_t>{100, 1000};
    opt.num_seeds = 1;
    const auto swept = cmd_sweep(quick, opt);
    REQUIRE(swept.rows().size() == 6);
    CHECK(std::get<std::int64_t>(swept.rows()[0][0]) == 100);
    CHECK(std::get<std::int64_t>(swept.rows()[3][0]) == 1000);
  }
  SUBCASE("deterministic arrivals give reproducible tables") {
    rc.sim.arrival_model = ArrivalModel::deterministic;
    const auto a = cmd_simulate(rc, opt);
    const auto b = cmd_simulate(rc, opt);
    CHECK(render_output(a, rc, OutputFormat::csv) ==
          render_output(b, rc, OutputFormat::csv));
  }
}

TEST_CASE("compare command sets mechanism and baseline side by side") {
  auto rc = load_config(kTable1Path);
  rc.sweep = std::vector<std::int64_t>{100};
  const auto table = cmd_compare(rc);
  CHECK(table.columns() ==
        std::vector<std::string>{"N", "type_index", "x", "mech_d", "mech_w",
                                 "mech_dw_dd", "base_d", "base_w"});
  REQUIRE(table.rows().size() == 3);

  CHECK(std::get<std::int64_t>(table.rows()[0][3]) == 4);
  CHECK(std::get<std::int64_t>(table.rows()[1][3]) == 6);
  CHECK(std::get<std::int64_t>(table.rows()[2][3]) == 8);
  CHECK(std::get<std::int64_t>(table.rows()[0][6]) == 4);
  CHECK(std::get<std::int64_t>(table.rows()[1][6]) == 5);
  CHECK(std::get<std::int64_t>(table.rows()[2][6]) == 7);
  CHECK(std::get<double>(table.rows()[2][7]) == 7.0);

  CHECK(std::holds_alternative<std::monostate>(table.rows()[0][5]));
  CHECK(format_cell(table.rows()[1][5]) == "0.726731");  // (2.4535-1)/2
  CHECK(format_cell(table.rows()[2][5]) == "1.61096");   // (5.6754-2.4535)/2
}

TEST_CASE("JSON output carries the CSV content plus the config echo") {
  auto rc = load_config(kTable1Path);
  rc.sweep = std::vector<std::int64_t>{100};
  const auto table = cmd_solve(rc);
  const auto text = render_output(table, rc, OutputFormat::json);
  const auto doc = nlohmann::json::parse(text);

  CHECK(doc["config"]["beta"] == 80.0);
  CHECK(doc["config"]["sweep_N"] == std::vector<std::int64_t>{100});
  REQUIRE(doc["columns"].size() == table.columns().size());
  REQUIRE(doc["rows"].size() == table.rows().size());

  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    for (std::size_t c = 0; c < table.columns().size(); ++c) {
      const auto& cell = table.rows()[r][c];
      const auto& jcell = doc["rows"][r][c];
      if (std::holds_alternative<std::monostate>(cell)) {
        CHECK(jcell.is_null());
      } else if (std::holds_alternative<std::int64_t>(cell)) {
        CHECK(jcell.get<std::int64_t>() == std::get<std::int64_t>(cell));
      } else if (std::holds_alternative<double>(cell)) {
        // Re-rendering the JSON value reproduces the CSV cell exactly.
        CHECK(format_real(jcell.get<double>()) == format_cell(cell));
      }
    }
  }
}
