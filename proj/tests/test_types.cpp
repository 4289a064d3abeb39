#include <doctest.h>

#include "tanglerate/types.hpp"

using namespace tanglerate;

namespace {

MechanismConfig table1(std::int64_t N = 100) {
  MechanismConfig cfg;
  cfg.types.entries = {{1.0, 1.0 / 3}, {3.0, 1.0 / 3}, {10.0, 1.0 / 3}};
  cfg.max_difficulty = 12;
  cfg.alpha = 0.1;
  cfg.beta = 80.0;
  cfg.u0 = 10.0;
  cfg.num_agents = N;
  return cfg;
}

}  // namespace

TEST_CASE("agent type set validation") {
  AgentTypeSet types;
  CHECK_THROWS_AS(types.validate(), ValidationError);

  types.entries = {{1.0, 0.5}, {3.0, 0.5}};
  CHECK_NOTHROW(types.validate());

  SUBCASE("powers must increase") {
    types.entries = {{3.0, 0.5}, {1.0, 0.5}};
    CHECK_THROWS_WITH_AS(types.validate(),
                         doctest::Contains("strictly increasing"),
                         ValidationError);
    types.entries = {{1.0, 0.5}, {1.0, 0.5}};
    CHECK_THROWS_AS(types.validate(), ValidationError);
  }
  SUBCASE("powers must be positive") {
    types.entries = {{-1.0, 0.5}, {3.0, 0.5}};
    CHECK_THROWS_AS(types.validate(), ValidationError);
    types.entries = {{0.0, 1.0}};
    CHECK_THROWS_AS(types.validate(), ValidationError);
  }
  SUBCASE("fractions in range and summing to one") {
    types.entries = {{1.0, 0.5}, {3.0, 0.4}};
    CHECK_THROWS_WITH_AS(types.validate(), doctest::Contains("sum"),
                         ValidationError);
    types.entries = {{1.0, 0.0}, {3.0, 1.0}};
    CHECK_THROWS_AS(types.validate(), ValidationError);
    types.entries = {{1.0, 1.2}};
    CHECK_THROWS_AS(types.validate(), ValidationError);
  }
  SUBCASE("sum tolerance is 1e-9") {
    types.entries = {{1.0, 0.5}, {3.0, 0.5 + 5e-10}};
    CHECK_NOTHROW(types.validate());
    types.entries = {{1.0, 0.5}, {3.0, 0.5 + 5e-9}};
    CHECK_THROWS_AS(types.validate(), ValidationError);
  }
}

TEST_CASE("mechanism config validation") {
  auto cfg = table1();
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.num_types() == 3);

  SUBCASE("max_difficulty") {
    cfg.max_difficulty = 0;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
  }
  SUBCASE("alpha") {
    cfg.alpha = -0.1;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
  }
  SUBCASE("beta") {
    cfg.beta = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
  }
  SUBCASE("N") {
    cfg.num_agents = 0;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
  }
}

TEST_CASE("difficulty vector validation") {
  const auto cfg = table1();
  CHECK_NOTHROW(validate(cfg, DifficultyVector{{1, 6, 12}}));
  CHECK_THROWS_AS(validate(cfg, DifficultyVector{{1, 6}}), ValidationError);
  CHECK_THROWS_AS(validate(cfg, DifficultyVector{{0, 6, 12}}), ValidationError);
  CHECK_THROWS_AS(validate(cfg, DifficultyVector{{1, 6, 13}}), ValidationError);
}

TEST_CASE("weight vector validation") {
  const auto cfg = table1();
  CHECK_NOTHROW(validate(cfg, WeightVector{{1.0, 2.0, 5.0}}));
  CHECK_THROWS_AS(validate(cfg, WeightVector{{1.0, 2.0}}), ValidationError);
  CHECK_THROWS_AS(validate(cfg, WeightVector{{1.0, 0.5, 5.0}}),
                  ValidationError);

  SUBCASE("mechanism provenance pins the first weight") {
    CHECK_THROWS_AS(validate(cfg, WeightVector{{1.5, 2.0, 5.0}}),
                    ValidationError);
    CHECK_NOTHROW(
        validate(cfg, WeightVector{{1.5, 2.0, 5.0}}, Provenance::baseline));
  }
  SUBCASE("assignment validation composes both") {
    Assignment a{DifficultyVector{{4, 6, 8}},
                 WeightVector{{4.0, 5.0, 7.0}}, Provenance::baseline};
    CHECK_NOTHROW(validate(cfg, a));
    a.provenance = Provenance::mechanism;
    CHECK_THROWS_AS(validate(cfg, a), ValidationError);
  }
}
