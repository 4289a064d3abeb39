#include "tanglerate/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tanglerate {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& src, const std::string& msg) {
  throw ConfigError(src + ": " + msg);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where, const std::string& src) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return it.key() == k; });
    if (!known) fail(src, "unknown key \"" + it.key() + "\" in " + where);
  }
}

const json& get_field(const json& obj, const char* key,
                      const std::string& where, const std::string& src) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(src, "missing key \"" + std::string(key) + "\" in " + where);
  return *it;
}

double as_number(const json& v, const char* key, const std::string& src) {
  if (!v.is_number()) fail(src, "\"" + std::string(key) + "\" must be a number");
  return v.get<double>();
}

std::int64_t as_integer(const json& v, const char* key, const std::string& src) {
  if (!v.is_number_integer())
    fail(src, "\"" + std::string(key) + "\" must be an integer");
  return v.get<std::int64_t>();
}

const char* arrival_model_name(ArrivalModel m) {
  return m == ArrivalModel::poisson ? "poisson" : "deterministic";
}

}  // namespace

void RunConfig::validate() const {
  mechanism.validate();
  if (sim.horizon < 1) throw ValidationError("horizon must be at least 1");
  if (sweep) {
    if (sweep->empty()) throw ValidationError("sweep_N must not be empty");
    for (const auto N : *sweep)
      if (N < 1) throw ValidationError("sweep_N entries must be at least 1");
  }
}

std::vector<std::int64_t> RunConfig::solve_sweep() const {
  if (sweep) return *sweep;
  return {100, 1000, 10000, 100000};
}

std::vector<std::int64_t> RunConfig::simulate_sweep() const {
  if (sweep) return *sweep;
  return {mechanism.num_agents};
}

RunConfig parse_config(const std::string& text,
                       const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(source_name, std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(source_name, "top level must be an object");
  reject_unknown(doc,
                 {"types", "max_difficulty", "alpha", "beta", "u0", "N",
                  "sweep_N", "sim", "baseline"},
                 "the top level", source_name);

  RunConfig rc;
  rc.mechanism.num_agents = 100;

  const json& types = get_field(doc, "types", "the top level", source_name);
  if (!types.is_array() || types.empty())
    fail(source_name, "\"types\" must be a non-empty array");
  for (const auto& entry : types) {
    if (!entry.is_object()) fail(source_name, "\"types\" entries must be objects");
    reject_unknown(entry, {"x", "p"}, "a types entry", source_name);
    AgentType t;
    t.power = as_number(get_field(entry, "x", "a types entry", source_name),
                        "x", source_name);
    t.fraction = as_number(get_field(entry, "p", "a types entry", source_name),
                           "p", source_name);
    rc.mechanism.types.entries.push_back(t);
  }

  const auto md = as_integer(
      get_field(doc, "max_difficulty", "the top level", source_name),
      "max_difficulty", source_name);
  if (md < 1 || md > 64) fail(source_name, "\"max_difficulty\" must be in 1..64");
  rc.mechanism.max_difficulty = static_cast<int>(md);
  rc.mechanism.alpha = as_number(
      get_field(doc, "alpha", "the top level", source_name), "alpha",
      source_name);
  rc.mechanism.beta = as_number(
      get_field(doc, "beta", "the top level", source_name), "beta",
      source_name);
  rc.mechanism.u0 = as_number(get_field(doc, "u0", "the top level", source_name),
                              "u0", source_name);
  if (doc.contains("N"))
    rc.mechanism.num_agents = as_integer(doc["N"], "N", source_name);

  if (doc.contains("sweep_N")) {
    const json& sw = doc["sweep_N"];
    if (!sw.is_array() || sw.empty())
      fail(source_name, "\"sweep_N\" must be a non-empty array");
    std::vector<std::int64_t> values;
    for (const auto& v : sw)
      values.push_back(as_integer(v, "sweep_N", source_name));
    rc.sweep = std::move(values);
  }

  if (doc.contains("sim")) {
    const json& sim = doc["sim"];
    if (!sim.is_object()) fail(source_name, "\"sim\" must be an object");
    reject_unknown(sim, {"horizon", "seed", "arrival_model"}, "\"sim\"",
                   source_name);
    if (sim.contains("horizon"))
      rc.sim.horizon = as_integer(sim["horizon"], "horizon", source_name);
    if (sim.contains("seed")) {
      const auto seed = as_integer(sim["seed"], "seed", source_name);
      if (seed < 0) fail(source_name, "\"seed\" must be non-negative");
      rc.sim.seed = static_cast<std::uint64_t>(seed);
    }
    if (sim.contains("arrival_model")) {
      const json& am = sim["arrival_model"];
      if (!am.is_string())
        fail(source_name, "\"arrival_model\" must be a string");
      const auto name = am.get<std::string>();
      if (name == "poisson")
        rc.sim.arrival_model = ArrivalModel::poisson;
      else if (name == "deterministic")
        rc.sim.arrival_model = ArrivalModel::deterministic;
      else
        fail(source_name, "\"arrival_model\" must be \"poisson\" or "
                          "\"deterministic\", got \"" + name + "\"");
    }
  }

  if (doc.contains("baseline")) {
    const json& base = doc["baseline"];
    if (!base.is_object()) fail(source_name, "\"baseline\" must be an object");
    reject_unknown(base, {"slope", "intercept"}, "\"baseline\"", source_name);
    if (base.contains("slope"))
      rc.baseline.slope = as_number(base["slope"], "slope", source_name);
    if (base.contains("intercept"))
      rc.baseline.intercept =
          as_number(base["intercept"], "intercept", source_name);
  }

  try {
    rc.validate();
  } catch (const ValidationError& e) {
    fail(source_name, e.what());
  }
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str(), path);
}

std::string effective_config_json(const RunConfig& rc) {
  json doc;
  doc["types"] = json::array();
  for (const auto& t : rc.mechanism.types.entries)
    doc["types"].push_back({{"x", t.power}, {"p", t.fraction}});
  doc["max_difficulty"] = rc.mechanism.max_difficulty;
  doc["alpha"] = rc.mechanism.alpha;
  doc["beta"] = rc.mechanism.beta;
  doc["u0"] = rc.mechanism.u0;
  doc["N"] = rc.mechanism.num_agents;
  if (rc.sweep) doc["sweep_N"] = *rc.sweep;
  doc["sim"] = {{"horizon", rc.sim.horizon},
                {"seed", rc.sim.seed},
                {"arrival_model", arrival_model_name(rc.sim.arrival_model)}};
  doc["baseline"] = {{"slope", rc.baseline.slope},
                     {"intercept", rc.baseline.intercept}};
  return doc.dump(2);
}

}  // namespace tanglerate
