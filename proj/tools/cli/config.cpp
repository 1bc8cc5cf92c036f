#include "cli/config.hpp"

#include <fstream>
#include <sstream>

namespace smartmine::cli {

using nlohmann::json;

namespace {

class Reader {
public:
  std::vector<Violation> errors;

  double number(const json& obj, const char* key, const std::string& where, bool required,
                double fallback = 0.0) {
    if (!obj.contains(key)) {
      if (required) errors.push_back({"missing_field", where + ": missing '" + key + "'"});
      return fallback;
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) {
      errors.push_back({"type_error", where + ": '" + key + "' must be a number"});
      return fallback;
    }
    return v.get<double>();
  }

  std::string string(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) {
      errors.push_back({"missing_field", where + ": missing '" + key + "'"});
      return {};
    }
    const auto& v = obj.at(key);
    if (!v.is_string()) {
      errors.push_back({"type_error", where + ": '" + key + "' must be a string"});
      return {};
    }
    return v.get<std::string>();
  }
};

}  // namespace

Scenario parse_config(const json& doc) {
  Reader rd;
  Scenario sc;
  if (!doc.is_object()) throw ConfigError("type_error", "config must be a JSON object");

  if (!doc.contains("coin") || !doc["coin"].is_object()) {
    rd.errors.push_back({"missing_field", "config: missing object 'coin'"});
  } else {
    const auto& coin = doc["coin"];
    sc.coin.tau = rd.number(coin, "tau", "coin", true, 1.0);
    sc.coin.epsilon = rd.number(coin, "epsilon", "coin", false, 0.0);
    if (coin.contains("clamp") && !coin["clamp"].is_null())
      sc.coin.clamp = rd.number(coin, "clamp", "coin", true);
  }

  if (!doc.contains("miners") || !doc["miners"].is_array()) {
    rd.errors.push_back({"missing_field", "config: missing array 'miners'"});
  } else {
    std::size_t idx = 0;
    for (const auto& m : doc["miners"]) {
      const std::string where = "miners[" + std::to_string(idx++) + "]";
      if (!m.is_object()) {
        rd.errors.push_back({"type_error", where + ": must be an object"});
        continue;
      }
      MinerParams miner;
      miner.id = rd.string(m, "id", where);
      miner.m = rd.number(m, "m", where, true);
      miner.fc = rd.number(m, "fc", where, false);
      miner.vc = rd.number(m, "vc", where, false);
      sc.miners.push_back(std::move(miner));
    }
  }

  if (doc.contains("schedules")) {
    if (!doc["schedules"].is_array()) {
      rd.errors.push_back({"type_error", "config: 'schedules' must be an array"});
    } else {
      std::size_t idx = 0;
      for (const auto& s : doc["schedules"]) {
        const std::string where = "schedules[" + std::to_string(idx++) + "]";
        if (!s.is_object()) {
          rd.errors.push_back({"type_error", where + ": must be an object"});
          continue;
        }
        StrategySchedule schedule;
        schedule.miner_id = rd.string(s, "miner_id", where);
        if (!s.contains("powers") || !s["powers"].is_array()) {
          rd.errors.push_back({"missing_field", where + ": missing array 'powers'"});
        } else {
          for (const auto& p : s["powers"]) {
            if (!p.is_number()) {
              rd.errors.push_back({"type_error", where + ": powers must be numbers"});
              continue;
            }
            schedule.powers.push_back(p.get<double>());
          }
        }
        if (s.contains("offset")) {
          const auto& off = s["offset"];
          if (!off.is_number_integer() || off.get<long long>() < 0) {
            rd.errors.push_back({"type_error", where + ": 'offset' must be a non-negative integer"});
          } else {
            schedule.offset = off.get<std::size_t>();
          }
        }
        sc.schedules.push_back(std::move(schedule));
      }
    }
  }

  bool calibrated = true;
  if (doc.contains("reward")) {
    const auto& r = doc["reward"];
    if (r.is_string() && r.get<std::string>() == "calibrated") {
      calibrated = true;
    } else if (r.is_number()) {
      calibrated = false;
      sc.coin.w = r.get<double>();
    } else {
      rd.errors.push_back({"type_error", "config: 'reward' must be \"calibrated\" or a number"});
    }
  }

  if (!rd.errors.empty()) throw ConfigError(std::move(rd.errors));

  if (calibrated) {
    // Calibration needs valid miners; report their violations with the rest.
    bool miners_ok = !sc.miners.empty();
    for (const auto& m : sc.miners) miners_ok = miners_ok && validate_miner(m).empty();
    if (miners_ok) sc.coin.w = calibrate_reward(sc.miners, sc.coin.tau, sc.coin.epsilon);
  }
  require_valid(sc);
  return sc;
}

Scenario load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("parse_error", std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(doc);
}

nlohmann::ordered_json scenario_to_json(const Scenario& scenario) {
  using json = nlohmann::ordered_json;
  json coin = {{"tau", scenario.coin.tau}, {"epsilon", scenario.coin.epsilon}};
  if (scenario.coin.clamp) coin["clamp"] = *scenario.coin.clamp;
  json miners = json::array();
  for (const auto& m : scenario.miners) miners.push_back({{"id", m.id}, {"m", m.m}, {"fc", m.fc}, {"vc", m.vc}});
  json schedules = json::array();
  for (const auto& s : scenario.schedules)
    schedules.push_back({{"miner_id", s.miner_id}, {"powers", s.powers}, {"offset", s.offset}});
  return {{"coin", coin}, {"miners", miners}, {"schedules", schedules}, {"reward", scenario.coin.w}};
}

}  // namespace smartmine::cli
