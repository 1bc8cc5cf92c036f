#pragma once

#include "smartmine/model.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>

namespace smartmine::cli {

/// A file could not be read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Build a validated scenario from a config document:
///
///   {"coin": {"tau": 600, "epsilon": 0, "clamp": 4},
///    "miners": [{"id": "a", "m": 20, "fc": 0.03, "vc": 0.0085}],
///    "schedules": [{"miner_id": "a", "powers": [0, 20], "offset": 0}],
///    "reward": "calibrated"}
///
/// `reward` is "calibrated" (the default) or an explicit positive number.
/// Throws ConfigError listing every problem found.
Scenario parse_config(const nlohmann::json& doc);

/// Read and parse a config file. Throws IoError if it cannot be read.
Scenario load_config(const std::filesystem::path& path);

/// Scenario rendered back to the config schema, with the numeric reward.
nlohmann::ordered_json scenario_to_json(const Scenario& scenario);

}  // namespace smartmine::cli
