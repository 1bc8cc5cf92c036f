#include "smartmine/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smartmine {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "invalid scenario";
  for (const auto& v : violations) out << "; " << v.message;
  return out.str();
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

ConfigError::ConfigError(std::vector<Violation> violations)
    : std::runtime_error(join_messages(violations)), violations_(std::move(violations)) {}

ConfigError::ConfigError(std::string code, std::string message)
    : ConfigError(std::vector<Violation>{{std::move(code), std::move(message)}}) {}

StalledEpochError::StalledEpochError(std::size_t epoch)
    : std::runtime_error("stalled epoch " + std::to_string(epoch) + ": no active hash power"),
      epoch_(epoch) {}

StrategySchedule honest_schedule(const MinerParams& miner) {
  return StrategySchedule{miner.id, {miner.m}, 0};
}

StrategySchedule smarter_schedule(const MinerParams& miner, double delta) {
  return StrategySchedule{miner.id, {miner.m - delta, miner.m}, 0};
}

double Scenario::total_power() const noexcept {
  double total = 0.0;
  for (const auto& miner : miners) total += miner.m;
  return total;
}

const MinerParams* Scenario::find_miner(std::string_view id) const noexcept {
  auto it = std::find_if(miners.begin(), miners.end(), [&](const auto& m) { return m.id == id; });
  return it == miners.end() ? nullptr : &*it;
}

const StrategySchedule* Scenario::find_schedule(std::string_view id) const noexcept {
  auto it = std::find_if(schedules.begin(), schedules.end(),
                         [&](const auto& s) { return s.miner_id == id; });
  return it == schedules.end() ? nullptr : &*it;
}

std::vector<StrategySchedule> Scenario::resolved_schedules() const {
  std::vector<StrategySchedule> out;
  out.reserve(miners.size());
  for (const auto& miner : miners) {
    if (const auto* s = find_schedule(miner.id)) {
      out.push_back(*s);
    } else {
      out.push_back(honest_schedule(miner));
    }
  }
  return out;
}

double SimulationTrace::utility_of(std::string_view miner_id) const {
  for (const auto& u : utilities) {
    if (u.miner_id == miner_id) return u.utility;
  }
  throw std::out_of_range("no utility for miner '" + std::string(miner_id) + "'");
}

double calibrate_reward(std::span<const MinerParams> miners, double tau, double epsilon) {
  if (miners.empty()) throw ConfigError("empty_miners", "reward calibration needs at least one miner");
  for (const auto& miner : miners) {
    if (auto v = validate_miner(miner); !v.empty()) throw ConfigError(std::move(v));
  }
  double total = 0.0;
  for (const auto& miner : miners) total += miner.fc + miner.vc * miner.m + epsilon;
  return tau * total;
}

std::vector<Violation> validate_miner(const MinerParams& miner) {
  std::vector<Violation> out;
  const auto who = [&] { return "miner '" + miner.id + "'"; };
  if (miner.id.empty()) out.push_back({"empty_id", "miner id must not be empty"});
  if (!finite(miner.m) || miner.m <= 0.0)
    out.push_back({"invalid_power", who() + ": hash power must be positive"});
  if (!finite(miner.fc) || miner.fc < 0.0)
    out.push_back({"invalid_fixed_cost", who() + ": fixed cost must be non-negative"});
  if (!finite(miner.vc) || miner.vc < 0.0)
    out.push_back({"invalid_variable_cost", who() + ": variable cost must be non-negative"});
  if (out.empty() && !(miner.cost_rate() > 0.0))
    out.push_back({"zero_cost", who() + ": total cost rate fc + vc*m must be positive"});
  return out;
}

std::vector<Violation> validate_coin(const CoinParams& coin) {
  std::vector<Violation> out;
  if (!finite(coin.tau) || coin.tau <= 0.0) out.push_back({"invalid_tau", "tau must be positive"});
  if (!finite(coin.epsilon) || coin.epsilon < 0.0)
    out.push_back({"invalid_epsilon", "epsilon must be non-negative"});
  if (!finite(coin.w) || coin.w <= 0.0) out.push_back({"invalid_reward", "epoch reward w must be positive"});
  if (coin.clamp && (!finite(*coin.clamp) || *coin.clamp <= 1.0))
    out.push_back({"invalid_clamp", "clamp must be greater than 1"});
  return out;
}

std::vector<Violation> validate_scenario(const CoinParams& coin,
                                         std::span<const MinerParams> miners,
                                         std::span<const StrategySchedule> schedules) {
  std::vector<Violation> out = validate_coin(coin);
  if (miners.empty()) out.push_back({"empty_miners", "scenario has no miners"});

  std::set<std::string> ids;
  for (const auto& miner : miners) {
    auto v = validate_miner(miner);
    out.insert(out.end(), v.begin(), v.end());
    if (!ids.insert(miner.id).second)
      out.push_back({"duplicate_id", "duplicate id '" + miner.id + "'"});
  }

  std::set<std::string> scheduled;
  for (const auto& schedule : schedules) {
    const std::string who = "schedule for '" + schedule.miner_id + "'";
    auto miner = std::find_if(miners.begin(), miners.end(),
                              [&](const auto& m) { return m.id == schedule.miner_id; });
    if (miner == miners.end()) {
      out.push_back({"unknown_miner", who + ": unknown miner"});
    }
    if (!scheduled.insert(schedule.miner_id).second)
      out.push_back({"duplicate_schedule", who + ": miner scheduled more than once"});
    if (schedule.powers.empty()) {
      out.push_back({"empty_schedule", who + ": period must be at least 1"});
      continue;
    }
    for (std::size_t j = 0; j < schedule.powers.size(); ++j) {
      const double p = schedule.powers[j];
      const std::string where = who + " entry " + std::to_string(j);
      if (!finite(p) || p < 0.0) {
        out.push_back({"negative_power", where + ": power must be non-negative"});
      } else if (miner != miners.end() && p > miner->m) {
        out.push_back({"power_exceeds_capacity", where + ": power exceeds capacity"});
      }
    }
  }
  return out;
}

std::vector<Violation> validate_scenario(const Scenario& scenario) {
  return validate_scenario(scenario.coin, scenario.miners, scenario.schedules);
}

void require_valid(const Scenario& scenario) {
  if (auto v = validate_scenario(scenario); !v.empty()) throw ConfigError(std::move(v));
}

}  // namespace smartmine
